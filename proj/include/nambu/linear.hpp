#ifndef NAMBU_LINEAR_HPP
#define NAMBU_LINEAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "nambu/linalg.hpp"
#include "nambu/tensor.hpp"

namespace nambu {

// Linear vector field X = sum_{i,j} M(i,j) x_i d/dx_j.
MultiVec linear_vector_field(const RatMat& m);
std::optional<RatMat> matrix_of_linear_field(const MultiVec& x);

// Rank of Z -> MZ - ZM on n x n matrices; equals n^2 - dim(centralizer).
int adjoint_orbit_dim(const RatMat& m);

// Centralizer dimension by an independently assembled nullspace computation.
int centralizer_dim(const RatMat& m);

struct ResonanceResult {
    enum class Status { Nonresonant, Resonant, Unknown };
    Status status = Status::Unknown;
    int witness_i = -1;            // resonant eigenvalue index (0-based)
    std::vector<long> witness_m;   // lambda_i = sum m_j lambda_j, |m| >= 2
    long order_bound = 0;          // search bound that was exhausted (Unknown)
    std::vector<Rat> eigenvalues;  // filled when the spectrum is rational
    bool rational_spectrum = false;
};

// Standard small-denominator convention: a relation lambda_i = <m, lambda>
// with m in N^n and |m| >= 2 is a resonance. Exact decision for rational
// spectra with all eigenvalues on one side of 0 (and for any spectrum
// containing 0); otherwise the search is exhaustive up to |m| <= K.
ResonanceResult is_nonresonant(const RatMat& m, long order_bound = 12);

struct DhLinReport {
    long orbit_dim = 0;          // d
    long dim_tensor = 0;         // n^2 - d
    long dim_foliation = 0;      // n^2 - dim(image of ad + line through M)
    bool shift_line_independent = false; // M not in the image of ad_M
};

DhLinReport dh_lin(const RatMat& m);

enum class LinearNambuKind { Type1, Type2, NotLinearNambu };

struct LinearNambuClass {
    LinearNambuKind kind = LinearNambuKind::NotLinearNambu;
    std::optional<RatMat> Q;       // symmetric matrix of the quadric (Type 1)
    std::optional<RatMat> B;       // linear factor matrix on the block (Type 2)
    std::vector<int> block;        // variable indices carrying Q or B
    bool nondegenerate_Q = false;
    std::string rigidity_note;
};

// Recognize the two normal forms in the coordinates as given (up to
// reordering): Type 2 is e_S ^ (linear field on the complementary block),
// Type 1 dualizes to dx_S' ^ dQ with Q quadratic.
LinearNambuClass classify_linear_nambu(const MultiVec& lambda);

} // namespace nambu

#endif
