#ifndef NAMBU_FOLIATION_HPP
#define NAMBU_FOLIATION_HPP

#include <optional>
#include <span>

#include "nambu/polygcd.hpp"
#include "nambu/tensor.hpp"

namespace nambu {

struct AssociatedNambu {
    MultiVec lambda;
    Poly cofactor_h;           // content of the raw wedge
    Poly codim1_correction_s;  // reduced equation of a codim-1 singular locus, or 1
    int sing_codim_lambda = 0; // codim of the common zero set of lambda's coefficients
};

// Wedge of tangent generators; throws when they are dependent (zero wedge).
MultiVec wedge_generators(std::span<const MultiVec> fields);

// Divide the wedge by the gcd of its coefficients, optionally multiply back
// a reduced codimension-1 locus equation, and verify the result is Nambu.
AssociatedNambu associated_nambu(std::span<const MultiVec> fields,
                                 const std::optional<Poly>& sing_locus_f = std::nullopt);

struct CitCertificate {
    bool is_cit = false;
    std::optional<Poly> conformal_factor_g;
    std::optional<MultiVec> obstruction;
};

// Conformally invariant tangency: X ^ Lambda = 0 and L_X Lambda = g Lambda
// for a polynomial g, solved by exact division and verified globally.
CitCertificate is_cit(const MultiVec& x, const MultiVec& lambda);

} // namespace nambu

#endif
