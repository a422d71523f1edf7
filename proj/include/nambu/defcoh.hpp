#ifndef NAMBU_DEFCOH_HPP
#define NAMBU_DEFCOH_HPP

#include <optional>

#include "nambu/jets.hpp"
#include "nambu/tensor.hpp"

namespace nambu {

enum class DefMode { Tensor, Foliation };

struct DeformationCheck {
    bool is_deformation = false;
    int failing_condition = 0; // 0 none, 1 or 2
    std::optional<MultiVec> witness_A;
    std::optional<DiffForm> residual;
};

// Linearized integrability:
//   i_A w ^ eta + i_A eta ^ w = 0  and  i_A w ^ d eta + i_A eta ^ dw = 0
// over the constant basis (p-1)-vectors A.
DeformationCheck is_infinitesimal_deformation(const DiffForm& w, const DiffForm& eta);
DeformationCheck is_infinitesimal_deformation(const MultiVec& base, const MultiVec& cand);

struct TrivialWitness {
    MultiVec X;
    std::optional<Poly> f; // Foliation mode only
};

// Solve L_X base (+ f base) = candidate exactly, with the unknown
// coefficients of X (and f) of degree <= cutoff. A miss at this cutoff is
// not a proof of nontriviality; a found witness is verified exactly.
std::optional<TrivialWitness> is_trivial_deformation(const MultiVec& base,
                                                     const MultiVec& candidate,
                                                     DefMode mode, int cutoff);
std::optional<TrivialWitness> is_trivial_deformation(const DiffForm& base,
                                                     const DiffForm& candidate,
                                                     DefMode mode, int cutoff);

// dim O_n / <df/dx_1, ..., df/dx_n>; requires f(0) = 0.
QuotientReport milnor_number(const Poly& f, const TruncationPolicy& policy = {});

// dim O_n / <f, df/dx_1, ..., df/dx_n>; requires f(0) = 0.
QuotientReport tjurina_number(const Poly& f, const TruncationPolicy& policy = {});

// Deformation space of f d/dx_1 ^ ... ^ d/dx_n near a singular point of f.
// Foliation mode quotients by { X(f) - (div X) f + g f } and coincides with
// the Tjurina quotient; Tensor mode quotients by { X(f) - (div X) f } only.
QuotientReport dh_top_order(const Poly& f, DefMode mode, const TruncationPolicy& policy = {});

struct RlProblem {
    std::vector<Poly> F; // (f_1, ..., f_p)
    TruncationPolicy policy;
};

// Tangent space to right-left equivalence inside O_n^p:
//   ogenerators (d f_1/dx_i, ..., d f_p/dx_i) spanning { X.F },
//   cgenerators f^beta e_j spanning { H(F) } up to the cutoff.
// Constant tuples are included (beta = 0).
SubmoduleSpec rl_submodule(const std::vector<Poly>& F, int max_cutoff);

QuotientReport rl_quotient_dim(const RlProblem& problem);

// Same dimension under the small-singular-set hypothesis
// codim S(df_1^...^df_p) >= p + 2, verified on the maximal-minor ideal.
QuotientReport dh_decomposable_foliation(const std::vector<Poly>& F,
                                         const TruncationPolicy& policy = {});

struct Decomposition {
    Poly a0;
    std::vector<Poly> a; // a_1, ..., a_p
};

// eta = a_0 df_1^...^df_p + sum_i df_1^...^da_i^...^df_p, solved exactly
// with unknowns of degree <= cutoff.
std::optional<Decomposition> decompose_deformation(const std::vector<Poly>& F,
                                                   const DiffForm& eta, int cutoff);

} // namespace nambu

#endif
