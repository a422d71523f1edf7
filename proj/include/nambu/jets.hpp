#ifndef NAMBU_JETS_HPP
#define NAMBU_JETS_HPP

#include <optional>
#include <vector>

#include "nambu/poly.hpp"

namespace nambu {

using PolyTuple = std::vector<Poly>; // element of O_n^p

// Finitely presented subspace of O_n^p used for jet quotients.
//   ogenerators: tuples spanning an O_n-submodule (each gets multiplied by
//                every monomial of compatible degree before truncation);
//   cgenerators: tuples entering with constant coefficients only.
struct SubmoduleSpec {
    int nvars = 0;
    int ambient_rank = 1;
    std::vector<PolyTuple> ogenerators;
    std::vector<PolyTuple> cgenerators;
};

struct TruncationPolicy {
    int max_cutoff = 24;
    int window = 2; // consecutive agreeing cutoffs required beyond the first
};

struct QuotientBasisElem {
    int slot = 0; // 0-based component of O_n^p
    Expo mono;
};

// dimension == nullopt means INFINITE_OR_UNSTABLE: the jet dimensions did
// not agree on a full stability window below the cutoff cap.
struct QuotientReport {
    std::optional<long> dimension;
    int cutoff_used = -1;
    bool stabilized = false;
    std::vector<QuotientBasisElem> basis_monomials;
    std::vector<long> dim_history; // jet quotient dimension per cutoff 0,1,...
};

// Dimension of (jets of order <= N of O_n^p) / truncated span of S, for
// N = 0,1,... until `window + 1` consecutive values agree; cutoff_used is
// the first cutoff of the agreeing run.
QuotientReport local_quotient_dim(const SubmoduleSpec& spec, const TruncationPolicy& policy);

// Single-cutoff jet quotient dimension (no stabilization logic).
long jet_quotient_dim_at(const SubmoduleSpec& spec, int cutoff);

// Does the class of `element` vanish in the order-`cutoff` jet quotient?
bool jet_class_is_zero(const SubmoduleSpec& spec, const PolyTuple& element, int cutoff);

enum class ClassStatus { ZeroAtStabilized, NonzeroAtStabilized, Unstable };

// Class membership at the stabilized cutoff (cutoff_used + window).
ClassStatus quotient_class_status(const SubmoduleSpec& spec, const PolyTuple& element,
                                  const TruncationPolicy& policy);

} // namespace nambu

#endif
