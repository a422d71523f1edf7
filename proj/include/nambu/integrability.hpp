#ifndef NAMBU_INTEGRABILITY_HPP
#define NAMBU_INTEGRABILITY_HPP

#include <optional>

#include "nambu/tensor.hpp"

namespace nambu {

struct IntegrabilityVerdict {
    bool integrable = false;
    int failing_condition = 0; // 0 none, 1 or 2
    std::optional<MultiVec> witness_A;
    std::optional<DiffForm> residual;
};

// Both defining conditions of an integrable p-form,
//   w ^ i_A w = 0  and  dw ^ i_A w = 0,
// checked for A ranging over the constant basis (p-1)-vectors only. Both
// sides are O_n-linear in A, so the finite basis decides the full
// quantifier. For p = 1 the first condition is identically zero and the
// second reduces to w ^ dw = 0.
IntegrabilityVerdict is_integrable_form(const DiffForm& w);

// A multivector is Nambu when its contraction with the standard volume
// form is integrable. Degrees 0, 1 and n are unconditionally Nambu and
// short-circuit; degree n-1 is *not* automatic (a contact form in three
// variables dualizes to a degree-2 counterexample) and runs the full check.
IntegrabilityVerdict is_nambu(const MultiVec& t);

} // namespace nambu

#endif
