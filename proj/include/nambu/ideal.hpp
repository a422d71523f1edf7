#ifndef NAMBU_IDEAL_HPP
#define NAMBU_IDEAL_HPP

#include <vector>

#include "nambu/poly.hpp"

namespace nambu {

struct PolyIdeal {
    std::vector<Poly> generators;
};

// Fully reduced normal form of f against basis (every term reduced).
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, MonoOrder order);

// Reduced Groebner basis: monic generators, no leading term divides another,
// every generator reduced against the rest, sorted ascending by leading
// monomial. Deterministic for a given input.
PolyIdeal groebner_basis(const PolyIdeal& ideal, MonoOrder order = MonoOrder::Degrevlex);

bool ideal_contains(const PolyIdeal& groebner, const Poly& f, MonoOrder order);

struct VarietyCodim {
    bool empty_variety = false; // ideal is the whole ring
    int codim = 0;              // nvars - Krull dimension of the staircase
};

VarietyCodim variety_codim(const PolyIdeal& ideal, MonoOrder order = MonoOrder::Degrevlex);

} // namespace nambu

#endif
