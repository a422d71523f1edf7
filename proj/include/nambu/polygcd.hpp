#ifndef NAMBU_POLYGCD_HPP
#define NAMBU_POLYGCD_HPP

#include <span>

#include "nambu/poly.hpp"

namespace nambu {

// Exact multivariate gcd over Q, normalized primitive with positive
// leading coefficient. gcd(0, 0) is an error.
Poly poly_gcd(const Poly& a, const Poly& b);

// gcd of a family; at least one input must be nonzero.
Poly content_gcd(std::span<const Poly> ps);

// f / gcd(f, df/dx_1, ..., df/dx_n), monic. Strips repeated factors.
Poly squarefree_part(const Poly& f);

} // namespace nambu

#endif
