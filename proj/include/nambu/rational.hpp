#ifndef NAMBU_RATIONAL_HPP
#define NAMBU_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace nambu {

// Exact rational scalar. All core arithmetic runs over Q; there is no
// floating point anywhere in the engine.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline bool is_one(const Rat& r) { return r == 1; }

// "p" or "p/q", canonical form.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace nambu

#endif
