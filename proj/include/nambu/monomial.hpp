#ifndef NAMBU_MONOMIAL_HPP
#define NAMBU_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nambu {

// Exponent vector of a monomial; length = number of variables.
using Expo = std::vector<int>;

enum class MonoOrder { Degrevlex, Deglex, Lex };

int total_deg(const Expo& e);

bool mono_divides(const Expo& a, const Expo& b); // a | b
Expo mono_mul(const Expo& a, const Expo& b);
Expo mono_div(const Expo& a, const Expo& b); // requires b | a
Expo mono_lcm(const Expo& a, const Expo& b);

// Strict order a < b under the given monomial order.
bool mono_less(const Expo& a, const Expo& b, MonoOrder order);

struct DegrevlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        return mono_less(a, b, MonoOrder::Degrevlex);
    }
};

// All monomials of total degree <= maxdeg, graded order: degree ascending,
// within a degree lexicographically descending on the exponent vector
// (so x comes before y). This is the canonical enumeration used for jet
// columns and basis output.
std::vector<Expo> monomials_up_to(int nvars, int maxdeg);

std::size_t count_monomials_up_to(int nvars, int maxdeg);

struct ExpoHash {
    std::size_t operator()(const Expo& e) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : e) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace nambu

#endif
