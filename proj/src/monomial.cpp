#include "nambu/monomial.hpp"

#include <cassert>
#include <numeric>

namespace nambu {

int total_deg(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool mono_divides(const Expo& a, const Expo& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expo mono_mul(const Expo& a, const Expo& b) {
    assert(a.size() == b.size());
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Expo mono_div(const Expo& a, const Expo& b) {
    assert(a.size() == b.size());
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        assert(r[i] >= 0);
    }
    return r;
}

Expo mono_lcm(const Expo& a, const Expo& b) {
    assert(a.size() == b.size());
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

bool mono_less(const Expo& a, const Expo& b, MonoOrder order) {
    assert(a.size() == b.size());
    if (order == MonoOrder::Degrevlex) {
        const int da = total_deg(a), db = total_deg(b);
        if (da != db) return da < db;
        // a < b iff the last nonzero entry of a-b is positive
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }
    if (order == MonoOrder::Deglex) {
        const int da = total_deg(a), db = total_deg(b);
        if (da != db) return da < db;
    }
    // lex tail: a < b iff the first nonzero entry of a-b is negative
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

namespace {

void enumerate_degree(int nvars, int pos, int remaining, Expo& cur,
                      std::vector<Expo>& out) {
    if (pos == nvars - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    // exponent of the earlier variable descends: x^d first, then x^{d-1}y, ...
    for (int k = remaining; k >= 0; --k) {
        cur[pos] = k;
        enumerate_degree(nvars, pos + 1, remaining - k, cur, out);
    }
    cur[pos] = 0;
}

} // namespace

std::vector<Expo> monomials_up_to(int nvars, int maxdeg) {
    std::vector<Expo> out;
    out.reserve(count_monomials_up_to(nvars, maxdeg));
    Expo cur(nvars, 0);
    for (int d = 0; d <= maxdeg; ++d) enumerate_degree(nvars, 0, d, cur, out);
    return out;
}

std::size_t count_monomials_up_to(int nvars, int maxdeg) {
    // C(nvars + maxdeg, nvars)
    std::size_t r = 1;
    for (int i = 1; i <= nvars; ++i)
        r = r * static_cast<std::size_t>(maxdeg + i) / static_cast<std::size_t>(i);
    return r;
}

} // namespace nambu
