#include "nambu/polygcd.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "nambu/errors.hpp"

namespace nambu {

namespace {

int deg_in(const Poly& p, int k) {
    int d = -1;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e[k]);
    return d;
}

// View p as univariate in x_k: degree -> coefficient polynomial.
std::map<int, Poly> univ_coeffs(const Poly& p, int k) {
    std::map<int, Poly> out;
    for (const auto& [e, c] : p.terms()) {
        Expo m = e;
        const int d = m[k];
        m[k] = 0;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, Poly(p.nvars())).first;
        it->second = it->second + Poly::monomial(std::move(m), c);
    }
    return out;
}

Poly lead_coeff_in(const Poly& p, int k) {
    const int d = deg_in(p, k);
    Poly lc(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[k] != d) continue;
        Expo m = e;
        m[k] = 0;
        lc = lc + Poly::monomial(std::move(m), c);
    }
    return lc;
}

Poly xk_pow(int nvars, int k, int d) {
    Expo e(nvars, 0);
    e[k] = d;
    return Poly::monomial(std::move(e), Rat(1));
}

// gcd of the x_k-coefficients of p.
Poly content_in(const Poly& p, int k) {
    Poly c(p.nvars());
    for (const auto& [d, coeff] : univ_coeffs(p, k)) c = poly_gcd(c, coeff);
    return c;
}

// Pseudo-remainder of a by b in x_k, together with the power of lc(b)
// that was actually applied (needed for the subresultant bookkeeping).
std::pair<Poly, int> pseudo_rem(const Poly& a, const Poly& b, int k) {
    const Poly lb = lead_coeff_in(b, k);
    const int db = deg_in(b, k);
    Poly r = a;
    int applied = 0;
    while (!r.is_zero() && deg_in(r, k) >= db) {
        const int dr = deg_in(r, k);
        const Poly lr = lead_coeff_in(r, k);
        r = r * lb - b * (lr * xk_pow(a.nvars(), k, dr - db));
        ++applied;
    }
    return {std::move(r), applied};
}

// Subresultant polynomial remainder sequence on primitive parts.
Poly prs_gcd(Poly A, Poly B, int k) {
    if (deg_in(A, k) < deg_in(B, k)) std::swap(A, B);
    const int nvars = A.nvars();
    Poly g = Poly::constant(nvars, Rat(1));
    Poly h = Poly::constant(nvars, Rat(1));
    for (;;) {
        const int delta = deg_in(A, k) - deg_in(B, k);
        auto [R, applied] = pseudo_rem(A, B, k);
        // pad to the exact pseudo-remainder lc(B)^(delta+1) * A mod B
        if (applied < delta + 1) {
            Poly lb = lead_coeff_in(B, k);
            for (int i = applied; i < delta + 1; ++i) R = R * lb;
        }
        if (R.is_zero()) break;
        if (deg_in(R, k) == 0) return Poly::constant(nvars, Rat(1));
        A = B;
        B = divexact(R, g * h.pow(static_cast<unsigned>(delta)));
        g = lead_coeff_in(A, k);
        if (delta >= 1) {
            Poly gd = g.pow(static_cast<unsigned>(delta));
            h = delta == 1 ? gd : divexact(gd, h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
    return divexact(B, content_in(B, k)); // primitive part
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw HypothesisError("poly_gcd: gcd of two zero polynomials");
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    assert(a.nvars() == b.nvars());
    if (a.is_constant() || b.is_constant())
        return Poly::constant(a.nvars(), Rat(1));

    // main variable: last one occurring in either operand
    int k = -1;
    for (int i = a.nvars() - 1; i >= 0 && k < 0; --i)
        if (deg_in(a, i) > 0 || deg_in(b, i) > 0) k = i;
    assert(k >= 0);

    if (deg_in(a, k) == 0) return poly_gcd(a, content_in(b, k));
    if (deg_in(b, k) == 0) return poly_gcd(content_in(a, k), b);

    const Poly ca = content_in(a, k);
    const Poly cb = content_in(b, k);
    const Poly cc = poly_gcd(ca, cb);
    const Poly g = prs_gcd(divexact(a, ca), divexact(b, cb), k);
    return normalize_primitive(cc * g);
}

Poly content_gcd(std::span<const Poly> ps) {
    Poly acc;
    bool seeded = false;
    for (const Poly& p : ps) {
        if (p.is_zero()) continue;
        if (!seeded) {
            acc = p;
            seeded = true;
        } else {
            acc = poly_gcd(acc, p);
        }
        if (acc.is_constant()) break;
    }
    if (!seeded) throw HypothesisError("content_gcd: all inputs are zero");
    return normalize_primitive(acc);
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) throw HypothesisError("squarefree_part: zero polynomial");
    Poly g = f;
    for (int i = 0; i < f.nvars(); ++i) {
        Poly fi = partial_derivative(f, i);
        if (fi.is_zero()) continue;
        g = poly_gcd(g, fi);
        if (g.is_constant()) break;
    }
    if (g.is_constant()) return make_monic(f);
    return make_monic(divexact(f, g));
}

} // namespace nambu
