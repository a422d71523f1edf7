#include "nambu/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "nambu/errors.hpp"

namespace nambu {

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, MonoOrder order) {
    Poly rem = f;
    Poly out(f.nvars());
    while (!rem.is_zero()) {
        const auto& [lm, lc] = rem.leading_term(order);
        bool reduced = false;
        for (const Poly& g : basis) {
            if (g.is_zero()) continue;
            const auto& [gm, gc] = g.leading_term(order);
            if (!mono_divides(gm, lm)) continue;
            rem = rem - g.mul_term(mono_div(lm, gm), lc / gc);
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the irreducible leading term to the output
            Poly t = Poly::monomial(lm, lc);
            out = out + t;
            rem = rem - t;
        }
    }
    return out;
}

namespace {

bool coprime_leading(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

Poly s_poly(const Poly& f, const Poly& g, MonoOrder order) {
    const auto& [fm, fc] = f.leading_term(order);
    const auto& [gm, gc] = g.leading_term(order);
    const Expo l = mono_lcm(fm, gm);
    return f.mul_term(mono_div(l, fm), Rat(1) / fc) -
           g.mul_term(mono_div(l, gm), Rat(1) / gc);
}

} // namespace

PolyIdeal groebner_basis(const PolyIdeal& ideal, MonoOrder order) {
    std::vector<Poly> basis;
    for (const Poly& g : ideal.generators)
        if (!g.is_zero()) basis.push_back(make_monic(g, order));
    if (basis.empty()) return {};

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Expo& mi = basis[i].leading_term(order).first;
        const Expo& mj = basis[j].leading_term(order).first;
        if (coprime_leading(mi, mj)) continue; // Buchberger's first criterion
        Poly s = normal_form(s_poly(basis[i], basis[j], order), basis, order);
        if (s.is_zero()) continue;
        s = make_monic(s, order);
        for (std::size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
        basis.push_back(std::move(s));
    }

    // minimalize: drop generators whose leading term is divisible by another's
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Expo& mi = basis[i].leading_term(order).first;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Expo& mj = basis[j].leading_term(order).first;
            if (mono_divides(mj, mi) && (mj != mi || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // inter-reduce
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = normal_form(minimal[i], others, order);
        if (!r.is_zero()) reduced.push_back(make_monic(r, order));
    }

    std::sort(reduced.begin(), reduced.end(), [order](const Poly& a, const Poly& b) {
        return mono_less(b.leading_term(order).first, a.leading_term(order).first, order);
    });
    return {std::move(reduced)};
}

bool ideal_contains(const PolyIdeal& groebner, const Poly& f, MonoOrder order) {
    return normal_form(f, groebner.generators, order).is_zero();
}

VarietyCodim variety_codim(const PolyIdeal& ideal, MonoOrder order) {
    PolyIdeal gb = groebner_basis(ideal, order);
    const int n = ideal.generators.empty() ? 0 : ideal.generators[0].nvars();
    if (gb.generators.empty()) return {false, 0};
    for (const Poly& g : gb.generators)
        if (g.is_constant() && !g.is_zero()) return {true, n};

    std::vector<Expo> lts;
    for (const Poly& g : gb.generators) lts.push_back(g.leading_term(order).first);

    // Krull dimension of the staircase: the largest subset S of variables
    // such that no leading monomial is supported entirely inside S.
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const Expo& m : lts) {
            bool inside = true;
            for (int v = 0; v < n && inside; ++v)
                if (m[v] > 0 && !(mask & (1u << v))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return {false, n - best};
}

} // namespace nambu
