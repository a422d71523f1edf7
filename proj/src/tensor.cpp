#include "nambu/tensor.hpp"

#include <algorithm>

#include "nambu/errors.hpp"

namespace nambu {

namespace {

// Sort a sequence of indices, returning the permutation sign, or 0 on a
// repeated index.
std::pair<IdxSet, int> sort_with_sign(IdxSet idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return {{}, 0};
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    }
    return {std::move(idx), sign};
}

IdxSet set_difference(const IdxSet& a, const IdxSet& b) {
    IdxSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const IdxSet& a, const IdxSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <class Kind>
Skew<Kind> wedge_impl(const Skew<Kind>& a, const Skew<Kind>& b) {
    assert(a.nvars() == b.nvars());
    const int deg = a.degree() + b.degree();
    if (deg > a.nvars()) return Skew<Kind>::zero(a.nvars(), std::min(deg, a.nvars()));
    Skew<Kind> r(a.nvars(), deg);
    for (const auto& [ia, ca] : a.comps())
        for (const auto& [ib, cb] : b.comps()) {
            IdxSet merged = ia;
            merged.insert(merged.end(), ib.begin(), ib.end());
            auto [sorted, sign] = sort_with_sign(std::move(merged));
            if (sign == 0) continue;
            r.add_component(sorted, ca * cb * Rat(sign));
        }
    return r;
}

} // namespace

int interleave_sign(const IdxSet& a, const IdxSet& b) {
    // both sorted; count inversions between blocks
    int inv = 0;
    for (int x : a)
        for (int y : b) {
            if (x == y) return 0;
            if (x > y) ++inv;
        }
    return (inv % 2 == 0) ? 1 : -1;
}

IdxSet complement_idx(const IdxSet& idx, int nvars) {
    IdxSet out;
    std::size_t k = 0;
    for (int i = 0; i < nvars; ++i) {
        if (k < idx.size() && idx[k] == i) {
            ++k;
            continue;
        }
        out.push_back(i);
    }
    return out;
}

MultiVec vector_field(std::vector<Poly> comps) {
    const int n = static_cast<int>(comps.size());
    MultiVec x(n, 1);
    for (int i = 0; i < n; ++i)
        if (!comps[i].is_zero()) x.add_component({i}, comps[i]);
    return x;
}

std::vector<Poly> field_components(const MultiVec& x) {
    assert(x.degree() == 1);
    std::vector<Poly> out(x.nvars(), Poly::zero(x.nvars()));
    for (const auto& [i, c] : x.comps()) out[i[0]] = c;
    return out;
}

MultiVec wedge(const MultiVec& a, const MultiVec& b) { return wedge_impl(a, b); }
DiffForm wedge(const DiffForm& a, const DiffForm& b) { return wedge_impl(a, b); }

DiffForm contract(const MultiVec& a, const DiffForm& w) {
    assert(a.nvars() == w.nvars());
    if (a.degree() > w.degree())
        throw HypothesisError("contract: multivector degree exceeds form degree");
    DiffForm r(w.nvars(), w.degree() - a.degree());
    for (const auto& [ia, ca] : a.comps())
        for (const auto& [iw, cw] : w.comps()) {
            if (!is_subset(ia, iw)) continue;
            IdxSet rest = set_difference(iw, ia);
            r.add_component(rest, ca * cw * Rat(interleave_sign(ia, rest)));
        }
    return r;
}

MultiVec contract_form(const DiffForm& b, const MultiVec& t) {
    assert(b.nvars() == t.nvars());
    if (b.degree() > t.degree())
        throw HypothesisError("contract_form: form degree exceeds multivector degree");
    MultiVec r(t.nvars(), t.degree() - b.degree());
    for (const auto& [ib, cb] : b.comps())
        for (const auto& [it, ct] : t.comps()) {
            if (!is_subset(ib, it)) continue;
            IdxSet rest = set_difference(it, ib);
            r.add_component(rest, cb * ct * Rat(interleave_sign(ib, rest)));
        }
    return r;
}

DiffForm ext_d(const DiffForm& w) {
    if (w.degree() >= w.nvars()) return DiffForm::zero(w.nvars(), w.nvars());
    DiffForm r(w.nvars(), w.degree() + 1);
    for (const auto& [iw, cw] : w.comps()) {
        for (int v = 0; v < w.nvars(); ++v) {
            Poly dc = partial_derivative(cw, v);
            if (dc.is_zero()) continue;
            IdxSet merged{v};
            merged.insert(merged.end(), iw.begin(), iw.end());
            auto [sorted, sign] = sort_with_sign(std::move(merged));
            if (sign == 0) continue;
            r.add_component(sorted, dc * Rat(sign));
        }
    }
    return r;
}

Poly divergence(const MultiVec& x) {
    assert(x.degree() == 1);
    Poly d = Poly::zero(x.nvars());
    for (const auto& [i, c] : x.comps()) d = d + partial_derivative(c, i[0]);
    return d;
}

Poly apply_vf(const MultiVec& x, const Poly& f) {
    assert(x.degree() == 1);
    Poly r = Poly::zero(x.nvars());
    for (const auto& [i, c] : x.comps()) r = r + c * partial_derivative(f, i[0]);
    return r;
}

MultiVec lie_derivative(const MultiVec& x, const MultiVec& t) {
    assert(x.degree() == 1 && x.nvars() == t.nvars());
    const std::vector<Poly> xc = field_components(x);
    MultiVec r(t.nvars(), t.degree());
    for (const auto& [it, ct] : t.comps()) {
        // transport of the coefficient
        Poly xc_t = apply_vf(x, ct);
        if (!xc_t.is_zero()) r.add_component(it, xc_t);
        // Leibniz over the basis factors: [X, e_j] = -sum_l dX_l/dx_j e_l
        for (std::size_t pos = 0; pos < it.size(); ++pos) {
            const int j = it[pos];
            for (int l = 0; l < t.nvars(); ++l) {
                Poly djl = partial_derivative(xc[l], j);
                if (djl.is_zero()) continue;
                IdxSet replaced = it;
                replaced[pos] = l;
                auto [sorted, sign] = sort_with_sign(std::move(replaced));
                if (sign == 0) continue;
                r.add_component(sorted, ct * djl * Rat(-sign));
            }
        }
    }
    return r;
}

DiffForm lie_derivative(const MultiVec& x, const DiffForm& w) {
    // Cartan: L_X = i_X d + d i_X
    if (w.degree() == 0) {
        // scalar: plain directional derivative
        return DiffForm::scalar(apply_vf(x, w.coeff({})));
    }
    return contract(x, ext_d(w)) + ext_d(contract(x, w));
}

DiffForm dualize(const MultiVec& t) {
    DiffForm r(t.nvars(), t.nvars() - t.degree());
    for (const auto& [it, ct] : t.comps()) {
        IdxSet rest = complement_idx(it, t.nvars());
        r.add_component(rest, ct * Rat(interleave_sign(it, rest)));
    }
    return r;
}

MultiVec co_dualize(const DiffForm& w) {
    MultiVec r(w.nvars(), w.nvars() - w.degree());
    for (const auto& [iw, cw] : w.comps()) {
        IdxSet rest = complement_idx(iw, w.nvars());
        // dualize(rest -> iw) carries sign interleave(rest, iw); invert it
        r.add_component(rest, cw * Rat(interleave_sign(rest, iw)));
    }
    return r;
}

} // namespace nambu
