#ifndef NAMBU_TENSOR_HPP
#define NAMBU_TENSOR_HPP

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "nambu/poly.hpp"

namespace nambu {

// Strictly increasing 0-based variable indices.
using IdxSet = std::vector<int>;

struct VecKind {};  // multivector fields, basis e_i = d/dx_i
struct FormKind {}; // differential forms, basis dx_i

// Skew tensor of fixed degree with Poly coefficients on strictly
// increasing index tuples. Components are kept sorted; zero coefficients
// are never stored.
template <class Kind>
class Skew {
public:
    using Comp = std::pair<IdxSet, Poly>;

    Skew() : nvars_(0), degree_(0) {}
    Skew(int nvars, int degree) : nvars_(nvars), degree_(degree) {
        assert(degree >= 0 && degree <= nvars);
    }

    static Skew zero(int nvars, int degree) { return Skew(nvars, degree); }

    static Skew basis(int nvars, IdxSet idx) {
        Skew t(nvars, static_cast<int>(idx.size()));
        t.comps_.emplace_back(std::move(idx), Poly::constant(nvars, Rat(1)));
        return t;
    }

    // degree-0 tensor carrying a single function
    static Skew scalar(Poly f) {
        Skew t(f.nvars(), 0);
        if (!f.is_zero()) t.comps_.emplace_back(IdxSet{}, std::move(f));
        return t;
    }

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return comps_.empty(); }
    const std::vector<Comp>& comps() const { return comps_; }

    Poly coeff(const IdxSet& idx) const {
        for (const auto& [i, c] : comps_)
            if (i == idx) return c;
        return Poly::zero(nvars_);
    }

    void add_component(const IdxSet& idx, const Poly& c) {
        assert(static_cast<int>(idx.size()) == degree_);
        for (auto& [i, existing] : comps_) {
            if (i == idx) {
                existing = existing + c;
                if (existing.is_zero()) {
                    std::erase_if(comps_, [&](const Comp& comp) { return comp.first == idx; });
                }
                return;
            }
        }
        if (!c.is_zero()) {
            comps_.emplace_back(idx, c);
            std::sort(comps_.begin(), comps_.end(),
                      [](const Comp& a, const Comp& b) { return a.first < b.first; });
        }
    }

    Skew operator+(const Skew& o) const {
        assert(nvars_ == o.nvars_);
        // zero tensors absorb into the other summand whatever their degree
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        assert(degree_ == o.degree_);
        Skew r = *this;
        for (const auto& [i, c] : o.comps_) r.add_component(i, c);
        return r;
    }
    Skew operator-() const {
        Skew r(nvars_, degree_);
        for (const auto& [i, c] : comps_) r.comps_.emplace_back(i, -c);
        return r;
    }
    Skew operator-(const Skew& o) const { return *this + (-o); }

    Skew operator*(const Poly& f) const {
        Skew r(nvars_, degree_);
        for (const auto& [i, c] : comps_) {
            Poly p = c * f;
            if (!p.is_zero()) r.comps_.emplace_back(i, std::move(p));
        }
        return r;
    }
    Skew operator*(const Rat& a) const { return *this * Poly::constant(nvars_, a); }

    bool operator==(const Skew& o) const {
        return nvars_ == o.nvars_ && degree_ == o.degree_ && comps_ == o.comps_;
    }
    bool operator!=(const Skew& o) const { return !(*this == o); }

    Skew truncate(int cutoff) const {
        Skew r(nvars_, degree_);
        for (const auto& [i, c] : comps_) {
            Poly p = c.truncate(cutoff);
            if (!p.is_zero()) r.comps_.emplace_back(i, std::move(p));
        }
        return r;
    }

private:
    int nvars_;
    int degree_;
    std::vector<Comp> comps_; // sorted by index tuple
};

using MultiVec = Skew<VecKind>;
using DiffForm = Skew<FormKind>;

inline MultiVec operator*(const Poly& f, const MultiVec& t) { return t * f; }
inline DiffForm operator*(const Poly& f, const DiffForm& t) { return t * f; }

// Vector field from its component functions (X = sum comps[i] * e_i).
MultiVec vector_field(std::vector<Poly> comps);

// Component functions of a degree-1 multivector.
std::vector<Poly> field_components(const MultiVec& x);

MultiVec wedge(const MultiVec& a, const MultiVec& b);
DiffForm wedge(const DiffForm& a, const DiffForm& b);

// Interior product i_A w; vectors fill the leftmost slots in the order
// they appear in A, so i_{e1^e2}(dx1^dx2) = +1.
DiffForm contract(const MultiVec& a, const DiffForm& w);

// Mirror contraction of a form into a multivector, same slot convention.
MultiVec contract_form(const DiffForm& b, const MultiVec& t);

DiffForm ext_d(const DiffForm& w);

Poly divergence(const MultiVec& x); // degree 1

Poly apply_vf(const MultiVec& x, const Poly& f); // X(f), degree 1

MultiVec lie_derivative(const MultiVec& x, const MultiVec& t);
DiffForm lie_derivative(const MultiVec& x, const DiffForm& w);

// Contraction with the standard volume form dx_1^...^dx_n and its inverse.
DiffForm dualize(const MultiVec& t);
MultiVec co_dualize(const DiffForm& w);

// Sign of sorting the concatenation of two sorted disjoint index sets;
// 0 if they intersect.
int interleave_sign(const IdxSet& a, const IdxSet& b);

IdxSet complement_idx(const IdxSet& idx, int nvars);

} // namespace nambu

#endif
