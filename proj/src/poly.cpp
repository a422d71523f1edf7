#include "nambu/poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "nambu/errors.hpp"

namespace nambu {

namespace {
bool term_less(const Poly::Term& a, const Poly::Term& b) {
    return mono_less(a.first, b.first, MonoOrder::Degrevlex);
}
} // namespace

void Poly::prune_and_sort() {
    std::erase_if(terms_, [](const Term& t) { return nambu::is_zero(t.second); });
    std::sort(terms_.begin(), terms_.end(), term_less);
}

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    if (!nambu::is_zero(c)) p.terms_.emplace_back(Expo(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int i) {
    assert(i >= 0 && i < nvars);
    Poly p(nvars);
    Expo e(nvars, 0);
    e[i] = 1;
    p.terms_.emplace_back(std::move(e), Rat(1));
    return p;
}

Poly Poly::monomial(Expo e, const Rat& c) {
    Poly p(static_cast<int>(e.size()));
    if (!nambu::is_zero(c)) p.terms_.emplace_back(std::move(e), c);
    return p;
}

Poly Poly::from_terms(int nvars, std::vector<Term> terms) {
    Poly p(nvars);
    p.terms_ = std::move(terms);
    p.prune_and_sort();
    return p;
}

int Poly::deg() const {
    if (terms_.empty()) return -1;
    return total_deg(terms_.back().first); // degrevlex leading term has max degree
}

int Poly::low_deg() const {
    if (terms_.empty()) return -1;
    int d = total_deg(terms_.front().first);
    for (const auto& [e, c] : terms_) d = std::min(d, total_deg(e));
    return d;
}

Rat Poly::coeff(const Expo& e) const {
    for (const auto& [m, c] : terms_)
        if (m == e) return c;
    return Rat(0);
}

Rat Poly::constant_term() const {
    if (!terms_.empty() && total_deg(terms_.front().first) == 0) return terms_.front().second;
    return Rat(0);
}

const Poly::Term& Poly::leading_term(MonoOrder order) const {
    assert(!terms_.empty());
    if (order == MonoOrder::Degrevlex) return terms_.back();
    const Term* best = &terms_[0];
    for (const Term& t : terms_)
        if (mono_less(best->first, t.first, order)) best = &t;
    return *best;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    assert(nvars_ == o.nvars_);
    Poly r(nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].first == o.terms_[j].first) {
            Rat c = terms_[i].second + o.terms_[j].second;
            if (!nambu::is_zero(c)) r.terms_.emplace_back(terms_[i].first, std::move(c));
            ++i, ++j;
        } else if (term_less(terms_[i], o.terms_[j])) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    assert(nvars_ == o.nvars_);
    std::map<Expo, Rat, DegrevlexLess> acc;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Expo e = mono_mul(ea, eb);
            acc[std::move(e)] += ca * cb;
        }
    Poly r(nvars_);
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!nambu::is_zero(c)) r.terms_.emplace_back(e, std::move(c));
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    if (nambu::is_zero(c)) return Poly(nvars_);
    Poly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [e, a] : terms_) r.terms_.emplace_back(e, a * c);
    return r;
}

Poly Poly::operator/(const Rat& c) const {
    assert(!nambu::is_zero(c));
    return *this * (Rat(1) / c);
}

Poly Poly::mul_term(const Expo& e, const Rat& c) const {
    if (nambu::is_zero(c)) return Poly(nvars_);
    Poly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, a] : terms_) r.terms_.emplace_back(mono_mul(m, e), a * c);
    return r; // order is preserved: multiplication by a monomial is monotone
}

Poly Poly::pow(unsigned k) const {
    Poly r = Poly::constant(nvars_, Rat(1));
    Poly base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

Poly Poly::truncate(int cutoff) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (total_deg(e) <= cutoff) r.terms_.emplace_back(e, c);
    return r;
}

Poly Poly::substitute(std::span<const Poly> images) const {
    assert(static_cast<int>(images.size()) == nvars_);
    // cache powers of each image
    std::vector<std::vector<Poly>> powers(nvars_);
    const int out_nvars = images.empty() ? nvars_ : images[0].nvars();
    Poly result(out_nvars);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(out_nvars, c);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Poly::constant(out_nvars, Rat(1)));
            while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
            term = term * pw[e[i]];
        }
        result = result + term;
    }
    return result;
}

Poly partial_derivative(const Poly& f, int i) {
    assert(i >= 0 && i < f.nvars());
    std::vector<Poly::Term> out;
    for (const auto& [e, c] : f.terms()) {
        if (e[i] == 0) continue;
        Expo m = e;
        m[i] -= 1;
        out.emplace_back(std::move(m), c * e[i]);
    }
    return Poly::from_terms(f.nvars(), std::move(out));
}

Poly divexact(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw HypothesisError("divexact: division by zero polynomial");
    Poly rem = f;
    Poly q(f.nvars());
    const auto& [lg, cg] = g.leading_term();
    while (!rem.is_zero()) {
        const auto& [lr, cr] = rem.leading_term();
        if (!mono_divides(lg, lr))
            throw HypothesisError("divexact: division is not exact");
        Expo m = mono_div(lr, lg);
        Rat c = cr / cg;
        q = q + Poly::monomial(m, c);
        rem = rem - g.mul_term(m, c);
    }
    return q;
}

Poly normalize_primitive(const Poly& f) {
    if (f.is_zero()) return f;
    // lcm of denominators, gcd of numerators
    mpz_class den(1), num(0);
    for (const auto& [e, c] : f.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    for (const auto& [e, c] : f.terms()) {
        mpz_class n = c.get_num() * (den / c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    }
    Rat scale(den, num);
    scale.canonicalize();
    Poly r = f * scale;
    if (sgn(r.leading_term().second) < 0) r = -r;
    return r;
}

Poly make_monic(const Poly& f, MonoOrder order) {
    if (f.is_zero()) return f;
    return f / f.leading_term(order).second;
}

} // namespace nambu
