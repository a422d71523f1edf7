#ifndef NAMBU_POLY_HPP
#define NAMBU_POLY_HPP

#include <span>
#include <utility>
#include <vector>

#include "nambu/monomial.hpp"
#include "nambu/rational.hpp"

namespace nambu {

// Sparse multivariate polynomial over Q. Terms are kept sorted ascending
// in degrevlex; no zero coefficient is ever stored, so equality is
// structural. Values are immutable in spirit: every operation returns a
// fresh polynomial.
class Poly {
public:
    using Term = std::pair<Expo, Rat>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const Rat& c);
    static Poly variable(int nvars, int i); // 0-based
    static Poly monomial(Expo e, const Rat& c);

    // terms must not contain duplicates; they get sorted and zero-pruned.
    static Poly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_deg(terms_[0].first) == 0);
    }
    std::size_t nterms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    int deg() const; // -1 for the zero polynomial
    int low_deg() const; // minimal total degree of a term, -1 if zero

    Rat coeff(const Expo& e) const;
    Rat constant_term() const;

    // Leading term with respect to an arbitrary order (degrevlex is O(1)).
    const Term& leading_term(MonoOrder order = MonoOrder::Degrevlex) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly operator/(const Rat& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly mul_term(const Expo& e, const Rat& c) const;
    Poly pow(unsigned k) const;

    // Drop all terms of total degree > cutoff.
    Poly truncate(int cutoff) const;

    // Simultaneous substitution x_i -> images[i].
    Poly substitute(std::span<const Poly> images) const;

private:
    int nvars_;
    std::vector<Term> terms_; // ascending degrevlex
    void prune_and_sort();
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

Poly partial_derivative(const Poly& f, int i); // 0-based variable index

// f / g when the division is exact; throws HypothesisError otherwise.
Poly divexact(const Poly& f, const Poly& g);

// Scale so integer coefficients are coprime and the degrevlex-leading
// coefficient is positive. Zero stays zero.
Poly normalize_primitive(const Poly& f);

Poly make_monic(const Poly& f, MonoOrder order = MonoOrder::Degrevlex);

} // namespace nambu

#endif
