#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nambu/errors.hpp"
#include "nambu/io.hpp"
#include "nambu/polygcd.hpp"
#include "test_util.hpp"

using namespace nambu;
using namespace nambu::testutil;

namespace {
const VarTable kXY{{"x", "y"}};
const VarTable kXYZ{{"x", "y", "z"}};

Poly P(const std::string& s, const VarTable& v) { return parse_poly(s, v); }
} // namespace

TEST_CASE("partial derivatives") {
    CHECK(partial_derivative(P("x^2*y", kXY), 0) == P("2*x*y", kXY));
    CHECK(partial_derivative(P("x^3", kXY), 1).is_zero());
    CHECK(partial_derivative(P("x^2+y^2+z^2", kXYZ), 0) == P("2*x", kXYZ));
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        const Poly a = rand_poly(rng, 3, 6, 4);
        const Poly b = rand_poly(rng, 3, 6, 4);
        const Poly c = rand_poly(rng, 3, 6, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("degree bookkeeping and truncation") {
    const Poly f = P("x^3*y + x*y + 2", kXY);
    CHECK(f.deg() == 4);
    CHECK(f.low_deg() == 0);
    CHECK(f.truncate(2) == P("x*y + 2", kXY));
    CHECK(f.truncate(-1).is_zero());
    CHECK(Poly::zero(2).deg() == -1);
}

TEST_CASE("divexact") {
    const Poly f = P("x^2 - y^2", kXY);
    CHECK(divexact(f, P("x - y", kXY)) == P("x + y", kXY));
    CHECK(divexact(f, f) == P("1", kXY));
    CHECK_THROWS_AS(divexact(P("x^2 + y", kXY), P("x + 1", kXY)), HypothesisError);
    CHECK_THROWS_AS(divexact(f, Poly::zero(2)), HypothesisError);
}

TEST_CASE("content gcd") {
    // coefficients of the quadric wedge share exactly z
    std::vector<Poly> ps{P("z*x", kXYZ), P("z*y", kXYZ), P("z^2", kXYZ)};
    CHECK(content_gcd(ps) == P("z", kXYZ));
    std::vector<Poly> coprime{P("x", kXY), P("y", kXY)};
    CHECK(content_gcd(coprime) == P("1", kXY));
    std::vector<Poly> with_zero{Poly::zero(2), P("x^2", kXY)};
    CHECK(content_gcd(with_zero) == P("x^2", kXY));
    std::vector<Poly> zeros{Poly::zero(2), Poly::zero(2)};
    CHECK_THROWS_AS(content_gcd(zeros), HypothesisError);
}

TEST_CASE("gcd on structured products") {
    const Poly a = P("(x+y)^3*(x-y)", kXY);
    const Poly b = P("(x+y)^2*(x+2*y)", kXY);
    CHECK(poly_gcd(a, b) == P("(x+y)^2", kXY));
    // gcd is stable under rational rescaling
    CHECK(poly_gcd(a * rat(3, 7), b * rat(-2, 5)) == P("(x+y)^2", kXY));
}

TEST_CASE("gcd divides both arguments exactly") {
    Rng rng(777);
    for (int trial = 0; trial < 15; ++trial) {
        const Poly g = rand_poly(rng, 2, 2, 2);
        const Poly a = g * rand_poly(rng, 2, 2, 2);
        const Poly b = g * rand_poly(rng, 2, 2, 2);
        if (a.is_zero() || b.is_zero()) continue;
        const Poly d = poly_gcd(a, b);
        CHECK_NOTHROW(divexact(a, d));
        CHECK_NOTHROW(divexact(b, d));
        if (!g.is_constant()) CHECK(d.deg() >= g.deg());
    }
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(P("x^2*y", kXY)) == P("x*y", kXY));
    CHECK(squarefree_part(P("x^2+y^2", kXY)) == P("x^2+y^2", kXY));
    CHECK(squarefree_part(P("(x+y)^3*(x-y)", kXY)) == P("(x+y)*(x-y)", kXY));
    CHECK_THROWS_AS(squarefree_part(Poly::zero(2)), HypothesisError);
}

TEST_CASE("squarefree part divides f and is squarefree") {
    Rng rng(4242);
    for (int trial = 0; trial < 12; ++trial) {
        Poly f = rand_poly(rng, 2, 3, 3);
        if (f.is_zero() || f.is_constant()) continue;
        f = f * f * rand_poly(rng, 2, 2, 2); // force a repeated factor
        if (f.is_zero() || f.is_constant()) continue;
        const Poly s = squarefree_part(f);
        CHECK_NOTHROW(divexact(f, s));
        Poly g = s;
        for (int v = 0; v < 2; ++v) {
            const Poly sv = partial_derivative(s, v);
            if (!sv.is_zero()) g = poly_gcd(g, sv);
        }
        CHECK(g.is_constant());
    }
}

TEST_CASE("substitution and powers") {
    const Poly f = P("x^2 + y", kXY);
    std::vector<Poly> images{P("y", kXY), P("x + 1", kXY)};
    CHECK(f.substitute(images) == P("y^2 + x + 1", kXY));
    CHECK(P("x + y", kXY).pow(3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3", kXY));
    CHECK(P("x", kXY).pow(0) == P("1", kXY));
}

TEST_CASE("printer round trip") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const Poly f = rand_poly(rng, 3, 5, 5);
        CHECK(parse_poly(poly_str(f, kXYZ), kXYZ) == f);
    }
    CHECK(poly_str(Poly::zero(2), kXY) == "0");
    CHECK(poly_str(P("-x + 1/2", kXY), kXY) == "-x + 1/2");
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_poly("x ++ y", kXY), ParseError);
    CHECK_THROWS_AS(parse_poly("(x", kXY), ParseError);
    CHECK_THROWS_AS(parse_poly("x^y", kXY), ParseError);
    CHECK_THROWS_AS(parse_poly("z", kXY), ParseError);
    CHECK_THROWS_AS(parse_poly("x/y", kXY), ParseError);
    CHECK(parse_poly("x/2 + 1/2", kXY) == P("(x+1)/2", kXY));
}

TEST_CASE("parser survives random garbage without crashing") {
    Rng rng(202020);
    const std::string alphabet = "xy01+-*/^() ed";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(1, 24);
    for (int trial = 0; trial < 400; ++trial) {
        std::string src;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) src += alphabet[pick(rng)];
        try {
            const Poly p = parse_poly(src, kXY);
            // anything accepted must round-trip
            CHECK(parse_poly(poly_str(p, kXY), kXY) == p);
        } catch (const ParseError&) {
            // rejection is fine; crashing is not
        }
    }
}

TEST_CASE("normalization") {
    CHECK(normalize_primitive(P("2*x + 4*y", kXY)) == P("x + 2*y", kXY));
    CHECK(normalize_primitive(P("-3*x", kXY)) == P("x", kXY));
    CHECK(normalize_primitive(P("x/2 + y/3", kXY)) == P("3*x + 2*y", kXY));
    CHECK(make_monic(P("3*x^2 + 6", kXY)) == P("x^2 + 2", kXY));
}
