#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nambu/errors.hpp"
#include "nambu/io.hpp"
#include "nambu/trivialize.hpp"
#include "test_util.hpp"

using namespace nambu;
using namespace nambu::testutil;

namespace {
const VarTable kXY{{"x", "y"}};

MultiVec base_tensor(int n, int q) {
    IdxSet idx(q);
    for (int i = 0; i < q; ++i) idx[i] = i;
    return MultiVec::basis(n, idx);
}
} // namespace

TEST_CASE("pure scalar directions integrate along x1") {
    // Pi = g(x1) Lambda: X is an antiderivative along the first axis
    const VarTable v{{"x1", "x2", "x3"}};
    const MultiVec lambda = base_tensor(3, 2);
    const MultiVec pi = lambda * parse_poly("x1^2", v);
    const TrivializationWitness w = trivialize_regular(2, pi);
    CHECK(w.Fk.empty());
    CHECK(w.residual.is_zero());
    CHECK(lie_derivative(w.X, lambda) == pi);
    CHECK(w.X == parse_multivec("-1/3*x1^3*e1", v));
}

TEST_CASE("the off-block slope is integrated to a potential") {
    // q = 1 in two variables, Pi = x d/dy
    const MultiVec pi = parse_multivec("x*e2", kXY);
    const TrivializationWitness w = trivialize_regular(1, pi);
    REQUIRE(w.fk.count({0, 1}));
    CHECK(w.fk.at({0, 1}) == parse_poly("x", kXY));
    REQUIRE(w.Fk.count(1));
    CHECK(w.Fk.at(1) == parse_poly("1/2*x^2", kXY));
    CHECK(w.X == parse_multivec("-1/2*x^2*e2", kXY));
    CHECK(lie_derivative(w.X, MultiVec::basis(2, {0})) == pi);
}

TEST_CASE("round trips over random trivial deformations") {
    Rng rng(424242);
    const int n = 4, q = 2;
    const MultiVec lambda = base_tensor(n, q);
    for (int trial = 0; trial < 60; ++trial) {
        const MultiVec y = rand_vector_field(rng, n, 4, 3);
        const MultiVec pi = lie_derivative(y, lambda);
        const TrivializationWitness w = trivialize_regular(q, pi);
        CHECK(w.residual.is_zero());
        CHECK(lie_derivative(w.X, lambda) == pi);
        // one integration step: degree grows by at most one
        int pi_deg = -1, x_deg = -1;
        for (const auto& [idx, c] : pi.comps()) pi_deg = std::max(pi_deg, c.deg());
        for (const auto& [idx, c] : w.X.comps()) x_deg = std::max(x_deg, c.deg());
        if (pi_deg >= 0) CHECK(x_deg <= pi_deg + 1);
    }
}

TEST_CASE("top-degree deformations need only the parallel step") {
    const MultiVec lambda = base_tensor(2, 2);
    const MultiVec pi = lambda * parse_poly("x*y + y^2", kXY);
    const TrivializationWitness w = trivialize_regular(2, pi);
    CHECK(w.fk.empty());
    CHECK(lie_derivative(w.X, lambda) == pi);
}

TEST_CASE("invalid inputs are rejected with diagnostics") {
    const VarTable v4{{"x", "y", "z", "w"}};
    // not an infinitesimal deformation of e1^e2
    CHECK_THROWS_AS(trivialize_regular(2, parse_multivec("e3^e4", v4)), HypothesisError);
    CHECK_THROWS_AS(trivialize_regular(3, parse_multivec("e1^e2", v4)), HypothesisError);
    CHECK_THROWS_AS(trivialize_regular(0, parse_multivec("e1", v4)), HypothesisError);
}
