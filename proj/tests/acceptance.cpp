// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Each criterion pins its tolerances and time budget in code.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "nambu/cli.hpp"
#include "nambu/defcoh.hpp"
#include "nambu/foliation.hpp"
#include "nambu/integrability.hpp"
#include "nambu/io.hpp"
#include "nambu/linear.hpp"
#include "nambu/trivialize.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace nambu;
using namespace nambu::testutil;

namespace {

struct Criterion {
    int index;
    std::string name;
    double budget_seconds;
    std::function<bool(std::ostream&)> body;
};

bool expect(std::ostream& log, bool ok, const std::string& what) {
    if (!ok) log << "    failed: " << what << "\n";
    return ok;
}

long stabilized_dim(const QuotientReport& r) {
    return r.stabilized && r.dimension ? *r.dimension : -1;
}

SubmoduleSpec milnor_spec(const Poly& f) {
    SubmoduleSpec spec;
    spec.nvars = f.nvars();
    spec.ambient_rank = 1;
    for (int i = 0; i < f.nvars(); ++i) spec.ogenerators.push_back({partial_derivative(f, i)});
    return spec;
}

SubmoduleSpec tjurina_spec(const Poly& f) {
    SubmoduleSpec spec = milnor_spec(f);
    spec.ogenerators.insert(spec.ogenerators.begin(), {f});
    return spec;
}

Poly brieskorn(const std::vector<int>& exponents) {
    const int n = static_cast<int>(exponents.size());
    Poly f = Poly::zero(n);
    for (int i = 0; i < n; ++i) {
        Expo e(n, 0);
        e[i] = exponents[i];
        f = f + Poly::monomial(std::move(e), Rat(1));
    }
    return f;
}

// ---------------------------------------------------------------- criterion 1
bool criterion_milnor_tjurina(std::ostream& log) {
    const std::vector<std::vector<int>> germs{
        {2},          {3},          {4},       {5},       {6},
        {2, 2},       {3, 2},       {3, 3},    {4, 3},    {5, 4},    {6, 5}, {6, 6},
        {2, 2, 2},    {3, 2, 2},    {3, 3, 2}, {3, 3, 3}, {4, 3, 2}, {4, 4, 4}, {6, 6, 6},
        {2, 2, 2, 2}, {3, 2, 2, 2}, {3, 3, 3, 3}, {4, 3, 2, 2}};
    bool ok = true;
    for (const auto& exps : germs) {
        const Poly f = brieskorn(exps);
        long expected = 1;
        for (int a : exps) expected *= a - 1;
        const QuotientReport mu = milnor_number(f);
        const QuotientReport tau = tjurina_number(f);
        std::ostringstream tag;
        for (int a : exps) tag << a << ".";
        ok &= expect(log, stabilized_dim(mu) == expected,
                     "milnor(" + tag.str() + ") != product formula");
        ok &= expect(log, stabilized_dim(tau) == expected,
                     "tjurina(" + tag.str() + ") != milnor");
        // independent dense oracle at two cutoffs past stabilization
        const SubmoduleSpec ms = milnor_spec(f);
        const SubmoduleSpec ts = tjurina_spec(f);
        for (int shift : {2, 3}) {
            ok &= expect(log,
                         dense_jet_quotient_dim(ms, mu.cutoff_used + shift) == expected,
                         "dense oracle disagrees for milnor(" + tag.str() + ")");
            ok &= expect(log,
                         dense_jet_quotient_dim(ts, tau.cutoff_used + shift) == expected,
                         "dense oracle disagrees for tjurina(" + tag.str() + ")");
        }
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 2
bool criterion_remark_equality(std::ostream& log) {
    const VarTable kXYZ{{"x", "y", "z"}};
    bool ok = true;
    const std::vector<std::pair<std::string, long>> cases{{"x^2+y^2+z^2", 0},
                                                          {"x^3+y^3+z^3", 7}};
    for (const auto& [src, expected] : cases) {
        const Poly f = parse_poly(src, kXYZ);
        const long dim = stabilized_dim(dh_decomposable_foliation({f}));
        const long mu = stabilized_dim(milnor_number(f));
        const long tau = stabilized_dim(tjurina_number(f));
        ok &= expect(log, dim == expected, src + ": dim != " + std::to_string(expected));
        ok &= expect(log, dim == mu - 1, src + ": dim != mu - 1");
        ok &= expect(log, dim == tau - 1, src + ": dim != tau - 1");
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 3
bool criterion_corollary_sandwich(std::ostream& log) {
    const VarTable kXYZ{{"x", "y", "z"}};
    const std::vector<std::string> germs{
        "x^5 + y^5 + x^3*y^3 + z^2", "x^5 + y^4 + x^3*y^2 + z^2",
        "x^6 + y^4 + x^4*y^2 + z^2", "x^7 + y^3 + x^5*y + z^2",
        "x^6 + y^5 + x^4*y^3 + z^2"};
    bool ok = true;
    for (const std::string& src : germs) {
        const Poly f = parse_poly(src, kXYZ);
        const QuotientReport mu_r = milnor_number(f);
        const QuotientReport tau_r = tjurina_number(f);
        const QuotientReport dh_r = dh_decomposable_foliation({f});
        ok &= expect(log, mu_r.stabilized && tau_r.stabilized && dh_r.stabilized,
                     src + ": not stabilized");
        if (!ok) continue;
        const long mu = *mu_r.dimension, tau = *tau_r.dimension, dim = *dh_r.dimension;
        ok &= expect(log, mu > tau, src + ": expected a non-quasihomogeneous germ");
        ok &= expect(log, mu >= dim, src + ": mu < dim");
        ok &= expect(log, dim >= tau - 1, src + ": dim < tau - 1");
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 4
bool criterion_regular_trivialization(std::ostream& log) {
    Rng rng(20260809);
    const int n = 4, q = 2;
    IdxSet base{0, 1};
    const MultiVec lambda = MultiVec::basis(n, base);
    for (int trial = 0; trial < 100; ++trial) {
        const MultiVec y = rand_vector_field(rng, n, 4, 4);
        const MultiVec pi = lie_derivative(y, lambda);
        const TrivializationWitness w = trivialize_regular(q, pi);
        if (!expect(log, w.residual.is_zero() && lie_derivative(w.X, lambda) == pi,
                    "trivialization failed at trial " + std::to_string(trial)))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 5
bool criterion_linear_suite(std::ostream& log) {
    Rng rng(5150);
    bool ok = true;
    // distinct rational diagonals: dim DH_lin = n
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> ndist(2, 4);
        const int n = ndist(rng);
        std::vector<Rat> d;
        std::uniform_int_distribution<int> num(-12, 12);
        std::uniform_int_distribution<int> den(1, 4);
        while (static_cast<int>(d.size()) < n) {
            Rat cand = rat(num(rng), den(rng));
            bool dup = false;
            for (const Rat& v : d)
                if (v == cand) dup = true;
            if (!dup) d.push_back(cand);
        }
        ok &= expect(log, dh_lin(RatMat::diag(d)).dim_tensor == n,
                     "distinct diagonal dim != n");
    }
    // identity: n^2
    for (int n : {2, 3, 4})
        ok &= expect(log, dh_lin(RatMat::identity(n)).dim_tensor == n * n,
                     "identity dim != n^2");
    // single Jordan blocks: n
    for (int n : {2, 3, 4})
        for (int lam : {0, 1, -3}) {
            RatMat j(n, n);
            for (int i = 0; i < n; ++i) {
                j.at(i, i) = lam;
                if (i + 1 < n) j.at(i, i + 1) = 1;
            }
            ok &= expect(log, dh_lin(j).dim_tensor == n, "Jordan block dim != n");
        }
    // n^2 - d >= n on 200 random rational matrices; two routes agree
    std::uniform_int_distribution<int> entry(-6, 6);
    std::uniform_int_distribution<int> den(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> ndist(2, 4);
        const int n = ndist(rng);
        RatMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = rat(entry(rng), den(rng));
        const int d = adjoint_orbit_dim(m);
        ok &= expect(log, n * n - d >= n, "n^2 - d < n");
        ok &= expect(log, d == n * n - centralizer_dim(m), "rank route != centralizer route");
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 6
bool criterion_quadric_example(std::ostream& log) {
    // string-level match of the emitted tensors through the CLI pipeline
    std::ostringstream out, err;
    const int code = run_cli({"associated-nambu", "--gen", "y*e3 - z*e2", "--gen",
                              "z*e1 - x*e3", "--vars", "x,y,z", "--json"},
                             out, err);
    bool ok = expect(log, code == 0, "pipeline exit code");
    const std::string expected =
        "{\"schema\":1,\"command\":\"associated-nambu\",\"vars\":[\"x\",\"y\",\"z\"],"
        "\"inputs\":{\"generators\":[\"-z*e2 + y*e3\",\"z*e1 - x*e3\"]},"
        "\"pi\":\"z^2*e1^e2 - y*z*e1^e3 + x*z*e2^e3\","
        "\"lambda\":\"z*e1^e2 - y*e1^e3 + x*e2^e3\",\"h\":\"z\",\"s\":\"1\","
        "\"sing_codim_lambda\":3,\"exact\":true}\n";
    ok &= expect(log, out.str() == expected, "emitted report differs byte-wise");

    const VarTable vars{{"x", "y", "z"}};
    const MultiVec x = parse_multivec("y*e3 - z*e2", vars);
    const MultiVec y = parse_multivec("z*e1 - x*e3", vars);
    const MultiVec lambda = parse_multivec("z*e1^e2 - y*e1^e3 + x*e2^e3", vars);
    ok &= expect(log, is_cit(x, lambda).is_cit, "X is not CIT");
    ok &= expect(log, is_cit(y, lambda).is_cit, "Y is not CIT");
    return ok;
}

// ---------------------------------------------------------------- criterion 7
bool criterion_integrability_gate(std::ostream& log) {
    Rng rng(777);
    bool ok = true;
    // wedges of up to 3 fields spanning a random polynomial foliation
    for (int trial = 0; trial < 30; ++trial) {
        const int q = 1 + trial % 3;
        const int n = 4;
        auto fields = random_involutive_family(rng, n, q, 2);
        MultiVec pi = fields[0] * rand_poly(rng, n, 1, 1);
        for (int i = 1; i < q; ++i) pi = wedge(pi, fields[i] * rand_poly(rng, n, 1, 1));
        if (pi.is_zero()) continue;
        ok &= expect(log, is_nambu(pi).integrable,
                     "foliation wedge rejected at trial " + std::to_string(trial));
    }
    // the symplectic form fails with a witness
    const VarTable v4{{"x", "y", "z", "w"}};
    const IntegrabilityVerdict v = is_integrable_form(parse_form("dx^dy + dz^dw", v4));
    ok &= expect(log, !v.integrable && v.witness_A.has_value() && v.residual.has_value(),
                 "symplectic form not rejected with a witness");
    // conformal rescalings: f Lambda stays Nambu, 100 trials
    const VarTable v3{{"x", "y", "z"}};
    const MultiVec quadric = parse_multivec("z*e1^e2 - y*e1^e3 + x*e2^e3", v3);
    for (int trial = 0; trial < 50; ++trial) {
        const Poly f = rand_poly(rng, 3, 3, 3);
        ok &= expect(log, is_nambu(quadric * f).integrable, "f * quadric rejected");
    }
    for (int trial = 0; trial < 50; ++trial) {
        auto fields = random_involutive_family(rng, 4, 2, 2);
        const MultiVec lambda = wedge(fields[0], fields[1]);
        if (lambda.is_zero()) continue;
        const Poly f = rand_poly(rng, 4, 2, 2);
        ok &= expect(log, is_nambu(lambda * f).integrable, "f * wedge rejected");
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 8
bool criterion_invariance(std::ostream& log) {
    Rng rng(88);
    bool ok = true;
    const VarTable kXY{{"x", "y"}};
    const VarTable kXYZ{{"x", "y", "z"}};

    // unit rescaling f -> (1 + x1) f
    const std::vector<std::pair<std::string, const VarTable*>> unit_cases{
        {"x^3+y^3", &kXY}, {"x^4+y^3", &kXY}, {"x^2+y^2+z^2", &kXYZ},
        {"x^3+y^3+z^3", &kXYZ}};
    for (const auto& [src, vars] : unit_cases) {
        const Poly f = parse_poly(src, *vars);
        const Poly uf = parse_poly("(1+x)*(" + src + ")", *vars);
        ok &= expect(log, stabilized_dim(milnor_number(f)) == stabilized_dim(milnor_number(uf)),
                     src + ": milnor changed under unit");
        ok &= expect(log,
                     stabilized_dim(tjurina_number(f)) == stabilized_dim(tjurina_number(uf)),
                     src + ": tjurina changed under unit");
    }
    for (const std::string& src : {std::string("x^2+y^2+z^2"), std::string("x^3+y^3+z^3")}) {
        const Poly f = parse_poly(src, kXYZ);
        const Poly uf = parse_poly("(1+x)*(" + src + ")", kXYZ);
        ok &= expect(log,
                     stabilized_dim(rl_quotient_dim({{f}, {}})) ==
                         stabilized_dim(rl_quotient_dim({{uf}, {}})),
                     src + ": RL dimension changed under unit");
    }

    // unimodular linear substitutions for the criterion 1-2 instances
    const std::vector<std::pair<std::string, int>> sub_cases{
        {"x^3+y^3", 2}, {"x^3+y^2+z^2", 3}, {"x^2+y^2+z^2", 3}, {"x^3+y^3+z^3", 3}};
    for (const auto& [src, n] : sub_cases) {
        const VarTable& vars = n == 2 ? kXY : kXYZ;
        const Poly f = parse_poly(src, vars);
        const long mu = stabilized_dim(milnor_number(f));
        const long tau = stabilized_dim(tjurina_number(f));
        for (int trial = 0; trial < 3; ++trial) {
            auto [u, uinv] = random_unimodular(rng, n);
            const Poly g = substitute_linear(f, u);
            ok &= expect(log, stabilized_dim(milnor_number(g)) == mu,
                         src + ": milnor changed under substitution");
            ok &= expect(log, stabilized_dim(tjurina_number(g)) == tau,
                         src + ": tjurina changed under substitution");
        }
    }
    for (const std::string& src : {std::string("x^2+y^2+z^2"), std::string("x^3+y^3+z^3")}) {
        const Poly f = parse_poly(src, kXYZ);
        const long dim = stabilized_dim(dh_decomposable_foliation({f}));
        auto [u, uinv] = random_unimodular(rng, 3);
        const Poly g = substitute_linear(f, u);
        ok &= expect(log, stabilized_dim(dh_decomposable_foliation({g})) == dim,
                     src + ": foliation dimension changed under substitution");
    }
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "Milnor/Tjurina Brieskorn suite vs dense jet oracle", 60.0,
         criterion_milnor_tjurina},
        {2, "dim DH(F_df) = mu - 1 = tau - 1 on quasihomogeneous cones", 120.0,
         criterion_remark_equality},
        {3, "mu >= dim DH(F_df) >= tau - 1 on non-quasihomogeneous germs", 120.0,
         criterion_corollary_sandwich},
        {4, "100 exact regular trivializations", 30.0, criterion_regular_trivialization},
        {5, "linear deformation dimensions and orbit bounds", 60.0, criterion_linear_suite},
        {6, "quadric pipeline, exact emitted tensors and CIT", 30.0,
         criterion_quadric_example},
        {7, "integrability gate", 60.0, criterion_integrability_gate},
        {8, "invariance under units and unimodular substitutions", 120.0,
         criterion_invariance},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::ostringstream log;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.body(log);
        } catch (const std::exception& e) {
            log << "    exception: " << e.what() << "\n";
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.budget_seconds) {
            log << "    time budget exceeded: " << elapsed << "s > " << c.budget_seconds
                << "s\n";
            ok = false;
        }
        std::cout << "[" << c.index << "/8] " << (ok ? "PASS" : "FAIL") << " " << c.name
                  << " (" << elapsed << "s)\n"
                  << log.str();
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed: ")
              << (failures == 0 ? "" : std::to_string(failures)) << "\n";
    return failures;
}
