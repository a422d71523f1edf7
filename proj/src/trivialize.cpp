#include "nambu/trivialize.hpp"

#include <string>

#include "nambu/defcoh.hpp"
#include "nambu/errors.hpp"

namespace nambu {

namespace {

Poly antiderivative(const Poly& f, int var) {
    std::vector<Poly::Term> out;
    for (const auto& [e, c] : f.terms()) {
        Expo m = e;
        m[var] += 1;
        out.emplace_back(std::move(m), c / Rat(e[var] + 1));
    }
    return Poly::from_terms(f.nvars(), std::move(out));
}

} // namespace

TrivializationWitness trivialize_regular(int q, const MultiVec& pi) {
    const int n = pi.nvars();
    if (q < 1 || q > n) throw HypothesisError("trivialize_regular: degree out of range");
    if (pi.degree() != q)
        throw HypothesisError("trivialize_regular: deformation degree mismatch");

    IdxSet base(q);
    for (int i = 0; i < q; ++i) base[i] = i;
    const MultiVec lambda = MultiVec::basis(n, base);

    const DeformationCheck check = is_infinitesimal_deformation(lambda, pi);
    if (!check.is_deformation)
        throw HypothesisError(
            "trivialize_regular: input is not an infinitesimal deformation of the "
            "regular tensor");

    // parallel part f * Lambda
    const Poly f = pi.coeff(base);
    MultiVec x = vector_field([&] {
        std::vector<Poly> comps(n, Poly::zero(n));
        comps[0] = -antiderivative(f, 0);
        return comps;
    }());
    const MultiVec pi_mixed = pi - lambda * f;

    TrivializationWitness witness;

    // mixed components carry exactly one index outside the base block
    for (const auto& [idx, c] : pi_mixed.comps()) {
        int missing = -1, extra = -1;
        IdxSet inside, outside;
        for (int v : idx)
            (v < q ? inside : outside).push_back(v);
        if (static_cast<int>(outside.size()) != 1) {
            throw HypothesisError(
                "trivialize_regular: a component carries " + std::to_string(outside.size()) +
                " indices outside the base block; not a deformation of the regular tensor");
        }
        extra = outside[0];
        for (int i = 0; i < q; ++i) {
            bool present = false;
            for (int v : inside)
                if (v == i) present = true;
            if (!present) missing = i;
        }
        const int sign = ((q - 1 - missing) % 2 == 0) ? 1 : -1;
        witness.fk[{missing, extra}] = c * Rat(sign);
    }

    // cross-derivative symmetry of the extracted slopes
    for (int k = q; k < n; ++k)
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j) {
                auto fi = witness.fk.find({i, k});
                auto fj = witness.fk.find({j, k});
                const Poly di =
                    fi == witness.fk.end() ? Poly::zero(n) : partial_derivative(fi->second, j);
                const Poly dj =
                    fj == witness.fk.end() ? Poly::zero(n) : partial_derivative(fj->second, i);
                if (di != dj)
                    throw HypothesisError(
                        "trivialize_regular: symmetry of f_k^(i) fails at (i,j,k) = (" +
                        std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                        std::to_string(k + 1) + "); not an infinitesimal deformation");
            }

    // potentials by the radial homotopy in the first q variables
    for (int k = q; k < n; ++k) {
        Poly Fk = Poly::zero(n);
        for (int i = 0; i < q; ++i) {
            auto it = witness.fk.find({i, k});
            if (it == witness.fk.end()) continue;
            for (const auto& [e, c] : it->second.terms()) {
                int d = 0;
                for (int v = 0; v < q; ++v) d += e[v];
                Expo m = e;
                m[i] += 1;
                Fk = Fk + Poly::monomial(std::move(m), c / Rat(d + 1));
            }
        }
        if (!Fk.is_zero()) witness.Fk[k] = Fk;
    }

    for (const auto& [k, Fk] : witness.Fk) {
        MultiVec shift(n, 1);
        shift.add_component({k}, -Fk);
        x = x + shift;
    }

    witness.X = x;
    witness.residual = lie_derivative(witness.X, lambda) - pi;
    if (!witness.residual.is_zero())
        throw HypothesisError("trivialize_regular: verification L_X Lambda = Pi failed");
    return witness;
}

} // namespace nambu
