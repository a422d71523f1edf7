#include "nambu/defcoh.hpp"

#include <functional>
#include <unordered_map>

#include "nambu/errors.hpp"
#include "nambu/ideal.hpp"
#include "nambu/linalg.hpp"

namespace nambu {

namespace {

bool next_subset(IdxSet& idx, int n) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<MultiVec> basis_multivectors(int nvars, int degree) {
    std::vector<MultiVec> out;
    if (degree == 0) {
        out.push_back(MultiVec::scalar(Poly::constant(nvars, Rat(1))));
        return out;
    }
    if (degree > nvars) return out;
    IdxSet idx(degree);
    for (int i = 0; i < degree; ++i) idx[i] = i;
    do {
        out.push_back(MultiVec::basis(nvars, idx));
    } while (next_subset(idx, nvars));
    return out;
}

} // namespace

DeformationCheck is_infinitesimal_deformation(const DiffForm& w, const DiffForm& eta) {
    if (w.nvars() != eta.nvars() || w.degree() != eta.degree())
        throw HypothesisError("is_infinitesimal_deformation: degree mismatch");
    DeformationCheck check;
    const int p = w.degree();
    if (p == 0) {
        check.is_deformation = true; // every function deforms a function
        return check;
    }
    const DiffForm dw = ext_d(w);
    const DiffForm deta = ext_d(eta);
    for (const MultiVec& a : basis_multivectors(w.nvars(), p - 1)) {
        const DiffForm iaw = contract(a, w);
        const DiffForm iaeta = contract(a, eta);
        DiffForm r1 = wedge(iaw, eta) + wedge(iaeta, w);
        if (!r1.is_zero()) {
            check.failing_condition = 1;
            check.witness_A = a;
            check.residual = r1;
            return check;
        }
        DiffForm r2 = wedge(iaw, deta) + wedge(iaeta, dw);
        if (!r2.is_zero()) {
            check.failing_condition = 2;
            check.witness_A = a;
            check.residual = r2;
            return check;
        }
    }
    check.is_deformation = true;
    return check;
}

DeformationCheck is_infinitesimal_deformation(const MultiVec& base, const MultiVec& cand) {
    if (base.nvars() != cand.nvars() || base.degree() != cand.degree())
        throw HypothesisError("is_infinitesimal_deformation: degree mismatch");
    return is_infinitesimal_deformation(dualize(base), dualize(cand));
}

namespace {

// Equation bookkeeping for exact tensor-valued linear solves: each
// (component, monomial) pair of the result tensor is one equation row.
template <class Kind>
class EquationSink {
public:
    explicit EquationSink(int ncols) { system_.ncols = ncols; }

    void add(const Skew<Kind>& tensor, int unknown) {
        for (const auto& [idx, coeff] : tensor.comps())
            for (const auto& [e, c] : coeff.terms())
                system_.rows[row(idx, e)][unknown] += c;
    }

    void set_rhs(const Skew<Kind>& tensor) {
        for (const auto& [idx, coeff] : tensor.comps())
            for (const auto& [e, c] : coeff.terms()) system_.rhs[row(idx, e)] = c;
    }

    std::optional<std::vector<Rat>> solve() { return solve_sparse(system_); }

private:
    struct Key {
        IdxSet idx;
        Expo e;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = 1469598103934665603ull;
            for (int v : k.idx) h = (h ^ static_cast<std::size_t>(v + 7)) * 1099511628211ull;
            for (int v : k.e) h = (h ^ static_cast<std::size_t>(v + 13)) * 1099511628211ull;
            return h;
        }
    };

    int row(const IdxSet& idx, const Expo& e) {
        Key key{idx, e};
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        const int r = static_cast<int>(system_.rows.size());
        index_.emplace(std::move(key), r);
        system_.rows.emplace_back();
        system_.rhs.emplace_back(0);
        return r;
    }

    std::unordered_map<Key, int, KeyHash> index_;
    SparseSystem system_;
};

template <class Kind>
std::optional<TrivialWitness> solve_trivial(const Skew<Kind>& base,
                                            const Skew<Kind>& candidate, DefMode mode,
                                            int cutoff) {
    const int n = base.nvars();
    const std::vector<Expo> monos = monomials_up_to(n, cutoff);
    const int m = static_cast<int>(monos.size());
    const int nunknowns = n * m + (mode == DefMode::Foliation ? m : 0);

    EquationSink<Kind> sink(nunknowns);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k) {
            MultiVec x(n, 1);
            x.add_component({i}, Poly::monomial(monos[k], Rat(1)));
            sink.add(lie_derivative(x, base), i * m + k);
        }
    if (mode == DefMode::Foliation)
        for (int k = 0; k < m; ++k)
            sink.add(base * Poly::monomial(monos[k], Rat(1)), n * m + k);
    sink.set_rhs(candidate);

    auto solution = sink.solve();
    if (!solution) return std::nullopt;

    TrivialWitness witness;
    std::vector<Poly> comps(n, Poly::zero(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k)
            if (!is_zero((*solution)[i * m + k]))
                comps[i] = comps[i] + Poly::monomial(monos[k], (*solution)[i * m + k]);
    witness.X = vector_field(std::move(comps));
    Skew<Kind> reconstructed = lie_derivative(witness.X, base);
    if (mode == DefMode::Foliation) {
        Poly f = Poly::zero(n);
        for (int k = 0; k < m; ++k)
            if (!is_zero((*solution)[n * m + k]))
                f = f + Poly::monomial(monos[k], (*solution)[n * m + k]);
        reconstructed = reconstructed + base * f;
        witness.f = std::move(f);
    }
    if (reconstructed != candidate)
        throw HypothesisError("is_trivial_deformation: internal verification failed");
    return witness;
}

} // namespace

std::optional<TrivialWitness> is_trivial_deformation(const MultiVec& base,
                                                     const MultiVec& candidate,
                                                     DefMode mode, int cutoff) {
    const DeformationCheck check = is_infinitesimal_deformation(base, candidate);
    if (!check.is_deformation)
        throw HypothesisError("is_trivial_deformation: candidate is not an infinitesimal deformation");
    return solve_trivial(base, candidate, mode, cutoff);
}

std::optional<TrivialWitness> is_trivial_deformation(const DiffForm& base,
                                                     const DiffForm& candidate,
                                                     DefMode mode, int cutoff) {
    const DeformationCheck check = is_infinitesimal_deformation(base, candidate);
    if (!check.is_deformation)
        throw HypothesisError("is_trivial_deformation: candidate is not an infinitesimal deformation");
    return solve_trivial(base, candidate, mode, cutoff);
}

QuotientReport milnor_number(const Poly& f, const TruncationPolicy& policy) {
    if (f.is_zero()) throw HypothesisError("milnor_number: zero function germ");
    if (!is_zero(f.constant_term()))
        throw HypothesisError("milnor_number: f(0) != 0, not a singular germ");
    SubmoduleSpec spec;
    spec.nvars = f.nvars();
    spec.ambient_rank = 1;
    for (int i = 0; i < f.nvars(); ++i)
        spec.ogenerators.push_back({partial_derivative(f, i)});
    return local_quotient_dim(spec, policy);
}

QuotientReport tjurina_number(const Poly& f, const TruncationPolicy& policy) {
    if (f.is_zero()) throw HypothesisError("tjurina_number: zero function germ");
    if (!is_zero(f.constant_term()))
        throw HypothesisError("tjurina_number: f(0) != 0, not a singular germ");
    SubmoduleSpec spec;
    spec.nvars = f.nvars();
    spec.ambient_rank = 1;
    spec.ogenerators.push_back({f});
    for (int i = 0; i < f.nvars(); ++i)
        spec.ogenerators.push_back({partial_derivative(f, i)});
    return local_quotient_dim(spec, policy);
}

QuotientReport dh_top_order(const Poly& f, DefMode mode, const TruncationPolicy& policy) {
    if (f.is_zero()) throw HypothesisError("dh_top_order: zero function germ");
    if (!is_zero(f.constant_term()))
        throw HypothesisError("dh_top_order: f(0) != 0, not a singular germ");
    for (int i = 0; i < f.nvars(); ++i)
        if (!is_zero(partial_derivative(f, i).constant_term()))
            throw HypothesisError("dh_top_order: df(0) != 0, the germ is regular at 0");
    if (mode == DefMode::Foliation) return tjurina_number(f, policy);

    // Tensor mode: quotient by the Q-span of X(f) - (div X) f over monomial
    // fields X = x^alpha d/dx_i. The map is not O_n-linear in X, so these
    // enter as fixed rows.
    SubmoduleSpec spec;
    spec.nvars = f.nvars();
    spec.ambient_rank = 1;
    std::vector<Poly> partials;
    for (int i = 0; i < f.nvars(); ++i) partials.push_back(partial_derivative(f, i));
    for (const Expo& alpha : monomials_up_to(f.nvars(), policy.max_cutoff)) {
        for (int i = 0; i < f.nvars(); ++i) {
            Poly xalpha = Poly::monomial(alpha, Rat(1));
            Poly row = partials[i].mul_term(alpha, Rat(1)) - partial_derivative(xalpha, i) * f;
            if (!row.is_zero()) spec.cgenerators.push_back({std::move(row)});
        }
    }
    return local_quotient_dim(spec, policy);
}

SubmoduleSpec rl_submodule(const std::vector<Poly>& F, int max_cutoff) {
    if (F.empty()) throw HypothesisError("rl_submodule: empty map germ");
    const int n = F[0].nvars();
    const int p = static_cast<int>(F.size());

    // germ normalization: composition with functions of F only sees F - F(0)
    std::vector<Poly> f;
    for (const Poly& fi : F) f.push_back(fi - Poly::constant(n, fi.constant_term()));

    DiffForm omega = DiffForm::scalar(Poly::constant(n, Rat(1)));
    for (const Poly& fi : f) omega = wedge(omega, ext_d(DiffForm::scalar(fi)));
    if (omega.is_zero())
        throw HypothesisError("rl_submodule: differentials df_1, ..., df_p are dependent");

    SubmoduleSpec spec;
    spec.nvars = n;
    spec.ambient_rank = p;
    for (int i = 0; i < n; ++i) {
        PolyTuple tuple;
        for (const Poly& fi : f) tuple.push_back(partial_derivative(fi, i));
        spec.ogenerators.push_back(std::move(tuple));
    }

    // monomials in the f_k of vanishing order <= cutoff, truncated products
    std::vector<int> vals;
    for (const Poly& fi : f) vals.push_back(fi.low_deg());
    std::vector<Poly> compositions;
    std::function<void(int, Poly, int)> rec = [&](int k, Poly prod, int val) {
        if (k == p) {
            compositions.push_back(std::move(prod));
            return;
        }
        rec(k + 1, prod, val);
        Poly cur = std::move(prod);
        int v = val;
        for (;;) {
            v += vals[k];
            if (v > max_cutoff) break;
            cur = (cur * f[k]).truncate(max_cutoff);
            rec(k + 1, cur, v);
        }
    };
    rec(0, Poly::constant(n, Rat(1)), 0);
    for (const Poly& comp : compositions)
        for (int j = 0; j < p; ++j) {
            PolyTuple tuple(p, Poly::zero(n));
            tuple[j] = comp;
            spec.cgenerators.push_back(std::move(tuple));
        }
    return spec;
}

QuotientReport rl_quotient_dim(const RlProblem& problem) {
    return local_quotient_dim(rl_submodule(problem.F, problem.policy.max_cutoff),
                              problem.policy);
}

namespace {

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    const int k = static_cast<int>(m.size());
    if (k == 1) return m[0][0];
    Poly det = Poly::zero(m[0][0].nvars());
    for (int i = 0; i < k; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (int r = 0; r < k; ++r) {
            if (r == i) continue;
            minor.push_back(std::vector<Poly>(m[r].begin() + 1, m[r].end()));
        }
        Poly cofactor = m[i][0] * poly_det(minor);
        det = (i % 2 == 0) ? det + cofactor : det - cofactor;
    }
    return det;
}

} // namespace

QuotientReport dh_decomposable_foliation(const std::vector<Poly>& F,
                                         const TruncationPolicy& policy) {
    if (F.empty()) throw HypothesisError("dh_decomposable_foliation: empty map germ");
    const int n = F[0].nvars();
    const int p = static_cast<int>(F.size());
    if (p > n) throw HypothesisError("dh_decomposable_foliation: more integrals than variables");

    // singular set of df_1^...^df_p = zero set of the maximal minors of dF
    std::vector<std::vector<Poly>> jac(p, std::vector<Poly>(n, Poly::zero(n)));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < n; ++j) jac[i][j] = partial_derivative(F[i], j);

    PolyIdeal minors;
    IdxSet cols(p);
    for (int i = 0; i < p; ++i) cols[i] = i;
    do {
        std::vector<std::vector<Poly>> sub(p, std::vector<Poly>(p, Poly::zero(n)));
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) sub[i][j] = jac[i][cols[j]];
        Poly det = poly_det(sub);
        if (!det.is_zero()) minors.generators.push_back(std::move(det));
    } while (next_subset(cols, n));

    if (minors.generators.empty())
        throw HypothesisError("dh_decomposable_foliation: df_1^...^df_p vanishes identically");
    const VarietyCodim vc = variety_codim(minors);
    if (!vc.empty_variety && vc.codim < p + 2)
        throw HypothesisError("dh_decomposable_foliation: codim S(omega) = " +
                              std::to_string(vc.codim) + " < " + std::to_string(p + 2) +
                              "; the identification with the RL quotient needs a smaller "
                              "singular set");
    return rl_quotient_dim({F, policy});
}

std::optional<Decomposition> decompose_deformation(const std::vector<Poly>& F,
                                                   const DiffForm& eta, int cutoff) {
    if (F.empty()) throw HypothesisError("decompose_deformation: empty map germ");
    const int n = F[0].nvars();
    const int p = static_cast<int>(F.size());

    std::vector<DiffForm> dfs;
    for (const Poly& fi : F) dfs.push_back(ext_d(DiffForm::scalar(fi)));
    DiffForm omega = dfs[0];
    for (int i = 1; i < p; ++i) omega = wedge(omega, dfs[i]);
    if (omega.is_zero())
        throw HypothesisError("decompose_deformation: differentials are dependent");

    const DeformationCheck check = is_infinitesimal_deformation(omega, eta);
    if (!check.is_deformation)
        throw HypothesisError("decompose_deformation: eta is not an infinitesimal deformation");

    // prefix[i] = df_1^...^df_{i-1}, suffix[i] = df_{i+1}^...^df_p
    std::vector<DiffForm> prefix(p, DiffForm::scalar(Poly::constant(n, Rat(1))));
    std::vector<DiffForm> suffix(p, DiffForm::scalar(Poly::constant(n, Rat(1))));
    for (int i = 1; i < p; ++i) prefix[i] = wedge(prefix[i - 1], dfs[i - 1]);
    for (int i = p - 2; i >= 0; --i) suffix[i] = wedge(dfs[i + 1], suffix[i + 1]);

    const std::vector<Expo> monos = monomials_up_to(n, cutoff);
    const int m = static_cast<int>(monos.size());
    EquationSink<FormKind> sink(m * (p + 1));
    for (int k = 0; k < m; ++k)
        sink.add(omega * Poly::monomial(monos[k], Rat(1)), k); // a_0 block
    for (int i = 0; i < p; ++i)
        for (int k = 0; k < m; ++k) {
            const DiffForm dmono = ext_d(DiffForm::scalar(Poly::monomial(monos[k], Rat(1))));
            sink.add(wedge(wedge(prefix[i], dmono), suffix[i]), (i + 1) * m + k);
        }
    sink.set_rhs(eta);
    auto solution = sink.solve();
    if (!solution) return std::nullopt;

    auto read_poly = [&](int block) {
        Poly out = Poly::zero(n);
        for (int k = 0; k < m; ++k)
            if (!is_zero((*solution)[block * m + k]))
                out = out + Poly::monomial(monos[k], (*solution)[block * m + k]);
        return out;
    };
    Decomposition dec;
    dec.a0 = read_poly(0);
    for (int i = 0; i < p; ++i) dec.a.push_back(read_poly(i + 1));

    DiffForm rebuilt = omega * dec.a0;
    for (int i = 0; i < p; ++i)
        rebuilt = rebuilt +
                  wedge(wedge(prefix[i], ext_d(DiffForm::scalar(dec.a[i]))), suffix[i]);
    if (rebuilt != eta)
        throw HypothesisError("decompose_deformation: internal verification failed");
    return dec;
}

} // namespace nambu
