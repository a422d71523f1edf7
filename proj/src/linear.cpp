#include "nambu/linear.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "nambu/errors.hpp"
#include "nambu/integrability.hpp"

namespace nambu {

MultiVec linear_vector_field(const RatMat& m) {
    assert(m.rows == m.cols);
    const int n = m.rows;
    std::vector<Poly> comps(n, Poly::zero(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (!is_zero(m.at(i, j)))
                comps[j] = comps[j] + Poly::variable(n, i) * m.at(i, j);
    return vector_field(std::move(comps));
}

std::optional<RatMat> matrix_of_linear_field(const MultiVec& x) {
    if (x.degree() != 1) return std::nullopt;
    const int n = x.nvars();
    RatMat m(n, n);
    for (const auto& [idx, c] : x.comps()) {
        const int j = idx[0];
        for (const auto& [e, coeff] : c.terms()) {
            if (total_deg(e) != 1) return std::nullopt;
            for (int i = 0; i < n; ++i)
                if (e[i] == 1) m.at(i, j) = coeff;
        }
    }
    return m;
}

namespace {

// Matrix of Z -> MZ - ZM acting on vec(Z), row-major vectorization.
RatMat adjoint_operator(const RatMat& m) {
    const int n = m.rows;
    RatMat op(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int row = i * n + j;
            for (int k = 0; k < n; ++k) {
                op.at(row, k * n + j) += m.at(i, k); // (MZ)_{ij} term
                op.at(row, i * n + k) -= m.at(k, j); // (ZM)_{ij} term
            }
        }
    return op;
}

} // namespace

int adjoint_orbit_dim(const RatMat& m) {
    assert(m.rows == m.cols);
    return rank(adjoint_operator(m));
}

int centralizer_dim(const RatMat& m) {
    assert(m.rows == m.cols);
    const int n = m.rows;
    // assemble the commutation constraints column-wise, then count the
    // nullspace dimension
    RatMat constraints(n * n, n * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const int col = k * n + l;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Rat v(0);
                    if (l == j) v += m.at(i, k);
                    if (k == i) v -= m.at(l, j);
                    constraints.at(i * n + j, col) = std::move(v);
                }
        }
    return n * n - rank(constraints);
}

namespace {

// Rational roots (with multiplicity) of a monic rational polynomial;
// nullopt when it does not split over Q.
std::optional<std::vector<Rat>> rational_roots(std::vector<Rat> coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<Rat> roots;
    std::vector<Rat> p = std::move(coeffs); // p[0] + p[1] t + ... + p[deg] t^deg
    int deg = n;
    auto eval = [&](const Rat& t) {
        Rat v(0);
        for (int i = deg; i >= 0; --i) v = v * t + p[i];
        return v;
    };
    auto deflate = [&](const Rat& r) {
        // synthetic division by (t - r)
        std::vector<Rat> q(deg, Rat(0));
        Rat carry = p[deg];
        for (int i = deg - 1; i >= 0; --i) {
            q[i] = carry;
            carry = p[i] + carry * r;
        }
        p = std::move(q);
        --deg;
    };
    while (deg > 0) {
        if (is_zero(p[0])) {
            roots.emplace_back(0);
            deflate(Rat(0));
            continue;
        }
        // clear denominators, enumerate candidate roots num/den
        mpz_class den(1);
        for (int i = 0; i <= deg; ++i)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p[i].get_den().get_mpz_t());
        mpz_class a0 = p[0].get_num() * (den / p[0].get_den());
        mpz_class an = p[deg].get_num() * (den / p[deg].get_den());
        mpz_class a0_abs = abs(a0), an_abs = abs(an);
        bool found = false;
        for (mpz_class u(1); u * u <= a0_abs && !found; ++u) {
            if (a0_abs % u != 0) continue;
            const mpz_class u_pair = a0_abs / u;
            for (const mpz_class& num : {mpz_class(u), u_pair}) {
                for (mpz_class v(1); v * v <= an_abs && !found; ++v) {
                    if (an_abs % v != 0) continue;
                    const mpz_class v_pair = an_abs / v;
                    for (const mpz_class& dd : {mpz_class(v), v_pair}) {
                        for (int s : {1, -1}) {
                            Rat cand(num * s, dd);
                            cand.canonicalize();
                            if (is_zero(eval(cand))) {
                                roots.push_back(cand);
                                deflate(cand);
                                found = true;
                                break;
                            }
                        }
                        if (found) break;
                    }
                    if (found) break;
                }
                if (found) break;
            }
        }
        if (!found) return std::nullopt;
    }
    return roots;
}

// all m in N^k with |m| = s, lexicographic
void compositions(int k, long s, std::vector<long>& cur, int pos,
                  const std::function<bool(const std::vector<long>&)>& visit, bool& stop) {
    if (stop) return;
    if (pos == k - 1) {
        cur[pos] = s;
        if (visit(cur)) stop = true;
        return;
    }
    for (long v = s; v >= 0 && !stop; --v) {
        cur[pos] = v;
        compositions(k, s - v, cur, pos + 1, visit, stop);
    }
}

bool search_resonance(const std::vector<Rat>& lambda, long max_order, ResonanceResult& out) {
    const int k = static_cast<int>(lambda.size());
    std::vector<long> cur(k, 0);
    for (long s = 2; s <= max_order; ++s) {
        bool stop = false;
        std::function<bool(const std::vector<long>&)> visit =
            [&](const std::vector<long>& m) {
                Rat sum(0);
                for (int j = 0; j < k; ++j)
                    if (m[j]) sum += Rat(m[j]) * lambda[j];
                for (int i = 0; i < k; ++i) {
                    if (sum == lambda[i]) {
                        out.status = ResonanceResult::Status::Resonant;
                        out.witness_i = i;
                        out.witness_m = m;
                        return true;
                    }
                }
                return false;
            };
        compositions(k, s, cur, 0, visit, stop);
        if (stop) return true;
    }
    return false;
}

} // namespace

ResonanceResult is_nonresonant(const RatMat& m, long order_bound) {
    assert(m.rows == m.cols);
    ResonanceResult out;
    out.order_bound = order_bound;
    auto roots = rational_roots(char_poly(m));
    if (!roots) {
        out.status = ResonanceResult::Status::Unknown;
        return out;
    }
    out.rational_spectrum = true;
    out.eigenvalues = *roots;
    const std::vector<Rat>& lambda = out.eigenvalues;
    const int n = static_cast<int>(lambda.size());

    for (int i = 0; i < n; ++i) {
        if (is_zero(lambda[i])) {
            // lambda_i = 2 lambda_i is a resonance of order 2
            out.status = ResonanceResult::Status::Resonant;
            out.witness_i = i;
            out.witness_m.assign(n, 0);
            out.witness_m[i] = 2;
            return out;
        }
    }

    const bool all_positive = std::all_of(lambda.begin(), lambda.end(),
                                          [](const Rat& v) { return sgn(v) > 0; });
    const bool all_negative = std::all_of(lambda.begin(), lambda.end(),
                                          [](const Rat& v) { return sgn(v) < 0; });
    if (all_positive || all_negative) {
        // scale to positive integer coins; a relation lambda_i = <m, lambda>
        // becomes an exact coin-sum, decidable by dynamic programming
        mpz_class den(1);
        for (const Rat& v : lambda)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
        std::vector<mpz_class> coins;
        mpz_class top(0);
        for (const Rat& v : lambda) {
            mpz_class c = abs(v.get_num()) * (den / v.get_den());
            top = std::max(top, c);
            coins.push_back(std::move(c));
        }
        if (top <= 1000000) {
            const std::size_t limit = top.get_ui();
            // first_coin[s] = index of some coin ending a decomposition of s
            std::vector<int> first_coin(limit + 1, -1);
            for (std::size_t s = 1; s <= limit; ++s)
                for (std::size_t j = 0; j < coins.size(); ++j) {
                    const std::size_t c = coins[j].get_ui();
                    if (c <= s && (c == s || first_coin[s - c] >= 0)) {
                        first_coin[s] = static_cast<int>(j);
                        break;
                    }
                }
            for (std::size_t i = 0; i < coins.size(); ++i) {
                const std::size_t target = coins[i].get_ui();
                for (std::size_t j = 0; j < coins.size(); ++j) {
                    const std::size_t c = coins[j].get_ui();
                    // one coin j plus at least one more to reach the target
                    if (c >= target || first_coin[target - c] < 0) continue;
                    out.status = ResonanceResult::Status::Resonant;
                    out.witness_i = static_cast<int>(i);
                    out.witness_m.assign(n, 0);
                    out.witness_m[j] += 1;
                    std::size_t rest = target - c;
                    while (rest > 0) {
                        const int k = first_coin[rest];
                        out.witness_m[k] += 1;
                        rest -= coins[k].get_ui();
                    }
                    return out;
                }
            }
            out.status = ResonanceResult::Status::Nonresonant;
            return out;
        }
        // value range too large for the table: bounded search only
        if (search_resonance(lambda, order_bound, out)) return out;
        out.status = ResonanceResult::Status::Unknown;
        return out;
    }

    if (search_resonance(lambda, order_bound, out)) return out;
    out.status = ResonanceResult::Status::Unknown;
    return out;
}

DhLinReport dh_lin(const RatMat& m) {
    assert(m.rows == m.cols);
    if (m.is_zero()) throw HypothesisError("dh_lin: zero linear part");
    const int n = m.rows;
    DhLinReport report;
    report.orbit_dim = adjoint_orbit_dim(m);
    report.dim_tensor = static_cast<long>(n) * n - report.orbit_dim;

    // is M itself an adjoint image ad_M(Z) = M?
    std::vector<Rat> rhs;
    rhs.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rhs.push_back(m.at(i, j));
    const bool in_image = solve_dense(adjoint_operator(m), std::move(rhs)).has_value();
    report.shift_line_independent = !in_image;
    report.dim_foliation = report.dim_tensor - (in_image ? 0 : 1);
    return report;
}

namespace {

// strictly increasing (size)-subsets of a sorted pool, lexicographic
std::vector<IdxSet> subsets_of(const IdxSet& pool, int size) {
    std::vector<IdxSet> out;
    if (size < 0 || size > static_cast<int>(pool.size())) return out;
    IdxSet idx(size);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == size) {
            out.push_back(idx);
            return;
        }
        for (int i = start; i < static_cast<int>(pool.size()); ++i) {
            idx[depth] = pool[i];
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

IdxSet comps_intersection(const std::vector<std::pair<IdxSet, Poly>>& comps) {
    IdxSet acc = comps.front().first;
    for (const auto& [idx, c] : comps) {
        IdxSet next;
        std::set_intersection(acc.begin(), acc.end(), idx.begin(), idx.end(),
                              std::back_inserter(next));
        acc = std::move(next);
    }
    return acc;
}

bool poly_supported_on(const Poly& p, const std::vector<bool>& allowed) {
    for (const auto& [e, c] : p.terms())
        for (std::size_t v = 0; v < allowed.size(); ++v)
            if (e[v] > 0 && !allowed[v]) return false;
    return true;
}

std::optional<LinearNambuClass> try_type2(const MultiVec& lambda) {
    const int n = lambda.nvars();
    const int q = lambda.degree();
    if (q < 1) return std::nullopt;
    const IdxSet inter = comps_intersection(lambda.comps());
    for (const IdxSet& s : subsets_of(inter, q - 1)) {
        const IdxSet block = complement_idx(s, n);
        std::vector<bool> allowed(n, false);
        for (int v : block) allowed[v] = true;

        MultiVec x(n, 1);
        bool ok = true;
        for (const auto& [idx, c] : lambda.comps()) {
            IdxSet extra;
            std::set_difference(idx.begin(), idx.end(), s.begin(), s.end(),
                                std::back_inserter(extra));
            if (extra.size() != 1) {
                ok = false;
                break;
            }
            const int j = extra[0];
            const int sign = interleave_sign(s, {j});
            if (!poly_supported_on(c, allowed)) {
                ok = false;
                break;
            }
            x.add_component({j}, c * Rat(sign));
        }
        if (!ok || x.is_zero()) continue;
        MultiVec rebuilt = s.empty() ? x : wedge(MultiVec::basis(n, s), x);
        if (rebuilt != lambda) continue;

        const auto full = matrix_of_linear_field(x);
        if (!full) continue;
        LinearNambuClass result;
        result.kind = LinearNambuKind::Type2;
        result.block = block;
        const int bn = static_cast<int>(block.size());
        RatMat b(bn, bn);
        for (int bi = 0; bi < bn; ++bi)
            for (int bj = 0; bj < bn; ++bj) b.at(bi, bj) = full->at(block[bi], block[bj]);
        result.B = b;
        const ResonanceResult res = is_nonresonant(b);
        if (res.status == ResonanceResult::Status::Nonresonant)
            result.rigidity_note =
                "decomposable with non-resonant linear factor: trivial formal deformation cohomology";
        else if (res.status == ResonanceResult::Status::Resonant)
            result.rigidity_note =
                "decomposable with resonant linear factor: deformation cohomology may be infinite-dimensional";
        else
            result.rigidity_note = "decomposable; resonance of the linear factor undecided";
        return result;
    }
    return std::nullopt;
}

std::optional<LinearNambuClass> try_type1(const MultiVec& lambda) {
    const int n = lambda.nvars();
    const DiffForm w = dualize(lambda);
    const int p = w.degree();
    if (p < 1 || w.is_zero()) return std::nullopt;
    const IdxSet inter = comps_intersection(w.comps());
    for (const IdxSet& sp : subsets_of(inter, p - 1)) {
        // read the candidate gradient in the directions off sp
        std::vector<Poly> grad(n, Poly::zero(n));
        bool ok = true;
        for (const auto& [idx, c] : w.comps()) {
            IdxSet extra;
            std::set_difference(idx.begin(), idx.end(), sp.begin(), sp.end(),
                                std::back_inserter(extra));
            if (extra.size() != 1) {
                ok = false;
                break;
            }
            const int j = extra[0];
            grad[j] = c * Rat(interleave_sign(sp, {j}));
        }
        if (!ok) continue;
        // integrability of the partial gradient: c_{jk} symmetric off sp
        RatMat qmat(n, n);
        std::vector<bool> in_sp(n, false);
        for (int v : sp) in_sp[v] = true;
        for (int j = 0; j < n && ok; ++j) {
            if (in_sp[j] || grad[j].is_zero()) continue;
            for (const auto& [e, coeff] : grad[j].terms()) {
                int var = -1;
                for (int v = 0; v < n; ++v)
                    if (e[v] == 1) var = v;
                if (var < 0) {
                    ok = false;
                    break;
                }
                if (in_sp[var]) {
                    qmat.at(var, j) += coeff / 2;
                    qmat.at(j, var) += coeff / 2;
                } else if (var == j) {
                    qmat.at(j, j) += coeff / 2;
                } else {
                    qmat.at(var, j) += coeff / 2;
                    qmat.at(j, var) += coeff / 2;
                }
            }
        }
        if (!ok) continue;
        // symmetry check and reconstruction Q = x^T qmat x
        Poly q = Poly::zero(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!is_zero(qmat.at(a, b)))
                    q = q + Poly::variable(n, a) * Poly::variable(n, b) * qmat.at(a, b);
        DiffForm dq = ext_d(DiffForm::scalar(q));
        DiffForm rebuilt = dq;
        for (auto it = sp.rbegin(); it != sp.rend(); ++it)
            rebuilt = wedge(DiffForm::basis(n, {*it}), rebuilt);
        if (rebuilt != w) continue;

        LinearNambuClass result;
        result.kind = LinearNambuKind::Type1;
        result.Q = qmat;
        IdxSet active;
        for (int v = 0; v < n; ++v) {
            bool nonzero_row = false;
            for (int u = 0; u < n; ++u)
                if (!is_zero(qmat.at(v, u))) nonzero_row = true;
            if (nonzero_row) active.push_back(v);
        }
        result.block = active;
        result.nondegenerate_Q =
            rank(qmat) == static_cast<int>(active.size()) && !active.empty();
        result.rigidity_note =
            result.nondegenerate_Q
                ? "nondegenerate quadric: formally and analytically rigid"
                : "degenerate quadric: no rigidity conclusion";
        return result;
    }
    return std::nullopt;
}

} // namespace

LinearNambuClass classify_linear_nambu(const MultiVec& lambda) {
    if (lambda.is_zero())
        throw HypothesisError("classify_linear_nambu: zero tensor");
    for (const auto& [idx, c] : lambda.comps())
        for (const auto& [e, coeff] : c.terms())
            if (total_deg(e) != 1)
                throw HypothesisError(
                    "classify_linear_nambu: coefficients must be homogeneous linear");

    if (!is_nambu(lambda).integrable) {
        LinearNambuClass result;
        result.kind = LinearNambuKind::NotLinearNambu;
        result.rigidity_note = "fails the integrability conditions of the dual form";
        return result;
    }
    if (auto t2 = try_type2(lambda)) return *t2;
    if (auto t1 = try_type1(lambda)) return *t1;
    LinearNambuClass result;
    result.kind = LinearNambuKind::NotLinearNambu;
    result.rigidity_note =
        "passes the Nambu check but matches neither normal form in the given coordinates";
    return result;
}

} // namespace nambu
