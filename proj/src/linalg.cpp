#include "nambu/linalg.hpp"

#include <cassert>

namespace nambu {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::diag(const std::vector<Rat>& d) {
    RatMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
    assert(cols == o.rows);
    RatMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (nambu::is_zero(at(i, k))) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
    assert(rows == o.rows && cols == o.cols);
    RatMat r(rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

RatMat RatMat::transpose() const {
    RatMat r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool RatMat::is_zero() const {
    for (const Rat& v : a)
        if (!nambu::is_zero(v)) return false;
    return true;
}

int rank(RatMat m) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (!is_zero(m.at(i, c))) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const Rat inv = Rat(1) / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            const Rat f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

std::optional<std::vector<Rat>> solve_dense(RatMat m, std::vector<Rat> b) {
    assert(static_cast<int>(b.size()) == m.rows);
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (!is_zero(m.at(i, c))) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
            std::swap(b[pivot], b[r]);
        }
        const Rat inv = Rat(1) / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        b[r] *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            const Rat f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < m.rows; ++i)
        if (!is_zero(b[i])) return std::nullopt;
    std::vector<Rat> x(m.cols, Rat(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

std::vector<Rat> char_poly(const RatMat& m) {
    assert(m.rows == m.cols);
    const int n = m.rows;
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    RatMat mk = RatMat::identity(n);
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        const Rat ck = -tr / Rat(k);
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return c;
}

std::optional<std::vector<Rat>> solve_sparse(const SparseSystem& system) {
    // Gauss-Jordan with rows stored as ordered maps. Invariant: every stored
    // pivot row has a 1 in its pivot column and is supported on free columns
    // otherwise, so full reduction of an incoming row is a single sweep over
    // its pivot-column entries.
    std::map<int, std::pair<std::map<int, Rat>, Rat>> pivots; // col -> (row, rhs)

    for (std::size_t i = 0; i < system.rows.size(); ++i) {
        std::map<int, Rat> row = system.rows[i];
        Rat rhs = system.rhs[i];
        for (;;) {
            std::erase_if(row, [](const auto& kv) { return is_zero(kv.second); });
            auto hit = row.end();
            for (auto it = row.begin(); it != row.end(); ++it)
                if (pivots.count(it->first)) {
                    hit = it;
                    break;
                }
            if (hit == row.end()) break;
            const auto& [prow, prhs] = pivots.at(hit->first);
            const Rat f = hit->second;
            for (const auto& [c, v] : prow) row[c] -= f * v;
            rhs -= f * prhs;
        }
        if (row.empty()) {
            if (!is_zero(rhs)) return std::nullopt;
            continue;
        }
        const int lead = row.begin()->first;
        const Rat inv = Rat(1) / row.begin()->second;
        for (auto& [c, v] : row) v *= inv;
        rhs *= inv;
        // the fresh pivot column may occur in stored rows; eliminate it there
        for (auto& [col, pr] : pivots) {
            auto found = pr.first.find(lead);
            if (found == pr.first.end()) continue;
            const Rat f = found->second;
            for (const auto& [c, v] : row) pr.first[c] -= f * v;
            pr.second -= f * rhs;
            std::erase_if(pr.first, [](const auto& kv) { return is_zero(kv.second); });
        }
        pivots.emplace(lead, std::make_pair(std::move(row), std::move(rhs)));
    }

    std::vector<Rat> x(system.ncols, Rat(0));
    for (const auto& [col, pr] : pivots) x[col] = pr.second;
    return x;
}

} // namespace nambu
