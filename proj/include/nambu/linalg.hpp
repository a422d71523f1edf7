#ifndef NAMBU_LINALG_HPP
#define NAMBU_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "nambu/rational.hpp"

namespace nambu {

// Dense exact rational matrix (row-major).
struct RatMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rat(0)) {}

    static RatMat identity(int n);
    static RatMat diag(const std::vector<Rat>& d);

    Rat& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const RatMat& o) const = default;

    RatMat operator*(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat transpose() const;
    bool is_zero() const;
};

int rank(RatMat m); // destructive Gaussian elimination on a copy

// Solve M x = b; nullopt when inconsistent. Free variables are set to 0.
std::optional<std::vector<Rat>> solve_dense(RatMat m, std::vector<Rat> b);

// Monic characteristic polynomial coefficients c_0..c_n of an n x n matrix
// (Faddeev-LeVerrier), p(t) = t^n + c_{n-1} t^{n-1} + ... + c_0.
std::vector<Rat> char_poly(const RatMat& m);

// Sparse exact linear system over Q, rows are equations.
struct SparseSystem {
    int ncols = 0;
    std::vector<std::map<int, Rat>> rows;
    std::vector<Rat> rhs;

    void add_row(std::map<int, Rat> row, Rat b) {
        rows.push_back(std::move(row));
        rhs.push_back(std::move(b));
    }
};

// Gauss-Jordan; nullopt when inconsistent, otherwise one exact solution
// with free variables at 0.
std::optional<std::vector<Rat>> solve_sparse(const SparseSystem& system);

} // namespace nambu

#endif
