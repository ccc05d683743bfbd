#pragma once

// Small dense linear algebra for dimensions up to ~9. Matrices are row-major
// std::vector<Point>.

#include <algorithm>
#include <cmath>
#include <vector>

#include "conehull/errors.hpp"
#include "conehull/tolerances.hpp"
#include "conehull/vec.hpp"

namespace conehull {

using Matrix = std::vector<Point>; // rows

// Solves A x = b in place by Gaussian elimination with partial pivoting.
// Returns false when the pivot collapses below `pivot_tol` times the matrix scale.
inline bool solve_linear(Matrix A, Point b, Point& x, double pivot_tol = tol::general_position) {
    const std::size_t n = A.size();
    double scale = 0.0;
    for (const auto& row : A)
        for (double v : row) scale = std::max(scale, std::fabs(v));
    if (scale == 0.0) return false;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
        if (std::fabs(A[piv][col]) < pivot_tol * scale) return false;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = A[r][col] / A[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= A[i][c] * x[c];
        x[i] = s / A[i][i];
    }
    return true;
}

// Modified Gram-Schmidt. Appends the orthonormalized part of `v` to `basis`;
// returns false (basis unchanged) when v is numerically inside the span.
inline bool gram_schmidt_append(Matrix& basis, Point v, double rel_tol = tol::general_position) {
    const double original = norm(v);
    if (original == 0.0) return false;
    for (int pass = 0; pass < 2; ++pass) // re-orthogonalize once for stability
        for (const auto& q : basis) axpy(v, -dot(q, v), q);
    const double remaining = norm(v);
    if (remaining < rel_tol * original) return false;
    for (double& x : v) x /= remaining;
    basis.push_back(std::move(v));
    return true;
}

// Numerical rank of the column set via greedy pivoted Gram-Schmidt: at each
// step take the column with the largest residual norm; stop when it drops
// below rel_tol times the leading pivot.
inline std::size_t column_rank(std::vector<Point> cols, double rel_tol = tol::rank_relative) {
    Matrix basis;
    double leading = 0.0;
    for (;;) {
        std::size_t best = cols.size();
        double best_norm = 0.0;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            Point r = cols[j];
            for (const auto& q : basis) axpy(r, -dot(q, r), q);
            const double nr = norm(r);
            if (nr > best_norm) {
                best_norm = nr;
                best = j;
            }
        }
        if (best == cols.size()) break;
        if (basis.empty()) {
            leading = best_norm;
            if (leading == 0.0) break;
        } else if (best_norm < rel_tol * leading) {
            break;
        }
        Point r = cols[best];
        for (const auto& q : basis) axpy(r, -dot(q, r), q);
        for (double& x : r) x /= best_norm;
        basis.push_back(std::move(r));
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(best));
        if (cols.empty()) break;
    }
    return basis.size();
}

// Cholesky solve of the SPD system G x = b. Returns false if a pivot is not
// safely positive.
inline bool cholesky_solve(Matrix G, Point b, Point& x, double rel_tol = tol::general_position) {
    const std::size_t n = G.size();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::fabs(G[i][i]));
    for (std::size_t j = 0; j < n; ++j) {
        double d = G[j][j];
        for (std::size_t k = 0; k < j; ++k) d -= G[j][k] * G[j][k];
        if (!(d > rel_tol * scale)) return false;
        G[j][j] = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = G[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= G[i][k] * G[j][k];
            G[i][j] = s / G[j][j];
        }
    }
    // forward then backward substitution with the factor L
    Point y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= G[i][k] * y[k];
        y[i] = s / G[i][i];
    }
    x.assign(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = y[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= G[k][i] * x[k];
        x[i] = s / G[i][i];
    }
    return true;
}

} // namespace conehull
