#include "conehull/lp.hpp"

#include <algorithm>
#include <cmath>

#include "conehull/errors.hpp"
#include "conehull/linalg.hpp"
#include "conehull/tolerances.hpp"

namespace conehull {

namespace {

// Phase-1 simplex: is there lambda >= 0 with A lambda = b? The tableau keeps
// the artificial objective row at the bottom. Bland's smallest-index rule on
// both the entering and the leaving choice rules out cycling.
bool equality_system_feasible(std::vector<std::vector<double>> A, std::vector<double> b) {
    const std::size_t m = A.size();
    const std::size_t n = A.empty() ? 0 : A[0].size();
    const double eps = tol::geometric;

    for (std::size_t r = 0; r < m; ++r) {
        if (b[r] < 0.0) {
            for (double& v : A[r]) v = -v;
            b[r] = -b[r];
        }
    }

    // columns: n structural + m artificial
    const std::size_t cols = n + m;
    std::vector<std::vector<double>> T(m + 1, std::vector<double>(cols + 1, 0.0));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) T[r][c] = A[r][c];
        T[r][n + r] = 1.0;
        T[r][cols] = b[r];
    }
    // objective: minimize sum of artificials; expressed via the basic rows
    for (std::size_t c = 0; c <= cols; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < m; ++r) s += T[r][c];
        T[m][c] = -s;
    }
    for (std::size_t r = 0; r < m; ++r) T[m][n + r] = 0.0;

    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

    for (;;) {
        // entering: smallest index with negative reduced cost
        std::size_t enter = cols;
        for (std::size_t c = 0; c < cols; ++c) {
            if (T[m][c] < -eps) {
                enter = c;
                break;
            }
        }
        if (enter == cols) break;

        // leaving: min ratio, smallest basis index on ties
        std::size_t leave = m;
        double best_ratio = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
            if (T[r][enter] > eps) {
                const double ratio = T[r][cols] / T[r][enter];
                if (leave == m || ratio < best_ratio - eps ||
                    (ratio < best_ratio + eps && basis[r] < basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
        }
        if (leave == m) break; // unbounded phase-1 cannot happen, but stay safe

        const double piv = T[leave][enter];
        for (double& v : T[leave]) v /= piv;
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == leave) continue;
            const double f = T[r][enter];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c <= cols; ++c) T[r][c] -= f * T[leave][c];
        }
        basis[leave] = enter;
    }

    const double infeasibility = -T[m][cols];
    return infeasibility <= eps;
}

} // namespace

bool point_in_conv_lp(const Point& x, const std::vector<Point>& points) {
    if (points.empty()) throw InvalidParams("point_in_conv_lp: empty point list");
    const std::size_t d = x.size();
    for (const auto& p : points) check_dim(p, d, "point_in_conv_lp");

    // rescale coordinates so the tolerance acts relative to the data
    double scale = 1.0;
    for (const auto& p : points)
        for (double v : p) scale = std::max(scale, std::fabs(v));
    for (double v : x) scale = std::max(scale, std::fabs(v));

    std::vector<std::vector<double>> A(d + 1, std::vector<double>(points.size()));
    std::vector<double> b(d + 1);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < points.size(); ++c) A[r][c] = points[c][r] / scale;
        b[r] = x[r] / scale;
    }
    for (std::size_t c = 0; c < points.size(); ++c) A[d][c] = 1.0;
    b[d] = 1.0;
    return equality_system_feasible(std::move(A), std::move(b));
}

bool affine_intersects_hull(const Point& anchor, const std::vector<Point>& span_points,
                            const std::vector<Point>& hull_points) {
    const std::size_t d = anchor.size();
    if (hull_points.empty())
        throw InvalidParams("affine_intersects_hull: empty hull point list");
    for (const auto& p : span_points) check_dim(p, d, "affine_intersects_hull");
    for (const auto& p : hull_points) check_dim(p, d, "affine_intersects_hull");

    Matrix directions;
    for (const auto& p : span_points)
        if (!gram_schmidt_append(directions, sub(p, anchor)))
            throw DegenerateAffineHull("affine_intersects_hull: rank-deficient direction space");

    // orthonormal basis of the complement
    Matrix full = directions;
    Matrix complement;
    for (std::size_t axis = 0; axis < d && full.size() < d; ++axis) {
        Point e(d, 0.0);
        e[axis] = 1.0;
        if (gram_schmidt_append(full, std::move(e)))
            complement.push_back(full.back());
    }
    if (full.size() != d)
        throw DegenerateAffineHull("affine_intersects_hull: could not complete basis");
    if (complement.empty()) return true; // affine hull is the whole space

    auto coords = [&](const Point& p) {
        Point c(complement.size());
        for (std::size_t i = 0; i < complement.size(); ++i) c[i] = dot(complement[i], p);
        return c;
    };
    std::vector<Point> projected;
    projected.reserve(hull_points.size());
    for (const auto& p : hull_points) projected.push_back(coords(p));
    return point_in_conv_lp(coords(anchor), projected);
}

} // namespace conehull
