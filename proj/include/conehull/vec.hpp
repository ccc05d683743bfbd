#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "conehull/errors.hpp"

namespace conehull {

// A point of R^d is a dense coordinate vector; its dimension is its length.
using Point = std::vector<double>;

inline void check_dim(const Point& p, std::size_t d, const char* where) {
    if (p.size() != d)
        throw DimensionMismatch(std::string(where) + ": expected dimension " +
                                std::to_string(d) + ", got " + std::to_string(p.size()));
}

inline double dot(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Point& a) { return dot(a, a); }
inline double norm(const Point& a) { return std::sqrt(norm2(a)); }

inline Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point add(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Point scaled(const Point& a, double s) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

inline void axpy(Point& y, double s, const Point& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
}

inline Point negated(const Point& a) { return scaled(a, -1.0); }

inline bool all_finite(const Point& a) {
    for (double v : a)
        if (!std::isfinite(v)) return false;
    return true;
}

} // namespace conehull
