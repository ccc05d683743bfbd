#pragma once

#include <cmath>

#include "conehull/errors.hpp"

namespace conehull {

inline constexpr double PI = 3.14159265358979323846;

inline double log_gamma(double x) { return std::lgamma(x); }

// Surface area of the unit sphere S^{s-1}, extended to real s > 0:
// omega(s) = 2 pi^{s/2} / Gamma(s/2). Evaluated in log space so that
// non-integer indices like omega(d + gamma) stay accurate.
inline double omega(double s) {
    if (!(s > 0.0)) throw InvalidParams("omega: argument must be positive");
    return std::exp(std::log(2.0) + 0.5 * s * std::log(PI) - log_gamma(0.5 * s));
}

// Volume of the unit ball in R^d, extended to real d > 0.
inline double kappa(double d) {
    if (!(d > 0.0)) throw InvalidParams("kappa: argument must be positive");
    return std::exp(0.5 * d * std::log(PI) - log_gamma(0.5 * d + 1.0));
}

inline double log_factorial(double n) { return log_gamma(n + 1.0); }

inline double log_choose(double n, double k) {
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

inline double choose(double n, double k) { return std::exp(log_choose(n, k)); }

} // namespace conehull
