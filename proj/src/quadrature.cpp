#include "conehull/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace conehull {

// Newton iteration on the Legendre recurrence (roots are symmetric, compute half).
GaussLegendre::GaussLegendre(int n) : nodes(n), weights(n) {
    const double eps = 1e-15;
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < eps) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
}

namespace {

double adapt(const std::function<double(double)>& f, const GaussLegendre& rule, double a,
             double b, double whole, double abs_tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = rule.integrate(f, a, mid);
    const double right = rule.integrate(f, mid, b);
    // stop at the rounding-noise floor of the local contributions, otherwise
    // spiky integrands recurse forever chasing unreachable tolerances
    const double noise = 100.0 * 2.220446049250313e-16 * (std::fabs(left) + std::fabs(right));
    if (std::fabs(left + right - whole) <= std::max(abs_tol, noise) || depth >= 40)
        return left + right;
    return adapt(f, rule, a, mid, left, 0.5 * abs_tol, depth + 1) +
           adapt(f, rule, mid, b, right, 0.5 * abs_tol, depth + 1);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol) {
    if (!(b >= a)) throw std::invalid_argument("integrate_adaptive: b < a");
    if (a == b) return 0.0;
    static const GaussLegendre rule(15);
    return adapt(f, rule, a, b, rule.integrate(f, a, b), abs_tol, 0);
}

} // namespace conehull
