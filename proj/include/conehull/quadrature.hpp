#pragma once

#include <functional>
#include <vector>

namespace conehull {

// Nodes and weights of n-point Gauss-Legendre on [-1,1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
    explicit GaussLegendre(int n);

    template <class F>
    double integrate(F&& f, double a, double b) const {
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            s += weights[i] * f(mid + half * nodes[i]);
        return s * half;
    }
};

// Adaptive bisection on top of a fixed Gauss-Legendre rule, absolute tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol);

} // namespace conehull
