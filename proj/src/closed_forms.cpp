#include "conehull/closed_forms.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "conehull/errors.hpp"
#include "conehull/quadrature.hpp"
#include "conehull/special.hpp"
#include "conehull/tolerances.hpp"

namespace conehull {

namespace {
constexpr double INF = std::numeric_limits<double>::infinity();
}

bool Oracle::is_infinite() const { return std::isinf(value); }

double exact_facets_halfsphere(int d, int n) {
    if (d < 1 || n < d) throw InvalidParams("exact_facets_halfsphere: need n >= d >= 1");
    const double lc = log_choose(n, d);
    auto integrand = [&](double a) {
        if (a >= PI) return 0.0;
        // fold the binomial into the integrand in log space; the bare power
        // underflows long before the product does
        const double lp = lc + (n - d) * std::log1p(-a / PI);
        const double s = (d == 1) ? 1.0 : std::pow(std::sin(a), d - 1);
        return std::exp(lp) * s;
    };
    // the integrand concentrates on a window of width ~ pi/n near zero;
    // pre-split geometrically so no panel can hide the whole spike
    int levels = 2;
    while ((1 << levels) < 4 * n && levels < 40) ++levels;
    std::vector<double> cuts{0.0};
    for (int j = levels; j >= 0; --j) cuts.push_back(PI * std::ldexp(1.0, -j));
    double integral = 0.0;
    const double piece_tol = tol::quadrature_abs / static_cast<double>(cuts.size());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        integral += integrate_adaptive(integrand, cuts[i], cuts[i + 1], piece_tol);
    return 2.0 * omega(d) / omega(d + 1) * integral;
}

double limit_facets_halfsphere(int d) {
    if (d < 1) throw InvalidParams("limit_facets_halfsphere: d >= 1");
    const double k = kappa(d);
    return std::exp(-d * std::log(2.0) + log_factorial(d)) * k * k;
}

double expected_facets_poisson(int d, double gamma) {
    if (d < 1 || !(gamma > 0.0))
        throw InvalidParams("expected_facets_poisson: need d >= 1, gamma > 0");
    const double g = gamma;
    double log_val = std::log(2.0) - std::log(static_cast<double>(d)) +
                     (d - 1) * std::log(g) + 0.5 * (d - 1) * std::log(PI) +
                     log_gamma((g * d + 1.0) / 2.0) - log_gamma(g * d / 2.0) +
                     d * (log_gamma(g / 2.0) - log_gamma((g + 1.0) / 2.0));
    return std::exp(log_val);
}

Oracle expected_T(int d, double gamma, double c, double a, double b) {
    if (d < 1 || !(gamma > 0.0) || !(c > 0.0) || a < 0.0 || b < 0.0)
        throw InvalidParams("expected_T: bad parameters");
    Oracle o;
    o.formula_id = "T_expect";
    o.params = {{"d", double(d)}, {"gamma", gamma}, {"c", c}, {"a", a}, {"b", b}};

    const double cond = (gamma - b) * d + b - a;
    if (cond <= 0.0 || gamma - b <= 0.0) {
        o.value = INF;
        return o;
    }
    const double log_w_g1 = std::log(omega(gamma + 1.0));
    double log_val = d * std::log(c) + std::log(omega(d)) - std::log(gamma) -
                     log_factorial(d) - d * log_w_g1;
    log_val += ((a - b + (b - gamma) * d) / gamma) * (std::log(c) - std::log(gamma) - log_w_g1);
    log_val += log_gamma(cond / gamma);
    log_val -= b * log_factorial(d - 1);
    log_val += log_gamma(0.5 * (gamma - b) * d + 0.5 * (b + 1.0)) -
               log_gamma(0.5 * (gamma - b) * d);
    log_val += d * (log_gamma(0.5 * (gamma - b)) - log_gamma(0.5 * (gamma + 1.0)));
    for (int i = 1; i <= d - 1; ++i)
        log_val += log_gamma(0.5 * (i + b + 1.0)) - log_gamma(0.5 * i);
    o.value = std::exp(log_val);
    return o;
}

Oracle expected_volume_poisson(int d, double gamma, double c) {
    if (d < 1 || !(gamma > 0.0) || !(c > 0.0))
        throw InvalidParams("expected_volume_poisson: bad parameters");
    Oracle o;
    o.formula_id = "volume_expect";
    o.params = {{"d", double(d)}, {"gamma", gamma}, {"c", c}};
    if (gamma <= 1.0) {
        o.value = INF;
        return o;
    }
    const double g = gamma;
    double log_val = (d / g) * std::log(c) - log_factorial(d) -
                     d * (1.0 + 1.0 / g) * std::log(2.0) - (d / (2.0 * g)) * std::log(PI);
    log_val += (d * (g - 1.0) / g) * (std::log(g) - log_gamma((g + 1.0) / 2.0));
    log_val += log_gamma(1.0 + d - d / g) + d * log_gamma((g - 1.0) / 2.0) -
               log_gamma(1.0 + 0.5 * d);
    o.value = std::exp(log_val);
    return o;
}

Oracle expected_intrinsic_volume(int d, double gamma, double c, int k) {
    if (k < 1 || k > d) throw InvalidParams("expected_intrinsic_volume: need 1 <= k <= d");
    Oracle inner = expected_volume_poisson(k, gamma, c);
    Oracle o;
    o.formula_id = "intrinsic_volume_expect";
    o.params = {{"d", double(d)}, {"gamma", gamma}, {"c", c}, {"k", double(k)}};
    if (inner.is_infinite()) {
        o.value = INF;
        return o;
    }
    if (k == d) {
        o.value = inner.value; // prefactor is 1
        return o;
    }
    o.value = choose(d, k) * kappa(d) / (kappa(k) * kappa(d - k)) * inner.value;
    return o;
}

Oracle expected_T_symmetric(int d, double gamma, double c, double a, double b) {
    Oracle o = expected_T(d, gamma, 2.0 * c, a, b);
    o.formula_id = "T_expect_symm";
    o.params["c"] = c;
    return o;
}

std::optional<Oracle> constant_B(int k, int d) {
    if (d < 1 || k < 1 || k > d + 1) throw InvalidParams("constant_B: need 1 <= k <= d+1");
    Oracle o;
    o.params = {{"k", double(k)}, {"d", double(d)}};
    if (k == d + 1) {
        o.formula_id = "B_{d+1,d}=0";
        o.value = 0.0;
        return o;
    }
    if (k == d) {
        o.formula_id = "B_{d,d}";
        const double g = std::exp(log_gamma((d + 1.0) / 2.0));
        o.value = std::pow(2.0 * PI, d - 1) * g * g;
        return o;
    }
    if (k == 2) {
        o.formula_id = "B_{2,d}";
        o.value = 0.5 * choose(d + 1, 3) * PI * PI;
        return o;
    }
    return std::nullopt;
}

std::vector<std::optional<double>> limit_f_vector(int d) {
    if (d < 1) throw InvalidParams("limit_f_vector: d >= 1");
    // section f-vector entry j corresponds to cone faces of dimension k = j+1:
    // lim E f_j = (2/k!) B_{k,d}
    std::vector<std::optional<double>> f(d);
    for (int j = 0; j < d; ++j) {
        const int k = j + 1;
        if (auto b = constant_B(k, d))
            f[j] = 2.0 * std::exp(-log_factorial(k)) * b->value;
    }
    // Dehn-Sommerville: d f_{d-1} = 2 f_{d-2}
    if (d >= 2 && f[d - 1] && !f[d - 2]) f[d - 2] = 0.5 * d * (*f[d - 1]);
    // Euler completion when exactly one entry is missing
    int missing = -1, count = 0;
    for (int j = 0; j < d; ++j)
        if (!f[j]) {
            missing = j;
            ++count;
        }
    if (count == 1) {
        const double rhs = 1.0 + ((d - 1) % 2 == 0 ? 1.0 : -1.0);
        double acc = 0.0;
        for (int j = 0; j < d; ++j)
            if (j != missing) acc += (j % 2 == 0 ? 1.0 : -1.0) * (*f[j]);
        f[missing] = (missing % 2 == 0 ? 1.0 : -1.0) * (rhs - acc);
    }
    return f;
}

double simplex_moment_betaprime(int d, double gamma, int k, double beta) {
    if (d < 1 || k < 1 || !(gamma > 0.0) || beta < 0.0)
        throw InvalidParams("simplex_moment_betaprime: bad parameters");
    if (!(d - k + 1.0 - beta + gamma > 0.0))
        throw InfiniteMoment("simplex_moment_betaprime: d-k+1-beta+gamma <= 0");
    double log_val = -beta * log_factorial(k - 1);
    log_val += log_gamma(0.5 * (d + 1.0 - k + gamma) * k - 0.5 * (k - 1.0) * beta) -
               log_gamma(0.5 * (d - k + 1.0 - beta + gamma) * k);
    log_val += k * (log_gamma(0.5 * (d + 1.0 - k - beta + gamma)) -
                    log_gamma(0.5 * (d + 1.0 - k + gamma)));
    for (int i = 1; i <= k - 1; ++i)
        log_val += log_gamma(0.5 * (i + beta)) - log_gamma(0.5 * i);
    return std::exp(log_val);
}

} // namespace conehull
