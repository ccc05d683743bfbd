#include "conehull/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace conehull {

Estimate make_estimate(const std::vector<double>& values, std::uint64_t seed,
                       std::string target_id) {
    Estimate e;
    e.seed = seed;
    e.target_id = std::move(target_id);
    e.n_replicates = values.size();
    if (values.empty()) return e;
    double sum = 0.0;
    for (double v : values) sum += v;
    e.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) {
            const double d = v - e.mean;
            ss += d * d;
        }
        const double var = ss / static_cast<double>(values.size() - 1);
        e.stderr_ = std::sqrt(var / static_cast<double>(values.size()));
    }
    return e;
}

namespace {

// series expansion of P(a,x), valid for x < a+1
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a,x), valid for x >= a+1
double gamma_q_cf(double a, double x) {
    const double fpmin = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

} // namespace

double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

namespace {

// Kolmogorov survival function Q_ks(lambda) = 2 sum (-1)^{j-1} exp(-2 j^2 lambda^2)
double kolmogorov_q(double lambda) {
    if (lambda < 1e-8) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += sign * term;
        if (term < 1e-16) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

} // namespace

double ks_p_value(std::vector<double> u) {
    const std::size_t n = u.size();
    if (n == 0) throw std::invalid_argument("ks_p_value: empty sample");
    std::sort(u.begin(), u.end());
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = static_cast<double>(i) / static_cast<double>(n);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
        d = std::max(d, std::max(u[i] - lo, hi - u[i]));
    }
    const double sn = std::sqrt(static_cast<double>(n));
    return kolmogorov_q((sn + 0.12 + 0.11 / sn) * d);
}

double chi_square_p_value(const std::vector<double>& observed,
                          const std::vector<double>& expected, int extra_constraints) {
    if (observed.size() != expected.size() || observed.empty())
        throw std::invalid_argument("chi_square_p_value: size mismatch");
    // pool bins until every expected count is at least 5
    std::vector<double> obs, exp;
    double o_acc = 0.0, e_acc = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        o_acc += observed[i];
        e_acc += expected[i];
        if (e_acc >= 5.0) {
            obs.push_back(o_acc);
            exp.push_back(e_acc);
            o_acc = e_acc = 0.0;
        }
    }
    if (e_acc > 0.0 || o_acc > 0.0) {
        if (obs.empty()) {
            obs.push_back(o_acc);
            exp.push_back(e_acc);
        } else {
            obs.back() += o_acc;
            exp.back() += e_acc;
        }
    }
    if (obs.size() < 2) throw std::invalid_argument("chi_square_p_value: too few bins");
    double stat = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double diff = obs[i] - exp[i];
        stat += diff * diff / exp[i];
    }
    const int dof = static_cast<int>(obs.size()) - 1 - extra_constraints;
    if (dof < 1) throw std::invalid_argument("chi_square_p_value: non-positive dof");
    return gamma_q(0.5 * dof, 0.5 * stat);
}

} // namespace conehull
