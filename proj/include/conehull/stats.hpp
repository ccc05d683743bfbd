#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace conehull {

// Monte Carlo estimator state shared across the library.
struct Estimate {
    double mean = 0.0;
    double stderr_ = 0.0; // sample std / sqrt(n)
    std::size_t n_replicates = 0;
    std::uint64_t seed = 0;
    std::string target_id;

    double z_against(double reference) const {
        if (stderr_ <= 0.0) return mean == reference ? 0.0 : 1e300;
        return (mean - reference) / stderr_;
    }
};

Estimate make_estimate(const std::vector<double>& values, std::uint64_t seed,
                       std::string target_id);

// Upper regularized incomplete gamma Q(a, x).
double gamma_q(double a, double x);

// Two-sided Kolmogorov-Smirnov test of `samples` against the cdf values
// F(x_i); returns the p-value. `cdf_at_sorted` holds F evaluated at the
// sorted sample.
double ks_p_value(std::vector<double> cdf_at_sorted_samples);

// Chi-square goodness of fit: observed counts vs expected counts (same
// length); bins with expected < 5 are pooled into their neighbor. Returns the
// p-value. `extra_constraints` subtracts additional degrees of freedom beyond
// the one lost to the total.
double chi_square_p_value(const std::vector<double>& observed,
                          const std::vector<double>& expected,
                          int extra_constraints = 0);

} // namespace conehull
