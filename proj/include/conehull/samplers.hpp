#pragma once

#include <utility>
#include <vector>

#include "conehull/hull.hpp"
#include "conehull/rng.hpp"
#include "conehull/vec.hpp"

namespace conehull {

// Parameters of the power-law Poisson process with intensity
// (c / omega(d+gamma)) |x|^{-(d+gamma)} on R^d \ {0}.
struct PoissonParams {
    int d = 2;
    double gamma = 1.0;
    double c = 2.0;
};

void validate(const PoissonParams& p);

// Expected number of process points outside radius r:
//   Lambda(r) = c * omega(d) / (gamma * omega(d+gamma)) * r^{-gamma}.
double poisson_tail_mass(const PoissonParams& p, double r);

// Realized points outside a truncation radius plus the certificate that the
// ball of that radius lies inside their hull (so the unseen inner points
// cannot contribute vertices).
struct PoissonSample {
    PoissonParams params;
    std::vector<Point> points; // all with norm > r_trunc
    double r_trunc = 0.0;
    bool certified = false;
};

// n uniform half-sphere points together with their gnomonic images; the cone
// pos{U_i} is represented through the section hull conv{P(U_i)}.
struct ConeSample {
    int d = 1;
    int n = 0;
    std::vector<Point> halfsphere_points; // in R^{d+1}, unit norm, x0 >= 0
    std::vector<Point> gnomonic_points;   // in R^d
};

// Uniform point on the upper half-sphere S^d_+ in R^{d+1}: normalized
// Gaussian with the first coordinate reflected to be nonnegative.
Point sample_halfsphere(int d, Rng& rng);

// Central projection (x_0, ..., x_d) -> (x_1/x_0, ..., x_d/x_0); throws
// PoleAtEquator for x_0 <= 1e-300 (caller resamples).
Point gnomonic(const Point& u);

// The generalized Cauchy law with density (2/omega(d+1)) (1+|x|^2)^{-(d+1)/2},
// sampled exactly as the gnomonic image of a half-sphere point.
Point sample_cauchy_type(int d, Rng& rng);

// Points of the process restricted to the annulus r_in < |x| < r_out
// (r_out may be infinity): Poisson count, inverse-transform radii, uniform
// directions.
std::vector<Point> sample_poisson_annulus(const PoissonParams& params, double r_in,
                                          double r_out, Rng& rng);

// Adaptive truncation: sample outside a starting radius with about
// max(4d, 40) expected points, halve until the hull of the sampled points
// swallows the truncation ball. The returned hull has the law of the convex
// hull of the full process.
std::pair<PoissonSample, Hull> sample_poisson_hull(const PoissonParams& params, Rng& rng);

// Hull of {+x, -x} over a certified sample; law of the symmetric convex hull.
Hull sample_symmetric_hull(const PoissonParams& params, Rng& rng);

ConeSample sample_cone(int d, int n, Rng& rng);

Hull section_hull(const ConeSample& cone);

} // namespace conehull
