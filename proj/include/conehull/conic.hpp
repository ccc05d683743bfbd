#pragma once

#include <cstdint>
#include <vector>

#include "conehull/hull.hpp"
#include "conehull/samplers.hpp"
#include "conehull/stats.hpp"
#include "conehull/vec.hpp"

namespace conehull {

// Polyhedral cone pos{generators} in R^{d+1}, carried together with its
// section hull conv{P(U_i)} in the tangent hyperplane when the generators
// stay off the equator.
struct Cone {
    int d = 1;                     // ambient dimension is d+1
    std::vector<Point> generators; // unit vectors
    bool has_section = false;
    Hull section;

    std::size_t ambient_dim() const { return static_cast<std::size_t>(d) + 1; }
};

Cone cone_from_sample(const ConeSample& cs);
Cone cone_from_generators(int d, std::vector<Point> generators);

struct ConeProjection {
    Point projection;
    std::vector<int> active; // generator indices with positive coefficient
    double residual = 0.0;   // |g - projection|
};

// Metric projection onto pos{generators} by Lawson-Hanson nonnegative least
// squares; the KKT residual of the result is verified to 1e-9.
ConeProjection project_onto_cone(const std::vector<Point>& generators, const Point& g);

// Conic functional estimates with one entry per subscript. v is indexed
// 0..d+1; h and w are indexed by their subscript with h[0] = 1/2 and
// h[d+2] = 0 kept explicitly.
struct ConicProfile {
    std::vector<double> v, v_se;
    std::vector<double> h_direct, h_direct_se;
    std::vector<double> h_from_v, h_from_v_se;
    std::vector<double> w_direct, w_direct_se; // Kubota from the direct h route
    std::vector<double> w_from_v, w_from_v_se;
    std::size_t samples = 0;
};

// v_k estimates: frequency of the Gaussian projection landing on a face of
// dimension k, the dimension being the rank of the active generator set.
ConicProfile conic_intrinsic_volumes(const Cone& cone, std::size_t samples, Rng& rng);

// h_{k+1}(C) = (1/2) P(C meets a Haar (d+1-k)-subspace nontrivially),
// estimated through the section reduction: the subspace is spanned by
// d+1-k fresh half-sphere points and the event becomes an affine-hull /
// section-hull intersection in R^d. k = 0 returns exactly 1/2.
Estimate grassmann_angle(const Cone& cone, int k, std::size_t samples, Rng& rng);

// Solid angle: half the frequency of a fresh half-sphere point landing in the
// cone, tested through the gnomonic section.
Estimate solid_angle(const Cone& cone, std::size_t samples, Rng& rng);

// Estimates n (1/2 - alpha(C_n)) by integrating the section density over the
// complement of the section hull in polar form; the radial integral is a
// smooth one-dimensional piece per direction.
Estimate deficit_solid_angle(const Cone& cone, int n, std::size_t mc_dirs, Rng& rng);

// Full profile: v estimated once, h both directly and through the conic
// Crofton identity, w through Kubota on both routes.
ConicProfile conic_profile(const Cone& cone, std::size_t samples, Rng& rng);

struct BuchtaReport {
    Estimate lhs; // 2 C(n+d+1-k, d+1-k) (1/2 - E h_{k+1}(C_n))
    Estimate rhs; // E f_{d+1-k}(C_{n+d+1-k})
    double z = 0.0;
};

// Dual Monte Carlo check of the f-vector / Grassmann-angle identity.
BuchtaReport buchta_identity_check(int d, int n, int k, std::size_t samples, Rng& rng);

} // namespace conehull
