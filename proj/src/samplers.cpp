#include "conehull/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "conehull/errors.hpp"
#include "conehull/special.hpp"

namespace conehull {

void validate(const PoissonParams& p) {
    if (p.d < 1 || !(p.gamma > 0.0) || !(p.c > 0.0))
        throw InvalidParams("PoissonParams: need d >= 1, gamma > 0, c > 0");
}

double poisson_tail_mass(const PoissonParams& p, double r) {
    validate(p);
    if (!(r > 0.0)) throw InvalidRadii("poisson_tail_mass: radius must be positive");
    return p.c * omega(p.d) / (p.gamma * omega(p.d + p.gamma)) * std::pow(r, -p.gamma);
}

Point sample_halfsphere(int d, Rng& rng) {
    if (d < 1) throw InvalidParams("sample_halfsphere: d >= 1");
    Point u = rng.unit_vector(static_cast<std::size_t>(d) + 1);
    u[0] = std::fabs(u[0]);
    return u;
}

Point gnomonic(const Point& u) {
    if (u.empty()) throw InvalidParams("gnomonic: empty point");
    if (u[0] <= 1e-300) throw PoleAtEquator("gnomonic: point on the equator");
    Point x(u.size() - 1);
    for (std::size_t i = 1; i < u.size(); ++i) x[i - 1] = u[i] / u[0];
    return x;
}

Point sample_cauchy_type(int d, Rng& rng) {
    for (;;) {
        try {
            return gnomonic(sample_halfsphere(d, rng));
        } catch (const PoleAtEquator&) {
            // probability zero; draw again
        }
    }
}

std::vector<Point> sample_poisson_annulus(const PoissonParams& params, double r_in,
                                          double r_out, Rng& rng) {
    validate(params);
    if (!(r_in > 0.0) || !(r_out > r_in))
        throw InvalidRadii("sample_poisson_annulus: need 0 < r_in < r_out");
    const double mass_in = poisson_tail_mass(params, r_in);
    const double mass_out = std::isinf(r_out) ? 0.0 : poisson_tail_mass(params, r_out);
    const long count = rng.poisson(mass_in - mass_out);

    // radial cdf on the annulus: F(t) = (r_in^-g - t^-g) / (r_in^-g - r_out^-g)
    const double g = params.gamma;
    const double a = std::pow(r_in, -g);
    const double b = std::isinf(r_out) ? 0.0 : std::pow(r_out, -g);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        const double u = rng.uniform();
        const double radius = std::pow(a - u * (a - b), -1.0 / g);
        Point x = rng.unit_vector(static_cast<std::size_t>(params.d));
        for (double& v : x) v *= radius;
        pts.push_back(std::move(x));
    }
    return pts;
}

std::pair<PoissonSample, Hull> sample_poisson_hull(const PoissonParams& params, Rng& rng) {
    validate(params);
    const double target = std::max(4.0 * params.d, 40.0);
    const double coeff = params.c * omega(params.d) / (params.gamma * omega(params.d + params.gamma));
    // Lambda(r0) = target
    const double r0 = std::pow(coeff / target, 1.0 / params.gamma);

    PoissonSample sample;
    sample.params = params;
    sample.r_trunc = r0;
    sample.points =
        sample_poisson_annulus(params, r0, std::numeric_limits<double>::infinity(), rng);

    double outer = r0;
    for (int iter = 0; iter < 40; ++iter) {
        if (sample.points.size() >= static_cast<std::size_t>(params.d) + 1) {
            Hull h = convex_hull(sample.points, static_cast<std::size_t>(params.d));
            double min_offset = std::numeric_limits<double>::infinity();
            for (const auto& f : h.facets) min_offset = std::min(min_offset, f.offset);
            if (h.contains_origin && min_offset >= sample.r_trunc) {
                sample.certified = true;
                return {std::move(sample), std::move(h)};
            }
        }
        outer = sample.r_trunc;
        sample.r_trunc *= 0.5;
        auto extra = sample_poisson_annulus(params, sample.r_trunc, outer, rng);
        sample.points.insert(sample.points.end(), extra.begin(), extra.end());
    }
    throw TruncationFailure("sample_poisson_hull: no certificate after 40 halvings");
}

Hull sample_symmetric_hull(const PoissonParams& params, Rng& rng) {
    auto [sample, hull] = sample_poisson_hull(params, rng);
    std::vector<Point> doubled = sample.points;
    doubled.reserve(2 * sample.points.size());
    for (const auto& p : sample.points) doubled.push_back(negated(p));
    // the asymmetric certificate covers the symmetric hull: it only grows
    return convex_hull(doubled, static_cast<std::size_t>(params.d));
}

ConeSample sample_cone(int d, int n, Rng& rng) {
    if (d < 1 || n < d + 1) throw InvalidParams("sample_cone: need n >= d+1");
    ConeSample cs;
    cs.d = d;
    cs.n = n;
    cs.halfsphere_points.reserve(static_cast<std::size_t>(n));
    cs.gnomonic_points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Point u = sample_halfsphere(d, rng);
        while (u[0] <= 1e-300) u = sample_halfsphere(d, rng);
        cs.gnomonic_points.push_back(gnomonic(u));
        cs.halfsphere_points.push_back(std::move(u));
    }
    return cs;
}

Hull section_hull(const ConeSample& cone) {
    return convex_hull(cone.gnomonic_points, static_cast<std::size_t>(cone.d));
}

} // namespace conehull
