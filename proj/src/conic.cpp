#include "conehull/conic.hpp"

#include <algorithm>
#include <cmath>

#include "conehull/errors.hpp"
#include "conehull/linalg.hpp"
#include "conehull/lp.hpp"
#include "conehull/quadrature.hpp"
#include "conehull/special.hpp"
#include "conehull/tolerances.hpp"

namespace conehull {

Cone cone_from_sample(const ConeSample& cs) {
    Cone c;
    c.d = cs.d;
    c.generators = cs.halfsphere_points;
    c.section = section_hull(cs);
    c.has_section = true;
    return c;
}

Cone cone_from_generators(int d, std::vector<Point> generators) {
    if (generators.empty()) throw InvalidParams("cone_from_generators: no generators");
    Cone c;
    c.d = d;
    for (auto& g : generators) {
        check_dim(g, c.ambient_dim(), "cone_from_generators");
        const double n = norm(g);
        if (n < tol::geometric) throw InvalidParams("cone_from_generators: zero generator");
        for (double& x : g) x /= n;
    }
    c.generators = std::move(generators);
    return c;
}

ConeProjection project_onto_cone(const std::vector<Point>& generators, const Point& g) {
    if (generators.empty()) throw InvalidParams("project_onto_cone: no generators");
    const std::size_t m = g.size();
    for (const auto& v : generators) check_dim(v, m, "project_onto_cone");
    const std::size_t n = generators.size();
    const double scale = std::max(1.0, norm(g));
    const int max_iter = 10 * static_cast<int>(m);

    std::vector<double> alpha(n, 0.0);
    std::vector<char> passive(n, 0);
    std::vector<std::size_t> pset;
    Point proj(m, 0.0);

    auto gradient = [&](std::size_t j) { return dot(generators[j], sub(g, proj)); };

    // least squares on the passive set through the normal equations
    auto solve_passive = [&](Point& z) {
        const std::size_t p = pset.size();
        Matrix gram(p, Point(p));
        Point rhs(p);
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = 0; j < p; ++j)
                gram[i][j] = dot(generators[pset[i]], generators[pset[j]]);
            rhs[i] = dot(generators[pset[i]], g);
        }
        if (!cholesky_solve(std::move(gram), std::move(rhs), z))
            throw IllConditioned("project_onto_cone: singular normal equations");
    };

    int iter = 0;
    for (;;) {
        // most violated KKT multiplier outside the passive set
        std::size_t enter = n;
        double best = tol::geometric * scale;
        for (std::size_t j = 0; j < n; ++j) {
            if (passive[j]) continue;
            const double w = gradient(j);
            if (w > best) {
                best = w;
                enter = j;
            }
        }
        if (enter == n) break;
        passive[enter] = 1;
        pset.push_back(enter);

        for (;;) {
            if (++iter > max_iter)
                throw IllConditioned("project_onto_cone: iteration budget exhausted");
            Point z;
            solve_passive(z);
            bool feasible = true;
            for (double zi : z)
                if (!(zi > 0.0)) feasible = false;
            if (feasible) {
                for (std::size_t i = 0; i < pset.size(); ++i) alpha[pset[i]] = z[i];
                break;
            }
            // step toward z until the first coefficient hits zero, drop it
            double theta = 1.0;
            for (std::size_t i = 0; i < pset.size(); ++i)
                if (z[i] <= 0.0)
                    theta = std::min(theta, alpha[pset[i]] / (alpha[pset[i]] - z[i]));
            for (std::size_t i = 0; i < pset.size(); ++i)
                alpha[pset[i]] += theta * (z[i] - alpha[pset[i]]);
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < pset.size(); ++i) {
                if (alpha[pset[i]] > tol::active_coefficient) {
                    keep.push_back(pset[i]);
                } else {
                    alpha[pset[i]] = 0.0;
                    passive[pset[i]] = 0;
                }
            }
            pset = std::move(keep);
            if (pset.empty()) break;
        }

        proj.assign(m, 0.0);
        for (std::size_t j : pset) axpy(proj, alpha[j], generators[j]);
    }

    ConeProjection result;
    result.projection = proj;
    result.residual = norm(sub(g, proj));
    for (std::size_t j = 0; j < n; ++j)
        if (alpha[j] > tol::active_coefficient) result.active.push_back(static_cast<int>(j));

    // KKT residual: gradient nonpositive everywhere, zero on the active set
    for (std::size_t j = 0; j < n; ++j) {
        const double w = gradient(j);
        if (w > 1e-9 * scale * 10.0)
            throw IllConditioned("project_onto_cone: KKT residual too large");
        if (alpha[j] > tol::active_coefficient && std::fabs(w) > 1e-9 * scale * 10.0)
            throw IllConditioned("project_onto_cone: active-set gradient not zero");
    }
    return result;
}

namespace {

std::vector<double> binomial_se(const std::vector<double>& p, std::size_t samples) {
    std::vector<double> se(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        se[i] = std::sqrt(std::max(0.0, p[i] * (1.0 - p[i])) / double(samples));
    return se;
}

} // namespace

ConicProfile conic_intrinsic_volumes(const Cone& cone, std::size_t samples, Rng& rng) {
    const std::size_t m = cone.ambient_dim();
    std::vector<double> counts(m + 1, 0.0);
    for (std::size_t s = 0; s < samples; ++s) {
        const Point g = rng.gaussian_vector(m);
        ConeProjection pr = project_onto_cone(cone.generators, g);
        std::size_t face_dim;
        if (pr.active.empty()) {
            face_dim = 0;
        } else if (pr.residual <= tol::geometric * std::max(1.0, norm(g))) {
            face_dim = m; // the point is inside the cone
        } else {
            std::vector<Point> active_gens;
            for (int j : pr.active) active_gens.push_back(cone.generators[std::size_t(j)]);
            face_dim = column_rank(active_gens);
        }
        counts[face_dim] += 1.0;
    }
    ConicProfile p;
    p.samples = samples;
    p.v.resize(m + 1);
    for (std::size_t k = 0; k <= m; ++k) p.v[k] = counts[k] / double(samples);
    p.v_se = binomial_se(p.v, samples);
    return p;
}

Estimate grassmann_angle(const Cone& cone, int k, std::size_t samples, Rng& rng) {
    if (k < 0 || k > cone.d) throw InvalidParams("grassmann_angle: need 0 <= k <= d");
    Estimate e;
    e.target_id = "h_" + std::to_string(k + 1);
    if (k == 0) { // h_1 = 1/2 for every cone
        e.mean = 0.5;
        e.stderr_ = 0.0;
        e.n_replicates = samples;
        return e;
    }
    if (!cone.has_section)
        throw InvalidParams("grassmann_angle: cone carries no section hull");
    const int j = cone.d + 1 - k;
    std::vector<double> hits(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        Point anchor = sample_cauchy_type(cone.d, rng);
        std::vector<Point> span;
        for (int i = 1; i < j; ++i) span.push_back(sample_cauchy_type(cone.d, rng));
        hits[s] = affine_intersects_hull(anchor, span, cone.section.vertices) ? 0.5 : 0.0;
    }
    e = make_estimate(hits, 0, e.target_id);
    return e;
}

Estimate solid_angle(const Cone& cone, std::size_t samples, Rng& rng) {
    if (!cone.has_section)
        throw InvalidParams("solid_angle: cone carries no section hull");
    std::vector<double> hits(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        const Point x = sample_cauchy_type(cone.d, rng);
        hits[s] = contains_point(cone.section, x) ? 0.5 : 0.0;
    }
    return make_estimate(hits, 0, "solid_angle");
}

namespace {

// J_d(t) = int_t^inf s^{d-1} (1+s^2)^{-(d+1)/2} ds = int_{atan t}^{pi/2} sin^{d-1}
double radial_tail(int d, double t) {
    if (d == 1) return 0.5 * PI - std::atan(t);
    if (d == 2) return 1.0 / std::sqrt(1.0 + t * t);
    static const GaussLegendre rule(30);
    const double lo = std::atan(t);
    return rule.integrate([&](double phi) { return std::pow(std::sin(phi), d - 1); }, lo,
                          0.5 * PI);
}

} // namespace

Estimate deficit_solid_angle(const Cone& cone, int n, std::size_t mc_dirs, Rng& rng) {
    if (!cone.has_section)
        throw InvalidParams("deficit_solid_angle: cone carries no section hull");
    if (!cone.section.contains_origin)
        throw OriginOutside("deficit_solid_angle: section hull misses the origin");
    const double factor = double(n) * omega(cone.d) / omega(cone.d + 1);
    std::vector<double> values(mc_dirs);
    for (std::size_t i = 0; i < mc_dirs; ++i) {
        const Point theta = rng.unit_vector(std::size_t(cone.d));
        values[i] = factor * radial_tail(cone.d, radial_function(cone.section, theta));
    }
    return make_estimate(values, 0, "deficit");
}

ConicProfile conic_profile(const Cone& cone, std::size_t samples, Rng& rng) {
    const std::size_t m = cone.ambient_dim();
    ConicProfile p = conic_intrinsic_volumes(cone, samples, rng);

    p.h_direct.assign(m + 2, 0.0);
    p.h_direct_se.assign(m + 2, 0.0);
    p.h_from_v.assign(m + 2, 0.0);
    p.h_from_v_se.assign(m + 2, 0.0);
    p.h_direct[0] = p.h_from_v[0] = 0.5;

    for (int k = 0; k <= cone.d; ++k) {
        Estimate e = grassmann_angle(cone, k, samples, rng);
        p.h_direct[std::size_t(k) + 1] = e.mean;
        p.h_direct_se[std::size_t(k) + 1] = e.stderr_;
    }
    // conic Crofton: h_{k+1} = sum of v_{k+i} over odd i; the sum is itself a
    // category frequency, so its error is binomial
    for (std::size_t k = 0; k + 1 <= m; ++k) {
        double acc = 0.0;
        for (std::size_t i = 1; k + i <= m; i += 2) acc += p.v[k + i];
        p.h_from_v[k + 1] = acc;
        p.h_from_v_se[k + 1] =
            std::sqrt(std::max(0.0, acc * (1.0 - acc)) / double(samples));
    }

    p.w_direct.assign(m + 1, 0.0);
    p.w_direct_se.assign(m + 1, 0.0);
    p.w_from_v.assign(m + 1, 0.0);
    p.w_from_v_se.assign(m + 1, 0.0);
    for (std::size_t k = 1; k <= m; ++k) {
        p.w_direct[k] = p.h_direct[k] + p.h_direct[k + 1];
        p.w_direct_se[k] = std::sqrt(p.h_direct_se[k] * p.h_direct_se[k] +
                                     p.h_direct_se[k + 1] * p.h_direct_se[k + 1]);
        double acc = 0.0;
        for (std::size_t i = k; i <= m; ++i) acc += p.v[i];
        p.w_from_v[k] = acc;
        p.w_from_v_se[k] = std::sqrt(std::max(0.0, acc * (1.0 - acc)) / double(samples));
    }
    return p;
}

BuchtaReport buchta_identity_check(int d, int n, int k, std::size_t samples, Rng& rng) {
    if (k < 1 || k > d || n < d + 1)
        throw InvalidParams("buchta_identity_check: need 1 <= k <= d, n >= d+1");
    const int j = d + 1 - k;
    const double binom = choose(n + j, j);

    std::vector<double> lhs_vals(samples), rhs_vals(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        Cone cone = cone_from_sample(sample_cone(d, n, rng));
        Point anchor = sample_cauchy_type(d, rng);
        std::vector<Point> span;
        for (int i = 1; i < j; ++i) span.push_back(sample_cauchy_type(d, rng));
        const bool hit = affine_intersects_hull(anchor, span, cone.section.vertices);
        lhs_vals[s] = binom * (hit ? 0.0 : 1.0);
    }
    for (std::size_t s = 0; s < samples; ++s) {
        Hull section = section_hull(sample_cone(d, n + j, rng));
        rhs_vals[s] = double(f_vector(section)[std::size_t(d - k)]);
    }

    BuchtaReport report;
    report.lhs = make_estimate(lhs_vals, 0, "buchta_lhs");
    report.rhs = make_estimate(rhs_vals, 0, "buchta_rhs");
    const double se =
        std::sqrt(report.lhs.stderr_ * report.lhs.stderr_ +
                  report.rhs.stderr_ * report.rhs.stderr_);
    report.z = se > 0.0 ? (report.lhs.mean - report.rhs.mean) / se : 0.0;
    return report;
}

} // namespace conehull
