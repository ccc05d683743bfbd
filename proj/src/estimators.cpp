#include "conehull/estimators.hpp"

#include <cmath>
#include <stdexcept>

#include "conehull/errors.hpp"
#include "conehull/hull.hpp"
#include "conehull/lp.hpp"
#include "conehull/parallel.hpp"
#include "conehull/special.hpp"
#include "conehull/subspace.hpp"
#include "conehull/tolerances.hpp"

namespace conehull {

namespace {

void require_identities(const Hull& h) {
    if (!verify_hull_identities(h).all())
        throw std::runtime_error("estimator: deterministic hull identity violated");
}

std::vector<Estimate> reduce_components(const std::vector<std::vector<double>>& rows,
                                        std::uint64_t seed, const std::string& prefix) {
    if (rows.empty()) throw InvalidParams("estimator: zero replicates");
    const std::size_t width = rows[0].size();
    std::vector<Estimate> out;
    out.reserve(width);
    for (std::size_t k = 0; k < width; ++k) {
        std::vector<double> column(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) column[i] = rows[i][k];
        out.push_back(make_estimate(column, seed, prefix + std::to_string(k)));
    }
    return out;
}

} // namespace

std::vector<Estimate> estimate_f_vector_poisson(const PoissonParams& params,
                                                std::size_t replicates, std::uint64_t seed,
                                                int workers) {
    validate(params);
    auto rows = map_replicates(replicates, workers, [&](std::size_t i) {
        Rng rng(derive_seed(seed, i));
        auto [sample, hull] = sample_poisson_hull(params, rng);
        require_identities(hull);
        const FVector f = f_vector(hull);
        std::vector<double> row(f.size());
        for (std::size_t k = 0; k < f.size(); ++k) row[k] = double(f[k]);
        return row;
    });
    return reduce_components(rows, seed, "poisson_f");
}

FunctionalEstimate estimate_T(const PoissonParams& params, double a, double b,
                              std::size_t replicates, std::uint64_t seed, int workers) {
    validate(params);
    auto values = map_replicates(replicates, workers, [&](std::size_t i) {
        Rng rng(derive_seed(seed, i));
        auto [sample, hull] = sample_poisson_hull(params, rng);
        require_identities(hull);
        return t_functional(hull, a, b);
    });
    FunctionalEstimate fe;
    fe.est = make_estimate(values, seed, "poisson_T");
    fe.heavy_tail = (params.gamma - b) * params.d + b - a <= 2.0 * params.gamma;
    return fe;
}

FunctionalEstimate estimate_T_symmetric(const PoissonParams& params, double a, double b,
                                        std::size_t replicates, std::uint64_t seed,
                                        int workers) {
    validate(params);
    auto values = map_replicates(replicates, workers, [&](std::size_t i) {
        Rng rng(derive_seed(seed, i));
        Hull hull = sample_symmetric_hull(params, rng);
        require_identities(hull);
        return t_functional(hull, a, b);
    });
    FunctionalEstimate fe;
    fe.est = make_estimate(values, seed, "symmetric_T");
    fe.heavy_tail = (params.gamma - b) * params.d + b - a <= 2.0 * params.gamma;
    return fe;
}

FunctionalEstimate estimate_volume(const PoissonParams& params, std::size_t replicates,
                                   std::uint64_t seed, int workers) {
    validate(params);
    auto values = map_replicates(replicates, workers, [&](std::size_t i) {
        Rng rng(derive_seed(seed, i));
        auto [sample, hull] = sample_poisson_hull(params, rng);
        require_identities(hull);
        return hull_volume(hull);
    });
    FunctionalEstimate fe;
    fe.est = make_estimate(values, seed, "poisson_volume");
    fe.heavy_tail = params.gamma <= 1.25;
    return fe;
}

FunctionalEstimate estimate_intrinsic_volume(const PoissonParams& params, int k,
                                             std::size_t dirs, std::size_t replicates,
                                             std::uint64_t seed, int workers) {
    validate(params);
    if (k < 1 || k > params.d)
        throw InvalidParams("estimate_intrinsic_volume: need 1 <= k <= d");
    if (k == params.d) {
        FunctionalEstimate fe = estimate_volume(params, replicates, seed, workers);
        fe.est.target_id = "intrinsic_volume";
        return fe;
    }
    const double prefactor =
        choose(params.d, k) * kappa(params.d) / (kappa(k) * kappa(params.d - k));
    auto values = map_replicates(replicates, workers, [&](std::size_t i) {
        Rng rng(derive_seed(seed, i));
        auto [sample, hull] = sample_poisson_hull(params, rng);
        require_identities(hull);
        double acc = 0.0;
        for (std::size_t dir = 0; dir < dirs; ++dir) {
            Subspace sub = haar_subspace(std::size_t(params.d), std::size_t(k), rng);
            Hull projected = convex_hull(project_points(hull.vertices, sub), std::size_t(k));
            acc += hull_volume(projected);
        }
        return prefactor * acc / double(dirs);
    });
    FunctionalEstimate fe;
    fe.est = make_estimate(values, seed, "intrinsic_volume");
    fe.heavy_tail = params.gamma <= 1.25;
    return fe;
}

Estimate estimate_B(int k, int d, std::size_t outer_replicates, std::size_t inner_samples,
                    std::uint64_t seed, int workers) {
    if (k < 1 || k > d) throw InvalidParams("estimate_B: need 1 <= k <= d");
    const PoissonParams limit_process{d, 1.0, 2.0};
    // The integrand 1{aff misses hull} prod |x_i|^{-(d+1)} lives on the
    // complement of the hull, where the radial part r^{-(d+1)} r^{d-1} dr has
    // the exact inverse transform r = rho(theta)/(1-u). Drawing x_i that way
    // leaves the closed-form weight omega(d)/rho(theta_i) per point, so only
    // the directions carry Monte Carlo noise.
    const double surface = omega(d);
    const double prefactor =
        0.5 * std::pow(2.0 / omega(d + 1.0), k) * std::pow(surface, k);
    auto values = map_replicates(outer_replicates, workers, [&](std::size_t i) {
        Rng rng(derive_seed(seed, i));
        auto [sample, hull] = sample_poisson_hull(limit_process, rng);
        double acc = 0.0;
        std::vector<Point> span;
        for (std::size_t s = 0; s < inner_samples; ++s) {
            double weight = prefactor;
            auto draw_outside = [&]() {
                Point theta = rng.unit_vector(std::size_t(d));
                const double rho = radial_function(hull, theta);
                if (rho < 1e-6)
                    throw WeightOverflow("estimate_B: radial function collapsed at the origin");
                weight /= rho;
                const double r = rho / (1.0 - rng.uniform());
                for (double& v : theta) v *= r;
                return theta;
            };
            Point anchor = draw_outside();
            span.clear();
            for (int j = 1; j < k; ++j) span.push_back(draw_outside());
            if (!affine_intersects_hull(anchor, span, hull.vertices)) acc += weight;
        }
        return acc / double(inner_samples);
    });
    return make_estimate(values, seed, "B_" + std::to_string(k) + "_" + std::to_string(d));
}

std::vector<ConeLimitRow> estimate_cone_section_limit(int d, const std::vector<int>& n_grid,
                                                      std::size_t replicates,
                                                      std::uint64_t seed, int workers) {
    std::vector<ConeLimitRow> table;
    for (int n : n_grid) {
        auto rows = map_replicates(replicates, workers, [&](std::size_t i) {
            Rng rng(derive_seed(seed ^ std::uint64_t(n), i));
            Hull section = section_hull(sample_cone(d, n, rng));
            require_identities(section);
            const FVector f = f_vector(section);
            std::vector<double> row(f.size());
            for (std::size_t j = 0; j < f.size(); ++j) row[j] = double(f[j]);
            return row;
        });
        ConeLimitRow row;
        row.label = "n=" + std::to_string(n);
        row.f = reduce_components(rows, seed, "cone_f");
        table.push_back(std::move(row));
    }
    ConeLimitRow ref;
    ref.label = "poisson";
    ref.f = estimate_f_vector_poisson(PoissonParams{d, 1.0, 2.0}, replicates, seed, workers);
    table.push_back(std::move(ref));
    return table;
}

} // namespace conehull
