#include "conehull/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "conehull/closed_forms.hpp"
#include "conehull/conic.hpp"
#include "conehull/errors.hpp"
#include "conehull/estimators.hpp"
#include "conehull/lp.hpp"
#include "conehull/parallel.hpp"
#include "conehull/serialize.hpp"
#include "conehull/special.hpp"
#include "conehull/subspace.hpp"

namespace conehull {

using nlohmann::json;

ExperimentKind kind_from_string(const std::string& s) {
    if (s == "poisson-f") return ExperimentKind::PoissonF;
    if (s == "poisson-T") return ExperimentKind::PoissonT;
    if (s == "poisson-volume") return ExperimentKind::PoissonVolume;
    if (s == "intrinsic") return ExperimentKind::Intrinsic;
    if (s == "B-constant") return ExperimentKind::BConstant;
    if (s == "cone-limit") return ExperimentKind::ConeLimit;
    if (s == "conic-profile") return ExperimentKind::ConicProfile;
    if (s == "buchta") return ExperimentKind::Buchta;
    if (s == "symmetric-T") return ExperimentKind::SymmetricT;
    if (s == "sampler-tests") return ExperimentKind::SamplerTests;
    throw ConfigError("unknown experiment kind: " + s);
}

std::string to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::PoissonF: return "poisson-f";
        case ExperimentKind::PoissonT: return "poisson-T";
        case ExperimentKind::PoissonVolume: return "poisson-volume";
        case ExperimentKind::Intrinsic: return "intrinsic";
        case ExperimentKind::BConstant: return "B-constant";
        case ExperimentKind::ConeLimit: return "cone-limit";
        case ExperimentKind::ConicProfile: return "conic-profile";
        case ExperimentKind::Buchta: return "buchta";
        case ExperimentKind::SymmetricT: return "symmetric-T";
        case ExperimentKind::SamplerTests: return "sampler-tests";
    }
    throw ConfigError("unknown experiment kind enum");
}

void ExperimentConfig::validate_for_kind() const {
    if (workers < 1) throw ConfigError("workers must be >= 1");
    if (format != "csv" && format != "json") throw ConfigError("format must be csv or json");
    if (replicates < 2) throw ConfigError("need at least 2 replicates");
    switch (kind) {
        case ExperimentKind::PoissonF:
        case ExperimentKind::PoissonT:
        case ExperimentKind::PoissonVolume:
        case ExperimentKind::SymmetricT:
            if (d < 1 || !(gamma > 0.0) || !(c > 0.0))
                throw ConfigError("poisson experiments need d >= 1, gamma > 0, c > 0");
            if (a < 0.0 || b < 0.0) throw ConfigError("a and b must be >= 0");
            break;
        case ExperimentKind::Intrinsic:
            if (k < 1 || k > d) throw ConfigError("intrinsic needs 1 <= k <= d");
            if (dirs < 1) throw ConfigError("intrinsic needs dirs >= 1");
            break;
        case ExperimentKind::BConstant:
            if (k < 1 || k > d) throw ConfigError("B-constant needs 1 <= k <= d");
            if (samples < 1) throw ConfigError("B-constant needs inner samples >= 1");
            break;
        case ExperimentKind::ConeLimit:
            if (d < 1) throw ConfigError("cone-limit needs d >= 1");
            for (int n_i : n_grid)
                if (n_i < d + 1) throw ConfigError("cone-limit grid entries need n >= d+1");
            break;
        case ExperimentKind::ConicProfile:
            if (d < 1 || n < d + 1) throw ConfigError("conic-profile needs d >= 1, n >= d+1");
            if (samples < 2) throw ConfigError("conic-profile needs samples >= 2");
            break;
        case ExperimentKind::Buchta:
            if (k < 1 || k > d || n < d + 1)
                throw ConfigError("buchta needs 1 <= k <= d and n >= d+1");
            if (samples < 2) throw ConfigError("buchta needs samples >= 2");
            break;
        case ExperimentKind::SamplerTests:
            break;
    }
}

bool Report::all_pass() const {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

namespace {

std::string num(double v) {
    if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class RowTimer {
  public:
    explicit RowTimer(bool enabled) : enabled_(enabled), start_(clock::now()) {}
    long long elapsed_ms() const {
        if (!enabled_) return 0;
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start_)
            .count();
    }

  private:
    using clock = std::chrono::steady_clock;
    bool enabled_;
    clock::time_point start_;
};

ReportRow z_row(std::string id, std::string params, const Estimate& e, double oracle,
                double z_max, std::string flag = "") {
    ReportRow r;
    r.target_id = std::move(id);
    r.params = std::move(params);
    r.mean = e.mean;
    r.se = e.stderr_;
    r.oracle = oracle;
    r.oracle_text = num(oracle);
    const double z = e.z_against(oracle);
    r.z = z;
    r.check = z_max == 3.0 ? "|z|<=3" : "|z|<=4";
    r.pass = std::fabs(z) <= z_max;
    r.flag = std::move(flag);
    r.replicates = e.n_replicates;
    r.seed = e.seed;
    return r;
}

ReportRow report_only_row(std::string id, std::string params, const Estimate& e,
                          std::string oracle_text, std::string flag = "") {
    ReportRow r;
    r.target_id = std::move(id);
    r.params = std::move(params);
    r.mean = e.mean;
    r.se = e.stderr_;
    r.oracle_text = std::move(oracle_text);
    r.check = "report";
    r.pass = true;
    r.flag = std::move(flag);
    r.replicates = e.n_replicates;
    r.seed = e.seed;
    return r;
}

ReportRow exact_row(std::string id, std::string params, double value, double oracle,
                    std::uint64_t seed, std::size_t replicates = 0) {
    ReportRow r;
    r.target_id = std::move(id);
    r.params = std::move(params);
    r.mean = value;
    r.se = 0.0;
    r.oracle = oracle;
    r.oracle_text = num(oracle);
    r.check = "exact";
    r.pass = std::fabs(value - oracle) <= 1e-12 * std::max(1.0, std::fabs(oracle));
    r.replicates = replicates;
    r.seed = seed;
    return r;
}

ReportRow pvalue_row(std::string id, std::string params, double p, std::uint64_t seed,
                     std::size_t replicates) {
    ReportRow r;
    r.target_id = std::move(id);
    r.params = std::move(params);
    r.mean = p;
    r.se = 0.0;
    r.oracle = 0.01;
    r.oracle_text = "0.01";
    r.check = "p>0.01";
    r.pass = p > 0.01;
    r.replicates = replicates;
    r.seed = seed;
    return r;
}

ReportRow error_row(std::string id, std::string params, const std::string& what) {
    ReportRow r;
    r.target_id = std::move(id);
    r.params = std::move(params);
    r.check = "report";
    r.pass = false;
    r.flag = "error:" + what;
    return r;
}

std::string poisson_params_str(const ExperimentConfig& cfg) {
    return "d=" + std::to_string(cfg.d) + " gamma=" + num(cfg.gamma) + " c=" + num(cfg.c);
}

// closed-form expectations for the f-vector entries that are pinned: f_{d-1}
// from the facet formula, f_{d-2} by Dehn-Sommerville, and an Euler
// completion when only one entry is left
std::vector<std::optional<double>> poisson_f_oracles(int d, double gamma) {
    std::vector<std::optional<double>> f(static_cast<std::size_t>(d));
    f[std::size_t(d) - 1] = expected_facets_poisson(d, gamma);
    if (d >= 2) f[std::size_t(d) - 2] = 0.5 * d * *f[std::size_t(d) - 1];
    int missing = -1, count = 0;
    for (int j = 0; j < d; ++j)
        if (!f[std::size_t(j)]) {
            missing = j;
            ++count;
        }
    if (count == 1) {
        const double rhs = 1.0 + ((d - 1) % 2 == 0 ? 1.0 : -1.0);
        double acc = 0.0;
        for (int j = 0; j < d; ++j)
            if (j != missing) acc += (j % 2 == 0 ? 1.0 : -1.0) * *f[std::size_t(j)];
        f[std::size_t(missing)] = (missing % 2 == 0 ? 1.0 : -1.0) * (rhs - acc);
    }
    return f;
}

// hull replicates for the hull-valued experiments, optionally via the
// versioned JSON cache; the sampled stream is identical either way because
// replicate i always uses Rng(derive_seed(seed, i)) and nothing else
std::vector<Hull> replicate_hulls(const ExperimentConfig& cfg) {
    const PoissonParams params{cfg.d, cfg.gamma, cfg.c};
    validate(params);
    if (!cfg.cache.empty() && std::filesystem::exists(cfg.cache)) {
        const json j = read_json_file(cfg.cache);
        if (j.value("schema", "") == cache_schema && j.value("d", -1) == cfg.d &&
            j.value("gamma", 0.0) == cfg.gamma && j.value("c", 0.0) == cfg.c &&
            j.value("seed", std::uint64_t(0)) == cfg.seed &&
            j.value("replicates", std::size_t(0)) >= cfg.replicates) {
            std::vector<Hull> hulls;
            hulls.reserve(cfg.replicates);
            for (std::size_t i = 0; i < cfg.replicates; ++i)
                hulls.push_back(hull_from_json(j.at("hulls").at(i)));
            return hulls;
        }
    }
    auto hulls = map_replicates(cfg.replicates, cfg.workers, [&](std::size_t i) {
        Rng rng(derive_seed(cfg.seed, i));
        auto [sample, hull] = sample_poisson_hull(params, rng);
        if (!verify_hull_identities(hull).all())
            throw std::runtime_error("replicate hull violates a deterministic identity");
        return hull;
    });
    if (!cfg.cache.empty()) {
        json j{{"schema", cache_schema},       {"d", cfg.d},
               {"gamma", cfg.gamma},           {"c", cfg.c},
               {"seed", cfg.seed},             {"replicates", cfg.replicates},
               {"hulls", json::array()}};
        for (const auto& h : hulls) j["hulls"].push_back(to_json(h));
        write_json_file(cfg.cache, j);
    }
    return hulls;
}

std::vector<ReportRow> run_poisson_f(const ExperimentConfig& cfg) {
    auto hulls = replicate_hulls(cfg);
    const auto oracles = poisson_f_oracles(cfg.d, cfg.gamma);
    std::vector<ReportRow> rows;
    for (int kf = 0; kf < cfg.d; ++kf) {
        std::vector<double> vals(hulls.size());
        for (std::size_t i = 0; i < hulls.size(); ++i)
            vals[i] = double(f_vector(hulls[i])[std::size_t(kf)]);
        Estimate e = make_estimate(vals, cfg.seed, "poisson_f" + std::to_string(kf));
        const std::string id = "poisson_f" + std::to_string(kf);
        if (cfg.oracle_override)
            rows.push_back(z_row(id, poisson_params_str(cfg), e, *cfg.oracle_override, 4.0,
                                 "oracle_override"));
        else if (oracles[std::size_t(kf)])
            rows.push_back(z_row(id, poisson_params_str(cfg), e, *oracles[std::size_t(kf)], 4.0));
        else
            rows.push_back(report_only_row(id, poisson_params_str(cfg), e, "unknown"));
    }
    return rows;
}

std::vector<ReportRow> run_poisson_T(const ExperimentConfig& cfg) {
    auto hulls = replicate_hulls(cfg);
    std::vector<double> vals(hulls.size());
    for (std::size_t i = 0; i < hulls.size(); ++i)
        vals[i] = t_functional(hulls[i], cfg.a, cfg.b);
    Estimate e = make_estimate(vals, cfg.seed, "poisson_T");
    const std::string params =
        poisson_params_str(cfg) + " a=" + num(cfg.a) + " b=" + num(cfg.b);
    const bool heavy = (cfg.gamma - cfg.b) * cfg.d + cfg.b - cfg.a <= 2.0 * cfg.gamma;
    const std::string flag = heavy ? "heavy_tail" : "";
    const Oracle oracle = expected_T(cfg.d, cfg.gamma, cfg.c, cfg.a, cfg.b);
    if (cfg.oracle_override)
        return {z_row("poisson_T", params, e, *cfg.oracle_override, 4.0, "oracle_override")};
    if (oracle.is_infinite())
        return {report_only_row("poisson_T", params, e, "+inf",
                                flag.empty() ? "target_infinite" : flag + ",target_infinite")};
    return {z_row("poisson_T", params, e, oracle.value, 4.0, flag)};
}

std::vector<ReportRow> run_poisson_volume(const ExperimentConfig& cfg) {
    auto hulls = replicate_hulls(cfg);
    std::vector<double> vals(hulls.size());
    for (std::size_t i = 0; i < hulls.size(); ++i) vals[i] = hull_volume(hulls[i]);
    Estimate e = make_estimate(vals, cfg.seed, "poisson_volume");
    const std::string flag = cfg.gamma <= 1.25 ? "heavy_tail" : "";
    const Oracle oracle = expected_volume_poisson(cfg.d, cfg.gamma, cfg.c);
    if (oracle.is_infinite())
        return {report_only_row("poisson_volume", poisson_params_str(cfg), e, "+inf",
                                flag.empty() ? "target_infinite" : flag + ",target_infinite")};
    return {z_row("poisson_volume", poisson_params_str(cfg), e, oracle.value, 4.0, flag)};
}

std::vector<ReportRow> run_intrinsic(const ExperimentConfig& cfg) {
    const PoissonParams params{cfg.d, cfg.gamma, cfg.c};
    FunctionalEstimate fe =
        estimate_intrinsic_volume(params, cfg.k, cfg.dirs, cfg.replicates, cfg.seed, cfg.workers);
    const std::string p = poisson_params_str(cfg) + " k=" + std::to_string(cfg.k);
    const Oracle oracle = expected_intrinsic_volume(cfg.d, cfg.gamma, cfg.c, cfg.k);
    const std::string flag = fe.heavy_tail ? "heavy_tail" : "";
    if (oracle.is_infinite())
        return {report_only_row("intrinsic_V" + std::to_string(cfg.k), p, fe.est, "+inf",
                                flag.empty() ? "target_infinite" : flag + ",target_infinite")};
    return {z_row("intrinsic_V" + std::to_string(cfg.k), p, fe.est, oracle.value, 4.0, flag)};
}

std::vector<ReportRow> run_B_constant(const ExperimentConfig& cfg) {
    Estimate e = estimate_B(cfg.k, cfg.d, cfg.replicates, cfg.samples, cfg.seed, cfg.workers);
    const std::string id = "B_" + std::to_string(cfg.k) + "_" + std::to_string(cfg.d);
    const std::string p = "k=" + std::to_string(cfg.k) + " d=" + std::to_string(cfg.d) +
                          " inner=" + std::to_string(cfg.samples);
    if (cfg.oracle_override) return {z_row(id, p, e, *cfg.oracle_override, 4.0, "oracle_override")};
    auto oracle = constant_B(cfg.k, cfg.d);
    if (!oracle) return {report_only_row(id, p, e, "unknown")};
    return {z_row(id, p, e, oracle->value, 4.0)};
}

std::vector<ReportRow> run_cone_limit(const ExperimentConfig& cfg) {
    std::vector<int> grid = cfg.n_grid;
    if (grid.empty()) grid = {5, 10, 20, 100};
    auto table = estimate_cone_section_limit(cfg.d, grid, cfg.replicates, cfg.seed, cfg.workers);
    std::vector<ReportRow> rows;
    for (std::size_t r = 0; r < table.size(); ++r) {
        const bool reference = table[r].label == "poisson";
        for (int kf = 0; kf < cfg.d; ++kf) {
            const Estimate& e = table[r].f[std::size_t(kf)];
            const std::string id = "cone_f" + std::to_string(kf) + "." + table[r].label;
            const std::string p = "d=" + std::to_string(cfg.d) + " " + table[r].label;
            if (kf == cfg.d - 1) {
                const double oracle = reference
                                          ? expected_facets_poisson(cfg.d, 1.0)
                                          : exact_facets_halfsphere(cfg.d, grid[r]);
                rows.push_back(z_row(id, p, e, oracle, 4.0));
            } else {
                rows.push_back(report_only_row(id, p, e, "unknown"));
            }
        }
    }
    return rows;
}

std::vector<ReportRow> run_conic_profile(const ExperimentConfig& cfg) {
    Rng rng(cfg.seed);
    Cone cone = cone_from_sample(sample_cone(cfg.d, cfg.n, rng));
    ConicProfile p = conic_profile(cone, cfg.samples, rng);
    const std::string ps = "d=" + std::to_string(cfg.d) + " n=" + std::to_string(cfg.n) +
                           " samples=" + std::to_string(cfg.samples);
    std::vector<ReportRow> rows;
    const std::size_t m = cone.ambient_dim();
    double even = 0.0, odd = 0.0;
    for (std::size_t kv = 0; kv < p.v.size(); ++kv) {
        Estimate e;
        e.mean = p.v[kv];
        e.stderr_ = p.v_se[kv];
        e.n_replicates = p.samples;
        e.seed = cfg.seed;
        rows.push_back(report_only_row("v" + std::to_string(kv), ps, e, ""));
        (kv % 2 == 0 ? even : odd) += p.v[kv];
    }
    {
        Estimate e;
        e.mean = even;
        e.stderr_ = std::sqrt(std::max(0.0, even * (1.0 - even)) / double(p.samples));
        e.n_replicates = p.samples;
        e.seed = cfg.seed;
        rows.push_back(z_row("gauss_bonnet_even", ps, e, 0.5, 3.0));
        e.mean = odd;
        e.stderr_ = std::sqrt(std::max(0.0, odd * (1.0 - odd)) / double(p.samples));
        rows.push_back(z_row("gauss_bonnet_odd", ps, e, 0.5, 3.0));
    }
    for (std::size_t kg = 1; kg <= m; ++kg) {
        Estimate diff;
        diff.mean = p.h_direct[kg] - p.h_from_v[kg];
        diff.stderr_ = std::sqrt(p.h_direct_se[kg] * p.h_direct_se[kg] +
                                 p.h_from_v_se[kg] * p.h_from_v_se[kg]);
        diff.n_replicates = p.samples;
        diff.seed = cfg.seed;
        rows.push_back(z_row("crofton_h" + std::to_string(kg), ps, diff, 0.0, 3.0));
        Estimate wdiff;
        wdiff.mean = p.w_direct[kg] - p.w_from_v[kg];
        wdiff.stderr_ = std::sqrt(p.w_direct_se[kg] * p.w_direct_se[kg] +
                                  p.w_from_v_se[kg] * p.w_from_v_se[kg]);
        wdiff.n_replicates = p.samples;
        wdiff.seed = cfg.seed;
        rows.push_back(z_row("kubota_w" + std::to_string(kg), ps, wdiff, 0.0, 3.0));
    }
    if (!cfg.out.empty()) write_json_file(cfg.out + ".profile.json", to_json(p));
    return rows;
}

std::vector<ReportRow> run_buchta(const ExperimentConfig& cfg) {
    Rng rng(cfg.seed);
    BuchtaReport rep = buchta_identity_check(cfg.d, cfg.n, cfg.k, cfg.samples, rng);
    const std::string ps = "d=" + std::to_string(cfg.d) + " n=" + std::to_string(cfg.n) +
                           " k=" + std::to_string(cfg.k);
    std::vector<ReportRow> rows;
    rows.push_back(report_only_row("buchta_lhs", ps, rep.lhs, ""));
    rows.push_back(report_only_row("buchta_rhs", ps, rep.rhs, ""));
    Estimate diff;
    diff.mean = rep.lhs.mean - rep.rhs.mean;
    diff.stderr_ = std::sqrt(rep.lhs.stderr_ * rep.lhs.stderr_ +
                             rep.rhs.stderr_ * rep.rhs.stderr_);
    diff.n_replicates = cfg.samples;
    diff.seed = cfg.seed;
    rows.push_back(z_row("buchta_z", ps, diff, 0.0, 3.0));
    if (cfg.d == 1 && cfg.k == 1) {
        // exact route: the section of any 1-d cone is an interval (f = 2) and
        // the identity evaluates to 2 = 2 in closed form
        const double lhs_exact = 2.0 * (cfg.n + 1) * (1.0 / (cfg.n + 1));
        ReportRow ex = exact_row("buchta_exact", ps, lhs_exact, 2.0, cfg.seed, cfg.samples);
        ex.pass = ex.pass && rep.rhs.mean == 2.0 && rep.rhs.stderr_ == 0.0;
        rows.push_back(ex);
    }
    return rows;
}

std::vector<ReportRow> run_symmetric_T(const ExperimentConfig& cfg) {
    const PoissonParams params{cfg.d, cfg.gamma, cfg.c};
    FunctionalEstimate fe =
        estimate_T_symmetric(params, cfg.a, cfg.b, cfg.replicates, cfg.seed, cfg.workers);
    const std::string p = poisson_params_str(cfg) + " a=" + num(cfg.a) + " b=" + num(cfg.b);
    const Oracle oracle = expected_T_symmetric(cfg.d, cfg.gamma, cfg.c, cfg.a, cfg.b);
    const std::string flag = fe.heavy_tail ? "heavy_tail" : "";
    if (oracle.is_infinite())
        return {report_only_row("symmetric_T", p, fe.est, "+inf",
                                flag.empty() ? "target_infinite" : flag + ",target_infinite")};
    return {z_row("symmetric_T", p, fe.est, oracle.value, 4.0, flag)};
}

std::vector<ReportRow> run_sampler_tests(const ExperimentConfig& cfg) {
    std::vector<ReportRow> rows;
    const std::size_t draws = cfg.samples;
    const std::size_t reps = cfg.replicates;

    { // xi_0 ~ U[0,1] at d = 2
        Rng rng(derive_seed(cfg.seed, 1));
        std::vector<double> u(draws);
        for (double& v : u) v = sample_halfsphere(2, rng)[0];
        rows.push_back(pvalue_row("ks_xi0_d2", "draws=" + std::to_string(draws),
                                  ks_p_value(u), cfg.seed, draws));
    }
    { // standard Cauchy at d = 1
        Rng rng(derive_seed(cfg.seed, 2));
        std::vector<double> u(draws);
        for (double& v : u) v = 0.5 + std::atan(sample_cauchy_type(1, rng)[0]) / PI;
        rows.push_back(pvalue_row("ks_cauchy_d1", "draws=" + std::to_string(draws),
                                  ks_p_value(u), cfg.seed, draws));
    }
    { // Poisson(1) annulus count at d=2, gamma=1, c=2, r=1
        Rng rng(derive_seed(cfg.seed, 3));
        const PoissonParams p{2, 1.0, 2.0};
        std::vector<double> counts(9, 0.0), expected(9, 0.0);
        const double inf = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < reps; ++i)
            counts[std::min<std::size_t>(8, sample_poisson_annulus(p, 1.0, inf, rng).size())] +=
                1.0;
        double cum = 0.0;
        for (int kb = 0; kb < 8; ++kb) {
            expected[std::size_t(kb)] = double(reps) * std::exp(-1.0 - log_factorial(kb));
            cum += expected[std::size_t(kb)];
        }
        expected[8] = double(reps) - cum;
        rows.push_back(pvalue_row("chi2_annulus_poisson1", "d=2 gamma=1 c=2 r=1",
                                  chi_square_p_value(counts, expected), cfg.seed, reps));
    }
    // projection stability: counts outside R in a Haar k-subspace follow the
    // power-law mass of the k-dimensional process
    for (int kp : {1, 2}) {
        Rng rng(derive_seed(cfg.seed, 10 + std::uint64_t(kp)));
        const PoissonParams p{3, 1.0, 2.0};
        const double R = 1.0;
        const double mean = poisson_tail_mass(PoissonParams{kp, p.gamma, p.c}, R);
        const std::size_t n_reps = std::max<std::size_t>(200, reps / 4);
        std::vector<double> counts(7, 0.0), expected(7, 0.0);
        for (std::size_t i = 0; i < n_reps; ++i) {
            auto [sample, hull] = sample_poisson_hull(p, rng);
            Subspace sub = haar_subspace(3, std::size_t(kp), rng);
            std::size_t outside = 0;
            for (const auto& q : project_points(sample.points, sub))
                if (norm(q) > R) ++outside;
            counts[std::min<std::size_t>(6, outside)] += 1.0;
        }
        double cum = 0.0;
        for (int kb = 0; kb < 6; ++kb) {
            expected[std::size_t(kb)] =
                double(n_reps) * std::exp(-mean + kb * std::log(mean) - log_factorial(kb));
            cum += expected[std::size_t(kb)];
        }
        expected[6] = double(n_reps) - cum;
        rows.push_back(pvalue_row("chi2_projection_k" + std::to_string(kp),
                                  "d=3 gamma=1 c=2 R=1",
                                  chi_square_p_value(counts, expected), cfg.seed, n_reps));
    }
    // one-dimensional non-absorption curve
    {
        int salt = 20;
        for (double gamma : {1.0, 2.0}) {
            for (double R : {0.5, 1.0, 2.0}) {
                Rng rng(derive_seed(cfg.seed, std::uint64_t(salt++)));
                const PoissonParams p{1, gamma, 2.0};
                const double expect =
                    std::exp(-p.c / (gamma * omega(gamma + 1.0)) * std::pow(R, -gamma));
                std::vector<double> hit(reps);
                for (std::size_t i = 0; i < reps; ++i) {
                    auto [sample, hull] = sample_poisson_hull(p, rng);
                    hit[i] = contains_point(hull, {R}) ? 0.0 : 1.0;
                }
                Estimate e = make_estimate(hit, cfg.seed, "nonabsorb");
                rows.push_back(z_row("nonabsorb_g" + num(gamma) + "_R" + num(R),
                                     "gamma=" + num(gamma) + " c=2 R=" + num(R), e, expect,
                                     3.0));
            }
        }
    }
    return rows;
}

} // namespace

Report run(const ExperimentConfig& cfg) {
    cfg.validate_for_kind();
    Report report;
    RowTimer timer(cfg.timing);
    std::vector<ReportRow> rows;
    const std::string params = poisson_params_str(cfg);
    try {
        switch (cfg.kind) {
            case ExperimentKind::PoissonF: rows = run_poisson_f(cfg); break;
            case ExperimentKind::PoissonT: rows = run_poisson_T(cfg); break;
            case ExperimentKind::PoissonVolume: rows = run_poisson_volume(cfg); break;
            case ExperimentKind::Intrinsic: rows = run_intrinsic(cfg); break;
            case ExperimentKind::BConstant: rows = run_B_constant(cfg); break;
            case ExperimentKind::ConeLimit: rows = run_cone_limit(cfg); break;
            case ExperimentKind::ConicProfile: rows = run_conic_profile(cfg); break;
            case ExperimentKind::Buchta: rows = run_buchta(cfg); break;
            case ExperimentKind::SymmetricT: rows = run_symmetric_T(cfg); break;
            case ExperimentKind::SamplerTests: rows = run_sampler_tests(cfg); break;
        }
    } catch (const ConfigError&) {
        throw; // configuration problems abort the run; estimator errors do not
    } catch (const std::exception& e) {
        rows = {error_row(to_string(cfg.kind), params, e.what())};
    }
    const long long ms = timer.elapsed_ms();
    for (auto& r : rows) {
        r.wall_ms = ms;
        if (r.seed == 0) r.seed = cfg.seed;
        report.rows.push_back(std::move(r));
    }
    return report;
}

std::string report_csv(const Report& report) {
    std::ostringstream out;
    out << "# schema=conehull.report.v1\n";
    out << "target_id,params,mean,stderr,oracle,z_score,pass,flag,replicates,seed,"
           "wall_time_ms\n";
    for (const auto& r : report.rows) {
        out << r.target_id << ',' << r.params << ',' << num(r.mean) << ',' << num(r.se) << ','
            << r.oracle_text << ',' << (r.z ? num(*r.z) : std::string()) << ','
            << (r.pass ? 1 : 0) << ',' << r.flag << ',' << r.replicates << ',' << r.seed << ','
            << r.wall_ms << '\n';
    }
    return out.str();
}

json report_json(const Report& report) {
    json rows = json::array();
    for (const auto& r : report.rows) {
        json row{{"target_id", r.target_id}, {"params", r.params},
                 {"mean", r.mean},           {"stderr", r.se},
                 {"oracle", r.oracle_text},  {"check", r.check},
                 {"pass", r.pass},           {"flag", r.flag},
                 {"replicates", r.replicates}, {"seed", r.seed},
                 {"wall_time_ms", r.wall_ms}};
        if (r.z) row["z_score"] = *r.z;
        rows.push_back(std::move(row));
    }
    return {{"schema", "conehull.report.v1"}, {"rows", rows}};
}

std::string gnuplot_script(const std::string& csv_path) {
    std::ostringstream out;
    out << "# render with: gnuplot <this file>\n"
        << "set datafile separator ','\n"
        << "set datafile commentschars '#'\n"
        << "set terminal pngcairo size 1100,600\n"
        << "set output 'report.png'\n"
        << "set key off\n"
        << "set xtics rotate by -40 right\n"
        << "set ylabel 'estimate'\n"
        << "plot '" << csv_path << "' every ::1 using 0:3:4 with yerrorbars pt 7, \\\n"
        << "     '' every ::1 using 0:3:xtic(1) with points pt 7\n";
    return out.str();
}

void emit_report(const Report& report, const ExperimentConfig& cfg) {
    if (cfg.out.empty()) return;
    if (cfg.format == "csv") {
        const std::string path = cfg.out + ".csv";
        std::ofstream f(path);
        if (!f) throw IoError("cannot write " + path);
        f << report_csv(report);
        if (cfg.gnuplot) {
            std::ofstream g(cfg.out + ".gp");
            if (!g) throw IoError("cannot write " + cfg.out + ".gp");
            g << gnuplot_script(path);
        }
    } else {
        write_json_file(cfg.out + ".json", report_json(report));
    }
}

// ---------------------------------------------------------------------------
// acceptance battery

namespace {

struct PresetSizes {
    std::size_t f_d2, f_d3, ico;
    std::size_t cone_reps;
    std::size_t limit_f;
    std::size_t b22_outer, b22_inner, b33_outer, b33_inner, b23_outer, b23_inner;
    std::size_t vol, t10, sym;
    std::size_t quadrant_samples, cone_profile_samples;
    int cones_per_d;
    std::size_t buchta_exact, buchta_mc;
    std::size_t ks_draws, chi_reps;
    std::size_t identity_hulls;
};

PresetSizes preset_sizes(const std::string& preset) {
    if (preset == "fast")
        return {500, 300, 300, 400, 600, 300, 60, 250, 60, 250, 60,
                600, 800, 500, 20000, 2500, 7, 800, 3000, 10000, 1500, 60};
    if (preset == "full")
        return {2000, 2000, 1500, 1500, 2000, 1200, 120, 700, 160, 700, 160,
                2000, 2000, 2000, 60000, 6000, 7, 2000, 10000, 10000, 4000, 150};
    throw ConfigError("unknown preset: " + preset);
}

ExperimentConfig base_config(std::uint64_t seed, int workers, bool timing) {
    ExperimentConfig cfg;
    cfg.seed = seed;
    cfg.workers = workers;
    cfg.timing = timing;
    return cfg;
}

void append_prefixed(Report& report, const std::string& prefix, Report&& sub) {
    for (auto& r : sub.rows) {
        r.target_id = prefix + "." + r.target_id;
        report.rows.push_back(std::move(r));
    }
}

} // namespace

Report verify_all(const std::string& preset, std::uint64_t seed, int workers, bool timing) {
    if (preset == "selftest-fail") {
        ExperimentConfig cfg = base_config(seed, workers, timing);
        cfg.kind = ExperimentKind::PoissonF;
        cfg.d = 2;
        cfg.gamma = 2.0;
        cfg.c = 2.0;
        cfg.replicates = 200;
        cfg.oracle_override = 1000.0; // deliberately corrupted oracle
        Report r = run(cfg);
        for (auto& row : r.rows) row.target_id = "selftest." + row.target_id;
        return r;
    }
    const PresetSizes sz = preset_sizes(preset);
    Report report;

    // 1. Poisson facet counts vs the closed form
    {
        ExperimentConfig cfg = base_config(derive_seed(seed, 101), workers, timing);
        cfg.kind = ExperimentKind::PoissonF;
        cfg.d = 2;
        cfg.gamma = 2.0;
        cfg.replicates = sz.f_d2;
        Report sub = run(cfg);
        report.rows.push_back(sub.rows.at(1)); // f_1 vs 6
        report.rows.back().target_id = "c1.facets_d2";

        cfg.seed = derive_seed(seed, 102);
        cfg.d = 3;
        cfg.replicates = sz.f_d3;
        sub = run(cfg);
        report.rows.push_back(sub.rows.at(2)); // f_2 vs 20
        report.rows.back().target_id = "c1.facets_d3";
    }
    // 2. Icosahedron f-vector
    {
        ExperimentConfig cfg = base_config(derive_seed(seed, 103), workers, timing);
        cfg.kind = ExperimentKind::PoissonF;
        cfg.d = 3;
        cfg.gamma = 2.0;
        cfg.replicates = sz.ico;
        Report sub = run(cfg);
        for (int kf = 0; kf < 3; ++kf) {
            report.rows.push_back(sub.rows.at(std::size_t(kf)));
            report.rows.back().target_id = "c2.ico_f" + std::to_string(kf);
        }
    }
    // 3. Half-sphere facet formula: exact quadrature values and the MC grid
    {
        report.rows.push_back(
            exact_row("c3.quadrature_d1", "d=1 n=10", exact_facets_halfsphere(1, 10), 2.0, seed));
        report.rows.push_back(
            exact_row("c3.quadrature_d2n3", "d=2 n=3", exact_facets_halfsphere(2, 3), 3.0, seed));
        ExperimentConfig cfg = base_config(derive_seed(seed, 104), workers, timing);
        cfg.kind = ExperimentKind::ConeLimit;
        cfg.d = 2;
        cfg.n_grid = {5, 10, 20, 100};
        cfg.replicates = sz.cone_reps;
        Report sub = run(cfg);
        for (auto& row : sub.rows) {
            if (row.target_id.rfind("cone_f1.n", 0) == 0) {
                row.target_id = "c3." + row.target_id;
                report.rows.push_back(row);
            }
        }
    }
    // 4. Limit constants: f_1 of conv Pi_{2,1}(2) and the B integrals
    {
        ExperimentConfig cfg = base_config(derive_seed(seed, 105), workers, timing);
        cfg.kind = ExperimentKind::PoissonF;
        cfg.d = 2;
        cfg.gamma = 1.0;
        cfg.c = 2.0;
        cfg.replicates = sz.limit_f;
        Report sub = run(cfg);
        report.rows.push_back(sub.rows.at(1));
        report.rows.back().target_id = "c4.limit_f1";

        auto b_run = [&](int k, int d, std::size_t outer, std::size_t inner,
                         std::uint64_t salt) {
            ExperimentConfig bc = base_config(derive_seed(seed, salt), workers, timing);
            bc.kind = ExperimentKind::BConstant;
            bc.k = k;
            bc.d = d;
            bc.replicates = outer;
            bc.samples = inner;
            Report br = run(bc);
            report.rows.push_back(br.rows.at(0));
            report.rows.back().target_id =
                "c4.B" + std::to_string(k) + std::to_string(d);
        };
        b_run(2, 2, sz.b22_outer, sz.b22_inner, 106);
        b_run(3, 3, sz.b33_outer, sz.b33_inner, 107);
        b_run(2, 3, sz.b23_outer, sz.b23_inner, 108);
    }
    // 5. Volume and T functionals, plain and symmetric
    {
        ExperimentConfig cfg = base_config(derive_seed(seed, 109), workers, timing);
        cfg.kind = ExperimentKind::PoissonVolume;
        cfg.d = 2;
        cfg.gamma = 2.0;
        cfg.c = 2.0;
        cfg.replicates = sz.vol;
        append_prefixed(report, "c5", run(cfg));

        cfg = base_config(derive_seed(seed, 110), workers, timing);
        cfg.kind = ExperimentKind::PoissonT;
        cfg.d = 2;
        cfg.gamma = 1.0;
        cfg.c = 1.0;
        cfg.a = 1.0;
        cfg.b = 0.0;
        cfg.replicates = sz.t10;
        append_prefixed(report, "c5", run(cfg));

        for (double ab : {0.0, 1.0}) {
            cfg = base_config(derive_seed(seed, 111 + std::uint64_t(ab)), workers, timing);
            cfg.kind = ExperimentKind::SymmetricT;
            cfg.d = 2;
            cfg.gamma = 2.0;
            cfg.c = 1.0;
            cfg.a = ab;
            cfg.b = ab;
            cfg.replicates = sz.sym;
            Report sub = run(cfg);
            report.rows.push_back(sub.rows.at(0));
            report.rows.back().target_id =
                ab == 0.0 ? "c5.symmetric_T00" : "c5.symmetric_T11";
        }
    }
    // 6. Conic identity suite
    {
        RowTimer timer(timing);
        Rng rng(derive_seed(seed, 113));
        Cone quadrant = cone_from_generators(1, {{1.0, 0.0}, {0.0, 1.0}});
        ConicProfile qp = conic_intrinsic_volumes(quadrant, sz.quadrant_samples, rng);
        const double targets[3] = {0.25, 0.5, 0.25};
        for (int kv = 0; kv < 3; ++kv) {
            Estimate e;
            e.mean = qp.v[std::size_t(kv)];
            e.stderr_ = qp.v_se[std::size_t(kv)];
            e.n_replicates = qp.samples;
            e.seed = seed;
            ReportRow row = z_row("c6.quadrant_v" + std::to_string(kv), "quadrant", e,
                                  targets[kv], 3.0);
            row.wall_ms = timer.elapsed_ms();
            report.rows.push_back(std::move(row));
        }
        for (int d : {1, 2, 3}) {
            RowTimer dt(timing);
            double max_gb = 0.0, max_crofton = 0.0, max_kubota = 0.0;
            for (int ci = 0; ci < sz.cones_per_d; ++ci) {
                Rng crng(derive_seed(seed, 1000 + std::uint64_t(100 * d + ci)));
                Cone cone = cone_from_sample(sample_cone(d, d + 2 + 3 * ci, crng));
                ConicProfile p = conic_profile(cone, sz.cone_profile_samples, crng);
                double even = 0.0, odd = 0.0;
                for (std::size_t kv = 0; kv < p.v.size(); ++kv)
                    (kv % 2 == 0 ? even : odd) += p.v[kv];
                const double se_even =
                    std::sqrt(std::max(1e-300, even * (1.0 - even) / double(p.samples)));
                const double se_odd =
                    std::sqrt(std::max(1e-300, odd * (1.0 - odd) / double(p.samples)));
                max_gb = std::max(max_gb, std::fabs(even - 0.5) / se_even);
                max_gb = std::max(max_gb, std::fabs(odd - 0.5) / se_odd);
                for (std::size_t kg = 1; kg <= cone.ambient_dim(); ++kg) {
                    const double se_h =
                        std::sqrt(p.h_direct_se[kg] * p.h_direct_se[kg] +
                                  p.h_from_v_se[kg] * p.h_from_v_se[kg]);
                    if (se_h > 0.0)
                        max_crofton = std::max(
                            max_crofton, std::fabs(p.h_direct[kg] - p.h_from_v[kg]) / se_h);
                    const double se_w =
                        std::sqrt(p.w_direct_se[kg] * p.w_direct_se[kg] +
                                  p.w_from_v_se[kg] * p.w_from_v_se[kg]);
                    if (se_w > 0.0)
                        max_kubota = std::max(
                            max_kubota, std::fabs(p.w_direct[kg] - p.w_from_v[kg]) / se_w);
                }
            }
            auto aggregate = [&](const std::string& name, double zmax) {
                ReportRow row;
                row.target_id = "c6." + name + "_d" + std::to_string(d);
                row.params = "cones=" + std::to_string(sz.cones_per_d) +
                             " samples=" + std::to_string(sz.cone_profile_samples);
                row.mean = zmax;
                row.oracle_text = "max|z|";
                row.z = zmax;
                row.check = "|z|<=3";
                row.pass = zmax <= 3.0;
                row.replicates = std::size_t(sz.cones_per_d);
                row.seed = seed;
                row.wall_ms = dt.elapsed_ms();
                report.rows.push_back(std::move(row));
            };
            aggregate("gauss_bonnet", max_gb);
            aggregate("crofton", max_crofton);
            aggregate("kubota", max_kubota);
        }
    }
    // 7. Buchta identity
    {
        ExperimentConfig cfg = base_config(derive_seed(seed, 114), workers, timing);
        cfg.kind = ExperimentKind::Buchta;
        cfg.d = 1;
        cfg.n = 10;
        cfg.k = 1;
        cfg.samples = sz.buchta_exact;
        Report sub = run(cfg);
        for (auto& row : sub.rows)
            if (row.target_id == "buchta_exact") {
                row.target_id = "c7.buchta_exact_d1";
                report.rows.push_back(row);
            }
        for (int k = 1; k <= 2; ++k) {
            cfg = base_config(derive_seed(seed, 115 + std::uint64_t(k)), workers, timing);
            cfg.kind = ExperimentKind::Buchta;
            cfg.d = 2;
            cfg.n = 20;
            cfg.k = k;
            cfg.samples = sz.buchta_mc;
            Report mc = run(cfg);
            for (auto& row : mc.rows)
                if (row.target_id == "buchta_z") {
                    row.target_id = "c7.buchta_z_d2k" + std::to_string(k);
                    report.rows.push_back(row);
                }
        }
    }
    // 8. Sampler distribution tests
    {
        ExperimentConfig cfg = base_config(derive_seed(seed, 117), workers, timing);
        cfg.kind = ExperimentKind::SamplerTests;
        cfg.samples = sz.ks_draws;
        cfg.replicates = sz.chi_reps;
        append_prefixed(report, "c8", run(cfg));
    }
    // 9. Deterministic identities on every sampled hull + LP agreement
    {
        RowTimer timer(timing);
        long violations = 0;
        long hulls_checked = 0;
        const PoissonParams sets[] = {{2, 2.0, 2.0}, {3, 2.0, 2.0}, {2, 1.0, 2.0}, {1, 2.0, 2.0}};
        for (const auto& p : sets) {
            auto results = map_replicates(sz.identity_hulls, workers, [&](std::size_t i) {
                Rng rng(derive_seed(seed ^ 0xabcdef, i * 4 + std::uint64_t(p.d)));
                auto [sample, hull] = sample_poisson_hull(p, rng);
                return verify_hull_identities(hull).all() ? 0 : 1;
            });
            for (int v : results) violations += v;
            hulls_checked += long(results.size());
        }
        { // symmetric hulls too
            auto results = map_replicates(sz.identity_hulls, workers, [&](std::size_t i) {
                Rng rng(derive_seed(seed ^ 0xfedcba, i));
                Hull h = sample_symmetric_hull(PoissonParams{2, 2.0, 1.0}, rng);
                return verify_hull_identities(h).all() ? 0 : 1;
            });
            for (int v : results) violations += v;
            hulls_checked += long(results.size());
        }
        ReportRow row = exact_row("c9.hull_identities",
                                  "hulls=" + std::to_string(hulls_checked), double(violations),
                                  0.0, seed, std::size_t(hulls_checked));
        row.wall_ms = timer.elapsed_ms();
        report.rows.push_back(std::move(row));

        RowTimer lp_timer(timing);
        auto mismatches = map_replicates(200, workers, [&](std::size_t i) {
            Rng rng(derive_seed(seed ^ 0x5eed, i));
            const int d = 2 + int(i % 3);
            const int n = d + 2 + int(rng.uniform() * 40.0);
            std::vector<Point> pts;
            for (int q = 0; q < n; ++q) pts.push_back(sample_cauchy_type(d, rng));
            Hull h = convex_hull(pts, std::size_t(d));
            std::set<std::vector<double>> mine(h.vertices.begin(), h.vertices.end());
            std::set<std::vector<double>> oracle;
            for (std::size_t a_i = 0; a_i < pts.size(); ++a_i) {
                std::vector<Point> others;
                for (std::size_t b_i = 0; b_i < pts.size(); ++b_i)
                    if (b_i != a_i) others.push_back(pts[b_i]);
                if (!point_in_conv_lp(pts[a_i], others)) oracle.insert(pts[a_i]);
            }
            return mine == oracle ? 0 : 1;
        });
        long bad = 0;
        for (int v : mismatches) bad += v;
        ReportRow lp_row = exact_row("c9.hull_vs_lp", "instances=200", double(bad), 0.0, seed,
                                     200);
        lp_row.wall_ms = lp_timer.elapsed_ms();
        report.rows.push_back(std::move(lp_row));
    }
    // 10. Infinity branches of the oracles
    {
        long mismatched = 0;
        for (int d : {1, 2, 3, 4}) {
            for (double g : {0.5, 1.0, 1.5, 2.0, 3.0}) {
                for (double a : {0.0, 0.5, 1.0, 2.0, 3.0, 6.0}) {
                    for (double b : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0}) {
                        const bool should_be_infinite =
                            (g - b) * d + b - a <= 0.0 || g - b <= 0.0;
                        if (expected_T(d, g, 2.0, a, b).is_infinite() != should_be_infinite)
                            ++mismatched;
                    }
                }
            }
        }
        report.rows.push_back(exact_row("c10.infinity_T", "boundary grid", double(mismatched),
                                        0.0, seed, 0));
        mismatched = 0;
        for (int d : {1, 2, 3, 4})
            for (double g : {0.25, 0.5, 0.75, 1.0, 1.0 + 1e-9, 1.5, 2.0})
                if (expected_volume_poisson(d, g, 1.0).is_infinite() != (g <= 1.0)) ++mismatched;
        report.rows.push_back(exact_row("c10.infinity_volume", "gamma grid", double(mismatched),
                                        0.0, seed, 0));
    }
    return report;
}

std::vector<std::string> verify_manifest(const std::string& preset) {
    if (preset == "selftest-fail") return {"selftest.poisson_f0", "selftest.poisson_f1"};
    preset_sizes(preset); // validates the name
    return {
        "c1.facets_d2",
        "c1.facets_d3",
        "c2.ico_f0",
        "c2.ico_f1",
        "c2.ico_f2",
        "c3.quadrature_d1",
        "c3.quadrature_d2n3",
        "c3.cone_f1.n=5",
        "c3.cone_f1.n=10",
        "c3.cone_f1.n=20",
        "c3.cone_f1.n=100",
        "c4.limit_f1",
        "c4.B22",
        "c4.B33",
        "c4.B23",
        "c5.poisson_volume",
        "c5.poisson_T",
        "c5.symmetric_T00",
        "c5.symmetric_T11",
        "c6.quadrant_v0",
        "c6.quadrant_v1",
        "c6.quadrant_v2",
        "c6.gauss_bonnet_d1",
        "c6.crofton_d1",
        "c6.kubota_d1",
        "c6.gauss_bonnet_d2",
        "c6.crofton_d2",
        "c6.kubota_d2",
        "c6.gauss_bonnet_d3",
        "c6.crofton_d3",
        "c6.kubota_d3",
        "c7.buchta_exact_d1",
        "c7.buchta_z_d2k1",
        "c7.buchta_z_d2k2",
        "c8.ks_xi0_d2",
        "c8.ks_cauchy_d1",
        "c8.chi2_annulus_poisson1",
        "c8.chi2_projection_k1",
        "c8.chi2_projection_k2",
        "c8.nonabsorb_g1_R0.5",
        "c8.nonabsorb_g1_R1",
        "c8.nonabsorb_g1_R2",
        "c8.nonabsorb_g2_R0.5",
        "c8.nonabsorb_g2_R1",
        "c8.nonabsorb_g2_R2",
        "c9.hull_identities",
        "c9.hull_vs_lp",
        "c10.infinity_T",
        "c10.infinity_volume",
    };
}

// ---------------------------------------------------------------------------
// minimal flat TOML

namespace {

std::string strip(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

ExperimentConfig load_toml_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comments outside quotes
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            if (line[i] == '#' && !quoted) {
                line = line.substr(0, i);
                break;
            }
        }
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        auto as_string = [&]() {
            if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
                return value.substr(1, value.size() - 2);
            return value;
        };
        auto as_double = [&]() {
            try {
                return std::stod(value);
            } catch (...) {
                throw ConfigError(path + ":" + std::to_string(lineno) + ": bad number");
            }
        };
        auto as_bool = [&]() {
            if (value == "true") return true;
            if (value == "false") return false;
            throw ConfigError(path + ":" + std::to_string(lineno) + ": bad boolean");
        };
        if (key == "kind") cfg.kind = kind_from_string(as_string());
        else if (key == "d") cfg.d = int(as_double());
        else if (key == "gamma") cfg.gamma = as_double();
        else if (key == "c") cfg.c = as_double();
        else if (key == "n") cfg.n = int(as_double());
        else if (key == "a") cfg.a = as_double();
        else if (key == "b") cfg.b = as_double();
        else if (key == "k") cfg.k = int(as_double());
        else if (key == "replicates") cfg.replicates = std::size_t(as_double());
        else if (key == "samples") cfg.samples = std::size_t(as_double());
        else if (key == "dirs") cfg.dirs = std::size_t(as_double());
        else if (key == "seed") cfg.seed = std::uint64_t(as_double());
        else if (key == "workers") cfg.workers = int(as_double());
        else if (key == "out") cfg.out = as_string();
        else if (key == "format") cfg.format = as_string();
        else if (key == "gnuplot") cfg.gnuplot = as_bool();
        else if (key == "timing") cfg.timing = as_bool();
        else if (key == "cache") cfg.cache = as_string();
        else if (key == "oracle_override") cfg.oracle_override = as_double();
        else if (key == "n_grid") {
            if (value.size() < 2 || value.front() != '[' || value.back() != ']')
                throw ConfigError(path + ":" + std::to_string(lineno) + ": bad array");
            cfg.n_grid.clear();
            std::stringstream ss(value.substr(1, value.size() - 2));
            std::string item;
            while (std::getline(ss, item, ',')) {
                item = strip(item);
                if (!item.empty()) cfg.n_grid.push_back(std::stoi(item));
            }
        } else {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key " + key);
        }
    }
    return cfg;
}

} // namespace conehull
