#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "conehull/closed_forms.hpp"
#include "conehull/conic.hpp"
#include "conehull/errors.hpp"
#include "conehull/harness.hpp"
#include "conehull/samplers.hpp"
#include "conehull/serialize.hpp"
#include "conehull/special.hpp"

using namespace conehull;

namespace {

std::string num(double v) {
    if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t env_seed() {
    if (const char* s = std::getenv("CONEHULL_SEED")) return std::strtoull(s, nullptr, 10);
    return 0;
}

void print_report(const Report& report) { std::cout << report_csv(report); }

int run_and_emit(const ExperimentConfig& cfg) {
    Report report = run(cfg);
    print_report(report);
    emit_report(report, cfg);
    return report.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"conehull: random cones over half-spheres and power-law Poisson hulls"};
    app.require_subcommand(1);

    // shared knobs; each subcommand reads the ones it understands
    ExperimentConfig cfg;
    cfg.seed = env_seed();

    std::string config_path, family, preset = "fast", kind_name;
    bool no_timing = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--d", cfg.d, "dimension of the tangent-space hull");
        sub->add_option("--gamma", cfg.gamma, "tail exponent of the intensity");
        sub->add_option("--c", cfg.c, "intensity scale");
        sub->add_option("--n", cfg.n, "number of half-sphere points");
        sub->add_option("--a", cfg.a, "distance exponent of T");
        sub->add_option("--b", cfg.b, "volume exponent of T");
        sub->add_option("--k", cfg.k, "face / subspace index");
        sub->add_option("--replicates", cfg.replicates, "outer replicates");
        sub->add_option("--samples", cfg.samples, "inner samples per replicate");
        sub->add_option("--dirs", cfg.dirs, "projection directions per replicate");
        sub->add_option("--seed", cfg.seed, "master seed (or env CONEHULL_SEED)");
        sub->add_option("--workers", cfg.workers, "worker threads");
        sub->add_option("--out", cfg.out, "output file base");
        sub->add_option("--format", cfg.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--gnuplot", cfg.gnuplot, "also emit a gnuplot script");
        sub->add_flag("--no-timing", no_timing, "zero wall_time_ms for byte-stable output");
        sub->add_option("--cache", cfg.cache, "geometry cache file (hull experiments)");
    };

    CLI::App* sample_hull = app.add_subcommand("sample-hull", "sample one certified Poisson hull");
    add_common(sample_hull);

    CLI::App* cone_cmd = app.add_subcommand("cone", "sample a random cone over the half-sphere");
    add_common(cone_cmd);

    CLI::App* table = app.add_subcommand("table", "print a closed-form oracle family as CSV");
    std::vector<int> d_list{2}, n_list, k_list;
    std::vector<double> gamma_list{1.0};
    table->add_option("--family", family,
                      "facets-poisson|facets-halfsphere|limit-f|T|volume|intrinsic|B")
        ->required();
    table->add_option("--d", d_list)->delimiter(',');
    table->add_option("--gamma", gamma_list)->delimiter(',');
    table->add_option("--n", n_list)->delimiter(',');
    table->add_option("--k", k_list)->delimiter(',');
    table->add_option("--c", cfg.c);
    table->add_option("--a", cfg.a);
    table->add_option("--b", cfg.b);
    table->add_option("--out", cfg.out);

    CLI::App* estimate = app.add_subcommand("estimate", "run a Monte Carlo experiment");
    estimate->add_option("--kind", kind_name,
                         "poisson-f|poisson-T|poisson-volume|intrinsic|B-constant|cone-limit|"
                         "conic-profile|buchta|symmetric-T|sampler-tests");
    estimate->add_option("--config", config_path, "TOML experiment manifest (flags win)");
    std::vector<int> n_grid;
    estimate->add_option("--n-grid", n_grid, "cone-limit n grid")->delimiter(',');
    add_common(estimate);

    CLI::App* conic_cmd = app.add_subcommand("conic", "conic profile of a sampled cone");
    add_common(conic_cmd);

    CLI::App* buchta_cmd = app.add_subcommand("buchta", "dual-MC check of the Buchta identity");
    add_common(buchta_cmd);

    CLI::App* verify = app.add_subcommand("verify", "run the acceptance battery");
    verify->add_option("--preset", preset, "fast|full|selftest-fail");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.timing = !no_timing;
        if (sample_hull->parsed()) {
            Rng rng(cfg.seed);
            auto [sample, hull] = sample_poisson_hull(PoissonParams{cfg.d, cfg.gamma, cfg.c}, rng);
            const FVector f = f_vector(hull);
            std::cout << "certified=" << sample.certified << " r_trunc=" << num(sample.r_trunc)
                      << " points=" << sample.points.size() << " f=(";
            for (std::size_t i = 0; i < f.size(); ++i)
                std::cout << f[i] << (i + 1 < f.size() ? "," : "");
            std::cout << ")\n";
            if (!cfg.out.empty()) {
                write_json_file(cfg.out + ".sample.json", to_json(sample));
                write_json_file(cfg.out + ".hull.json", to_json(hull));
            }
            return 0;
        }
        if (cone_cmd->parsed()) {
            Rng rng(cfg.seed);
            ConeSample cs = sample_cone(cfg.d, cfg.n, rng);
            const FVector f = f_vector(section_hull(cs));
            std::cout << "d=" << cs.d << " n=" << cs.n << " section_f=(";
            for (std::size_t i = 0; i < f.size(); ++i)
                std::cout << f[i] << (i + 1 < f.size() ? "," : "");
            std::cout << ")\n";
            if (!cfg.out.empty()) write_json_file(cfg.out + ".cone.json", to_json(cs));
            return 0;
        }
        if (table->parsed()) {
            std::ostringstream out;
            if (family == "facets-poisson") {
                out << "family,d,gamma,value\n";
                for (int d : d_list)
                    for (double g : gamma_list)
                        out << "facets-poisson," << d << ',' << num(g) << ','
                            << num(expected_facets_poisson(d, g)) << '\n';
            } else if (family == "facets-halfsphere") {
                if (n_list.empty()) n_list = {5, 10, 20, 100};
                out << "family,d,n,value\n";
                for (int d : d_list)
                    for (int n : n_list)
                        out << "facets-halfsphere," << d << ',' << n << ','
                            << num(exact_facets_halfsphere(d, n)) << '\n';
            } else if (family == "limit-f") {
                out << "family,d,k,value\n";
                for (int d : d_list) {
                    auto f = limit_f_vector(d);
                    for (std::size_t k = 0; k < f.size(); ++k)
                        out << "limit-f," << d << ',' << k << ','
                            << (f[k] ? num(*f[k]) : std::string("unknown")) << '\n';
                }
            } else if (family == "T") {
                out << "family,d,gamma,c,a,b,value\n";
                for (int d : d_list)
                    for (double g : gamma_list)
                        out << "T," << d << ',' << num(g) << ',' << num(cfg.c) << ','
                            << num(cfg.a) << ',' << num(cfg.b) << ','
                            << num(expected_T(d, g, cfg.c, cfg.a, cfg.b).value) << '\n';
            } else if (family == "volume") {
                out << "family,d,gamma,c,value\n";
                for (int d : d_list)
                    for (double g : gamma_list)
                        out << "volume," << d << ',' << num(g) << ',' << num(cfg.c) << ','
                            << num(expected_volume_poisson(d, g, cfg.c).value) << '\n';
            } else if (family == "intrinsic") {
                out << "family,d,gamma,c,k,value\n";
                for (int d : d_list)
                    for (double g : gamma_list) {
                        std::vector<int> ks = k_list;
                        if (ks.empty())
                            for (int k = 1; k <= d; ++k) ks.push_back(k);
                        for (int k : ks)
                            out << "intrinsic," << d << ',' << num(g) << ',' << num(cfg.c)
                                << ',' << k << ','
                                << num(expected_intrinsic_volume(d, g, cfg.c, k).value) << '\n';
                    }
            } else if (family == "B") {
                out << "family,k,d,value\n";
                for (int d : d_list) {
                    std::vector<int> ks = k_list;
                    if (ks.empty())
                        for (int k = 1; k <= d + 1; ++k) ks.push_back(k);
                    for (int k : ks) {
                        auto b = constant_B(k, d);
                        out << "B," << k << ',' << d << ','
                            << (b ? num(b->value) : std::string("unknown")) << '\n';
                    }
                }
            } else {
                throw ConfigError("unknown table family: " + family);
            }
            std::cout << out.str();
            if (!cfg.out.empty()) {
                std::ofstream f(cfg.out + ".csv");
                if (!f) throw IoError("cannot write " + cfg.out + ".csv");
                f << out.str();
            }
            return 0;
        }
        if (estimate->parsed()) {
            ExperimentConfig merged = cfg;
            if (!config_path.empty()) {
                merged = load_toml_config(config_path);
                // explicit flags win over the file
                auto over = [&](const char* flag, auto member, auto value) {
                    if (estimate->count(flag)) merged.*member = value;
                };
                over("--d", &ExperimentConfig::d, cfg.d);
                over("--gamma", &ExperimentConfig::gamma, cfg.gamma);
                over("--c", &ExperimentConfig::c, cfg.c);
                over("--n", &ExperimentConfig::n, cfg.n);
                over("--a", &ExperimentConfig::a, cfg.a);
                over("--b", &ExperimentConfig::b, cfg.b);
                over("--k", &ExperimentConfig::k, cfg.k);
                over("--replicates", &ExperimentConfig::replicates, cfg.replicates);
                over("--samples", &ExperimentConfig::samples, cfg.samples);
                over("--dirs", &ExperimentConfig::dirs, cfg.dirs);
                over("--seed", &ExperimentConfig::seed, cfg.seed);
                over("--workers", &ExperimentConfig::workers, cfg.workers);
                over("--out", &ExperimentConfig::out, cfg.out);
                over("--format", &ExperimentConfig::format, cfg.format);
                if (estimate->count("--gnuplot")) merged.gnuplot = cfg.gnuplot;
                if (estimate->count("--no-timing")) merged.timing = cfg.timing;
                if (estimate->count("--cache")) merged.cache = cfg.cache;
            }
            if (!kind_name.empty()) merged.kind = kind_from_string(kind_name);
            if (estimate->count("--n-grid")) merged.n_grid = n_grid;
            return run_and_emit(merged);
        }
        if (conic_cmd->parsed()) {
            cfg.kind = ExperimentKind::ConicProfile;
            return run_and_emit(cfg);
        }
        if (buchta_cmd->parsed()) {
            cfg.kind = ExperimentKind::Buchta;
            return run_and_emit(cfg);
        }
        if (verify->parsed()) {
            Report report = verify_all(preset, cfg.seed, cfg.workers, cfg.timing);
            print_report(report);
            if (!cfg.out.empty()) emit_report(report, cfg);
            int pass = 0;
            for (const auto& r : report.rows) pass += r.pass ? 1 : 0;
            std::cerr << "verify " << preset << ": " << pass << "/" << report.rows.size()
                      << " rows pass\n";
            return report.exit_code();
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
