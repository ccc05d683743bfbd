#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "conehull/errors.hpp"
#include "conehull/harness.hpp"
#include "conehull/serialize.hpp"

using namespace conehull;

namespace {

ExperimentConfig quick(ExperimentKind kind) {
    ExperimentConfig cfg;
    cfg.kind = kind;
    cfg.seed = 7;
    cfg.replicates = 120;
    cfg.samples = 400;
    cfg.workers = 2;
    cfg.timing = false;
    return cfg;
}

} // namespace

TEST_CASE("poisson-f experiment produces passing rows with the right oracle") {
    ExperimentConfig cfg = quick(ExperimentKind::PoissonF);
    cfg.d = 2;
    cfg.gamma = 2.0;
    cfg.replicates = 400;
    Report r = run(cfg);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].oracle == 6.0);
    CHECK(r.rows[1].oracle == 6.0);
    CHECK(r.all_pass());
    CHECK(r.exit_code() == 0);
}

TEST_CASE("corrupted oracle fails the run") {
    ExperimentConfig cfg = quick(ExperimentKind::PoissonF);
    cfg.d = 2;
    cfg.gamma = 2.0;
    cfg.oracle_override = 1000.0;
    Report r = run(cfg);
    CHECK(!r.all_pass());
    CHECK(r.exit_code() == 1);
}

TEST_CASE("infinite targets are reported, not asserted") {
    ExperimentConfig cfg = quick(ExperimentKind::PoissonT);
    cfg.d = 2;
    cfg.gamma = 1.0;
    cfg.a = 2.5; // (gamma-b)d + b - a < 0
    Report r = run(cfg);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].oracle_text == "+inf");
    CHECK(r.rows[0].pass);
    CHECK(r.rows[0].flag.find("target_infinite") != std::string::npos);
}

TEST_CASE("csv output is byte-identical across runs and worker counts") {
    ExperimentConfig cfg = quick(ExperimentKind::PoissonT);
    cfg.d = 2;
    cfg.gamma = 2.0;
    cfg.a = 1.0;
    cfg.b = 1.0;
    const std::string once = report_csv(run(cfg));
    const std::string twice = report_csv(run(cfg));
    CHECK(once == twice);
    cfg.workers = 1;
    const std::string serial = report_csv(run(cfg));
    CHECK(once == serial);
}

TEST_CASE("geometry cache round-trips and reproduces the numbers") {
    const std::string cache = "test_cache_hulls.json";
    std::filesystem::remove(cache);
    ExperimentConfig cfg = quick(ExperimentKind::PoissonVolume);
    cfg.d = 2;
    cfg.gamma = 2.0;
    cfg.c = 2.0;
    cfg.cache = cache;
    Report fresh = run(cfg);
    CHECK(std::filesystem::exists(cache));
    Report cached = run(cfg); // second run loads the file
    CHECK(report_csv(fresh) == report_csv(cached));
    ExperimentConfig no_cache = cfg;
    no_cache.cache.clear();
    CHECK(report_csv(run(no_cache)) == report_csv(fresh));
    std::filesystem::remove(cache);
}

TEST_CASE("conic profile experiment emits identity rows") {
    ExperimentConfig cfg = quick(ExperimentKind::ConicProfile);
    cfg.d = 2;
    cfg.n = 8;
    cfg.samples = 3000;
    Report r = run(cfg);
    bool saw_crofton = false, saw_gb = false;
    for (const auto& row : r.rows) {
        if (row.target_id.rfind("crofton", 0) == 0) saw_crofton = true;
        if (row.target_id.rfind("gauss_bonnet", 0) == 0) saw_gb = true;
    }
    CHECK(saw_crofton);
    CHECK(saw_gb);
    CHECK(r.all_pass());
}

TEST_CASE("buchta experiment: exact row in one dimension") {
    ExperimentConfig cfg = quick(ExperimentKind::Buchta);
    cfg.d = 1;
    cfg.n = 10;
    cfg.k = 1;
    cfg.samples = 500;
    Report r = run(cfg);
    bool saw_exact = false;
    for (const auto& row : r.rows)
        if (row.target_id == "buchta_exact") {
            saw_exact = true;
            CHECK(row.pass);
        }
    CHECK(saw_exact);
}

TEST_CASE("config validation") {
    ExperimentConfig cfg = quick(ExperimentKind::Buchta);
    cfg.d = 2;
    cfg.k = 3;
    CHECK_THROWS_AS(run(cfg), ConfigError);
    cfg = quick(ExperimentKind::PoissonF);
    cfg.gamma = -1.0;
    CHECK_THROWS_AS(run(cfg), ConfigError);
    cfg = quick(ExperimentKind::PoissonF);
    cfg.format = "xml";
    CHECK_THROWS_AS(run(cfg), ConfigError);
}

TEST_CASE("toml config loading and overrides") {
    const std::string path = "test_config.toml";
    {
        std::ofstream f(path);
        f << "# experiment manifest\n"
          << "kind = \"poisson-T\"\n"
          << "d = 2\n"
          << "gamma = 2.0\n"
          << "c = 2.0\n"
          << "a = 1.0\n"
          << "b = 1.0\n"
          << "replicates = 50\n"
          << "seed = 99\n"
          << "format = \"json\"\n"
          << "n_grid = [5, 10]\n"
          << "timing = false\n";
    }
    ExperimentConfig cfg = load_toml_config(path);
    CHECK(cfg.kind == ExperimentKind::PoissonT);
    CHECK(cfg.d == 2);
    CHECK(cfg.gamma == 2.0);
    CHECK(cfg.a == 1.0);
    CHECK(cfg.replicates == 50);
    CHECK(cfg.seed == 99);
    CHECK(cfg.format == "json");
    CHECK(cfg.n_grid == std::vector<int>{5, 10});
    CHECK(!cfg.timing);
    std::filesystem::remove(path);

    {
        std::ofstream f(path);
        f << "unknown_key = 3\n";
    }
    CHECK_THROWS_AS(load_toml_config(path), ConfigError);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_toml_config("missing_file.toml"), ConfigError);
}

TEST_CASE("serialization round trips") {
    Rng rng(4);
    auto [sample, hull] = sample_poisson_hull(PoissonParams{3, 1.5, 2.0}, rng);
    Hull h2 = hull_from_json(to_json(hull));
    CHECK(h2.dim == hull.dim);
    CHECK(h2.vertices == hull.vertices);
    CHECK(h2.contains_origin == hull.contains_origin);
    REQUIRE(h2.facets.size() == hull.facets.size());
    for (std::size_t i = 0; i < hull.facets.size(); ++i) {
        CHECK(h2.facets[i].normal == hull.facets[i].normal);
        CHECK(h2.facets[i].offset == hull.facets[i].offset);
        CHECK(h2.facets[i].vertices == hull.facets[i].vertices);
    }
    PoissonSample s2 = poisson_sample_from_json(to_json(sample));
    CHECK(s2.points == sample.points);
    CHECK(s2.r_trunc == sample.r_trunc);
    CHECK(s2.certified == sample.certified);
    ConeSample cs = sample_cone(2, 9, rng);
    ConeSample cs2 = cone_sample_from_json(to_json(cs));
    CHECK(cs2.halfsphere_points == cs.halfsphere_points);
    CHECK(cs2.gnomonic_points == cs.gnomonic_points);
    CHECK_THROWS_AS(hull_from_json(to_json(sample)), IoError); // schema mismatch
}

TEST_CASE("selftest preset with corrupted oracle exits nonzero") {
    Report r = verify_all("selftest-fail", 3, 2, false);
    CHECK(!r.all_pass());
    CHECK(r.exit_code() == 1);
    CHECK(r.rows.size() == verify_manifest("selftest-fail").size());
}

TEST_CASE("csv schema") {
    ExperimentConfig cfg = quick(ExperimentKind::PoissonVolume);
    cfg.d = 2;
    cfg.gamma = 2.0;
    Report r = run(cfg);
    const std::string csv = report_csv(r);
    CHECK(csv.rfind("# schema=conehull.report.v1\n", 0) == 0);
    CHECK(csv.find("target_id,params,mean,stderr,oracle,z_score,pass,flag,replicates,seed,"
                   "wall_time_ms") != std::string::npos);
    const auto j = report_json(r);
    CHECK(j.at("schema") == "conehull.report.v1");
}
