#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace conehull {

enum class ExperimentKind {
    PoissonF,
    PoissonT,
    PoissonVolume,
    Intrinsic,
    BConstant,
    ConeLimit,
    ConicProfile,
    Buchta,
    SymmetricT,
    SamplerTests,
};

ExperimentKind kind_from_string(const std::string& s);
std::string to_string(ExperimentKind k);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::PoissonF;
    int d = 2;
    double gamma = 1.0;
    double c = 2.0;
    int n = 20;
    double a = 0.0;
    double b = 0.0;
    int k = 1;
    std::size_t replicates = 1000; // outer replicates
    std::size_t samples = 1000;    // inner samples (B-constant, conic, buchta)
    std::size_t dirs = 8;          // projection directions per replicate
    std::vector<int> n_grid;       // cone-limit grid; default {5,10,20,100}
    std::uint64_t seed = 0;
    int workers = 1;
    std::string out;            // output file base; empty = stdout only
    std::string format = "csv"; // csv | json
    bool gnuplot = false;
    bool timing = true; // false zeroes wall_time_ms for byte-stable output
    std::string cache;  // geometry cache file (hull-valued experiments)
    std::optional<double> oracle_override; // harness self-test fixture

    void validate_for_kind() const; // throws ConfigError
};

struct ReportRow {
    std::string target_id;
    std::string params;
    double mean = 0.0;
    double se = 0.0;
    std::string oracle_text; // printable oracle: number, "unknown", "+inf", ""
    std::optional<double> oracle;
    std::optional<double> z;
    std::string check = "report"; // exact | |z|<=4 | |z|<=3 | p>0.01 | report
    bool pass = true;
    std::string flag;
    std::size_t replicates = 0;
    std::uint64_t seed = 0;
    long long wall_ms = 0;
};

struct Report {
    std::vector<ReportRow> rows;
    bool all_pass() const;
    int exit_code() const { return all_pass() ? 0 : 1; }
};

// Runs one experiment; estimator errors are recorded in their row and never
// abort sibling rows.
Report run(const ExperimentConfig& cfg);

// The acceptance battery. Presets: "fast" (trimmed replicates) and "full"
// (the stated counts); "selftest-fail" is a fixture with a corrupted oracle.
Report verify_all(const std::string& preset, std::uint64_t seed, int workers, bool timing);

// Declared row schedule of a preset; verify_all produces exactly these ids.
std::vector<std::string> verify_manifest(const std::string& preset);

std::string report_csv(const Report& report);
nlohmann::json report_json(const Report& report);
std::string gnuplot_script(const std::string& csv_path);

// Writes csv/json (and optionally a gnuplot script) according to the config.
void emit_report(const Report& report, const ExperimentConfig& cfg);

// Minimal flat TOML: key = value with strings, numbers, booleans and integer
// arrays; '#' comments. Unknown keys are ConfigErrors.
ExperimentConfig load_toml_config(const std::string& path);

} // namespace conehull
