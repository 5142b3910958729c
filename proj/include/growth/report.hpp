#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace growth {

struct RunConfig {
    std::string command;           // grassmann | matrix | regev | growth
    int n_lo = 0;
    int n_hi = 0;                  // 0,0 = command default range
    int m_lo = 0;
    int m_hi = 0;                  // growth: rectangle widths
    int k = 2;
    std::string format = "text";   // json | csv | text
    std::string out_path;          // empty = stdout
    std::uint64_t seed = 0;        // drives the randomized property checks
    double budget_gib = 2.0;
    bool budget_overridden = false;  // --budget-gib given explicitly
    bool slow = false;               // include the three-alphabet suite
    bool timings = false;            // adds wall-clock fields (reports stop
                                     // being byte-reproducible)
    // When set, JSON report lines stream here as each record completes, so
    // partial progress survives interruption; bytes match to_json_lines().
    std::function<void(const std::string&)> line_sink;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Deterministic run report.  JSON output is line-delimited: a header line,
/// one line per record as it completes, and a summary line, so partial
/// progress survives interruption.
struct Report {
    RunConfig config;
    std::vector<nlohmann::ordered_json> records;
    std::vector<CheckResult> checks;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    // Filled by run_command; emitted only when config.timings is set, since
    // wall-clock fields break byte-for-byte reproducibility.
    double elapsed_seconds = 0;

    bool all_passed() const;
    int checks_failed() const;

    std::string to_json_lines() const;
    std::string to_csv() const;
    std::string to_text() const;
    std::string render() const;
};

// Estimated peak working-set for the codimension engine, in GiB.
double estimate_gib(const std::string& oracle, int k, int n);

Report run_grassmann(const RunConfig& cfg);
Report run_matrix(const RunConfig& cfg);
Report run_regev(const RunConfig& cfg);
Report run_growth(const RunConfig& cfg);

// Dispatch on cfg.command; unknown commands throw std::invalid_argument.
Report run_command(const RunConfig& cfg);

// Renders and writes to cfg.out_path (or returns via stdout string when the
// path is empty); returns the rendered bytes.
std::string write_report(const Report& report);

}  // namespace growth
