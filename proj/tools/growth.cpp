#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "growth/errors.hpp"
#include "growth/report.hpp"

namespace {

// "A..B" or a single "A".
std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo < 1 || hi < lo) throw CLI::ValidationError("range", "expected A..B with 1 <= A <= B");
    return {lo, hi};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact codimension, cocharacter and central-polynomial growth computations"};
    app.require_subcommand(1);

    growth::RunConfig cfg;
    bool budget_given = false;
    // The environment variable supplies a default budget override; the flag
    // wins when both are present.
    if (const char* env = std::getenv("GROWTH_BUDGET_GIB")) {
        cfg.budget_gib = std::atof(env);
        budget_given = true;
    }

    std::string n_range, m_range;
    double budget_flag = cfg.budget_gib;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", n_range, "degree range A..B");
        cmd->add_option("--k", cfg.k, "matrix size k")->check(CLI::PositiveNumber);
        cmd->add_option("--format", cfg.format, "json | csv | text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", cfg.out_path, "write the report to this path");
        cmd->add_option("--seed", cfg.seed, "seed for the randomized property checks");
        cmd->add_option("--budget-gib", budget_flag,
                        "memory budget; also unlocks degrees past the defaults")
            ->each([&](const std::string&) { budget_given = true; });
        cmd->add_flag("--slow", cfg.slow, "include the three-alphabet suite");
        cmd->add_flag("--timings", cfg.timings,
                      "add wall-clock fields (reports stop being byte-reproducible)");
    };

    CLI::App* grassmann = app.add_subcommand("grassmann", "Grassmann-algebra suite");
    CLI::App* matrix = app.add_subcommand("matrix", "matrix-algebra suite");
    CLI::App* regev = app.add_subcommand("regev", "alternating central polynomials and gluing");
    CLI::App* growth_cmd = app.add_subcommand("growth", "rectangle dimensions and delta trend");
    for (CLI::App* cmd : {grassmann, matrix, regev, growth_cmd}) add_common(cmd);
    growth_cmd->add_option("--m", m_range, "rectangle width range A..B");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        if (!n_range.empty()) std::tie(cfg.n_lo, cfg.n_hi) = parse_range(n_range);
        if (!m_range.empty()) std::tie(cfg.m_lo, cfg.m_hi) = parse_range(m_range);
        cfg.budget_gib = budget_flag;
        cfg.budget_overridden = budget_given;

        // JSON reports written to a file stream line by line, so a long run
        // keeps its completed records even when interrupted.
        std::ofstream stream_out;
        if (cfg.format == "json" && !cfg.out_path.empty()) {
            stream_out.open(cfg.out_path, std::ios::binary);
            if (!stream_out) throw std::runtime_error("cannot open " + cfg.out_path);
            cfg.line_sink = [&stream_out](const std::string& line) {
                stream_out << line << '\n';
                stream_out.flush();
            };
            growth::Report report = growth::run_command(cfg);
            return report.all_passed() ? 0 : 1;
        }

        growth::Report report = growth::run_command(cfg);
        std::string bytes = growth::write_report(report);
        if (report.config.out_path.empty()) std::cout << bytes;
        return report.all_passed() ? 0 : 1;
    } catch (const growth::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
