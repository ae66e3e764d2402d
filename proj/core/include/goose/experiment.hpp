#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goose/engineering.hpp"
#include "goose/optimizer.hpp"
#include "goose/problem.hpp"
#include "goose/stats.hpp"

namespace goose::experiment {

/// A problem to run, optionally paired with its constrained form so reports
/// can carry feasibility metrics.
struct ProblemSpec {
    Problem problem;
    std::optional<engineering::ConstrainedProblem> constrained;

    static ProblemSpec plain(Problem p) { return {std::move(p), std::nullopt}; }
    static ProblemSpec penalized(const engineering::ConstrainedProblem& cp) {
        return {engineering::penalize(cp), cp};
    }
};

struct ExperimentConfig {
    std::string name = "experiment";
    std::string suite;  ///< echo only; empty for ad-hoc problem lists
    std::vector<ProblemSpec> problems;
    int runs = 30;
    GooseParams params;
    std::uint64_t master_seed = 0;
    TraceLevel trace_level = TraceLevel::best_and_mean;
    int workers = 0; ///< 0 -> hardware concurrency
};

/// Aggregated statistics of one problem. Violation fields are present only
/// for constrained problems and always included there, even when zero.
struct ProblemStats {
    std::string problem_id;
    int dim = 0;
    int runs = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double best = 0.0;
    double worst = 0.0;
    std::vector<double> best_values; ///< per-run best fitness, run order
    std::vector<double> best_x;      ///< design of the best run
    std::optional<double> best_max_violation;
    std::optional<std::vector<double>> per_run_max_violation;
    std::string note;

    bool operator==(const ProblemStats&) const = default;
};

struct StatReport {
    int schema_version = 1;
    std::string name;
    std::string suite;
    int runs = 0;
    int n_agents = 0;
    int max_iters = 0;
    std::uint64_t master_seed = 0;
    std::string trace_level;
    std::string explore_anchor;
    std::vector<ProblemStats> entries;

    bool operator==(const StatReport&) const = default;
};

struct ExperimentResult {
    std::vector<std::vector<RunResult>> runs; ///< [problem][run]
    StatReport report;
};

/// Executes runs x problems, in parallel over runs, deterministically:
/// run i uses derive_run_seed(master_seed, i) regardless of scheduling.
/// Any failing run aborts with the problem, run index and seed identified.
ExperimentResult run_experiment(const ExperimentConfig& config);

std::string trace_level_name(TraceLevel level);
TraceLevel parse_trace_level(const std::string& name);

/// JSON (de)serialization of reports. Serialization is byte-deterministic;
/// parse(dump(r)) == r.
std::string report_to_json(const StatReport& report);
StatReport report_from_json(const std::string& text);
StatReport load_report(const std::string& path);

/// Writes <out_dir>/<config.name>/{summary.json, convergence.csv} plus
/// traces/ at full_history. Returns the experiment directory.
std::string export_all(const ExperimentConfig& config, const ExperimentResult& result,
                       const std::string& out_dir);

/// Long-format convergence curves: problem,run,iteration,best_fitness and,
/// above best_only trace level, mean_fitness.
void export_convergence_csv(const ExperimentConfig& config, const ExperimentResult& result,
                            const std::string& path);

struct ComparisonRow {
    std::string problem_id;
    double fresh_mean = 0.0;
    double fresh_std = 0.0;
    double fresh_best = 0.0;
    std::optional<double> paper_mean;
    std::optional<double> paper_std;
    std::vector<std::pair<std::string, double>> competitors; ///< algorithm, printed mean
    int fresh_rank = 0;   ///< rank of the fresh mean among the printed competitors
    std::string band;     ///< "pass" | "fail" | "n/a"
};

struct ComparisonTable {
    std::string table_id;
    std::vector<ComparisonRow> rows;
};

/// Compares a fresh report against an embedded reference table. The band
/// column applies the pinned acceptance bands where one exists for the
/// problem, and "n/a" elsewhere.
ComparisonTable compare_to_reference(const StatReport& report, const std::string& table_id);

void export_comparison_csv(const ComparisonTable& table, const std::string& path);
std::string render_comparison(const ComparisonTable& table);

/// The three classical function groups used for grouped rank averages.
std::vector<stats::GroupSpec> classical_groups();

} // namespace goose::experiment
