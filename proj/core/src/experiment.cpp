#include "goose/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "goose/reference.hpp"

namespace goose::experiment {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

// Acceptance bands pinned for the statistically reproduced problems; mean
// outside the band fails the comparison flag.
std::optional<bool> band_check(const std::string& problem_id, double mean, double best) {
    if (problem_id == "F18") return std::fabs(mean - 3.0) <= 1e-3;
    if (problem_id == "F16") return std::fabs(mean - (-1.0316)) <= 1e-3;
    if (problem_id == "F17") return std::fabs(mean - 0.3979) <= 1e-3;
    if (problem_id == "F19") return std::fabs(mean - (-3.8628)) <= 1e-2;
    if (problem_id == "F1") return mean < 1e-2;
    if (problem_id == "F9") return mean < 0.5;
    if (problem_id == "F11") return mean < 0.1;
    if (problem_id == "welded_beam") return mean >= 2.0 && mean <= 4.5;
    if (problem_id == "pressure_vessel") return best <= 7000.0;
    return std::nullopt;
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    if (config.problems.empty()) throw std::invalid_argument("experiment: no problems configured");
    if (config.runs < 1) throw std::invalid_argument("experiment: runs must be >= 1");
    config.params.validate();

    ExperimentResult result;
    result.runs.resize(config.problems.size());

    const int workers = resolve_workers(config.workers);

    for (std::size_t pi = 0; pi < config.problems.size(); ++pi) {
        const ProblemSpec& spec = config.problems[pi];
        auto& slots = result.runs[pi];
        slots.resize(config.runs);

        std::atomic<int> next{0};
        std::mutex failure_mutex;
        std::optional<std::string> failure;

        auto worker = [&]() {
            for (;;) {
                const int r = next.fetch_add(1);
                if (r >= config.runs) return;
                const std::uint64_t seed = derive_run_seed(config.master_seed, r);
                try {
                    slots[r] = optimize(spec.problem, config.params, seed, config.trace_level);
                } catch (const std::exception& ex) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = "experiment aborted: problem " + spec.problem.id + ", run " +
                                  std::to_string(r) + " (seed " + std::to_string(seed) +
                                  ") failed: " + ex.what();
                    }
                    next.store(config.runs);
                    return;
                }
            }
        };

        std::vector<std::thread> pool;
        const int n_threads = std::min(workers, config.runs);
        pool.reserve(n_threads);
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (failure) throw std::runtime_error(*failure);
    }

    StatReport& report = result.report;
    report.name = config.name;
    report.suite = config.suite;
    report.runs = config.runs;
    report.n_agents = config.params.n_agents;
    report.max_iters = config.params.max_iters;
    report.master_seed = config.master_seed;
    report.trace_level = trace_level_name(config.trace_level);
    report.explore_anchor =
        config.params.explore_anchor == GooseParams::ExploreAnchor::BestPosition
            ? "best_position"
            : "current_position";

    for (std::size_t pi = 0; pi < config.problems.size(); ++pi) {
        const ProblemSpec& spec = config.problems[pi];
        ProblemStats ps;
        ps.problem_id = spec.problem.id;
        ps.dim = spec.problem.dim;
        ps.runs = config.runs;
        ps.note = spec.problem.note;

        std::size_t best_run = 0;
        for (std::size_t r = 0; r < result.runs[pi].size(); ++r) {
            const RunResult& run = result.runs[pi][r];
            if (!std::isfinite(run.best_fitness))
                throw std::runtime_error("experiment: non-finite best fitness on " +
                                         spec.problem.id + " run " + std::to_string(r));
            ps.best_values.push_back(run.best_fitness);
            if (run.best_fitness < result.runs[pi][best_run].best_fitness) best_run = r;
        }
        const stats::Summary summary = stats::summarize(ps.best_values);
        ps.mean = summary.mean;
        ps.stddev = summary.stddev;
        ps.best = *std::min_element(ps.best_values.begin(), ps.best_values.end());
        ps.worst = *std::max_element(ps.best_values.begin(), ps.best_values.end());
        ps.best_x = result.runs[pi][best_run].best_x;

        if (spec.constrained) {
            std::vector<double> violations;
            violations.reserve(result.runs[pi].size());
            for (const RunResult& run : result.runs[pi])
                violations.push_back(spec.constrained->max_violation(run.best_x));
            ps.best_max_violation = violations[best_run];
            ps.per_run_max_violation = std::move(violations);
        }
        report.entries.push_back(std::move(ps));
    }
    return result;
}

std::string trace_level_name(TraceLevel level) {
    switch (level) {
    case TraceLevel::best_only: return "best_only";
    case TraceLevel::best_and_mean: return "best_and_mean";
    case TraceLevel::full_history: return "full_history";
    }
    return "?";
}

TraceLevel parse_trace_level(const std::string& name) {
    if (name == "best_only") return TraceLevel::best_only;
    if (name == "best_and_mean") return TraceLevel::best_and_mean;
    if (name == "full_history") return TraceLevel::full_history;
    throw std::invalid_argument("unknown trace level '" + name +
                                "'; valid: best_only best_and_mean full_history");
}

std::string report_to_json(const StatReport& report) {
    ordered_json doc;
    doc["schema_version"] = report.schema_version;
    doc["name"] = report.name;
    doc["suite"] = report.suite;
    doc["config"] = {{"runs", report.runs},
                     {"n_agents", report.n_agents},
                     {"max_iters", report.max_iters},
                     {"master_seed", report.master_seed},
                     {"trace_level", report.trace_level},
                     {"explore_anchor", report.explore_anchor}};
    doc["problems"] = ordered_json::array();
    for (const ProblemStats& ps : report.entries) {
        ordered_json p;
        p["id"] = ps.problem_id;
        p["dim"] = ps.dim;
        p["runs"] = ps.runs;
        p["mean"] = ps.mean;
        p["stddev"] = ps.stddev;
        p["best"] = ps.best;
        p["worst"] = ps.worst;
        p["best_values"] = ps.best_values;
        p["best_x"] = ps.best_x;
        if (ps.best_max_violation) {
            p["best_max_violation"] = *ps.best_max_violation;
            p["per_run_max_violation"] = *ps.per_run_max_violation;
        }
        if (!ps.note.empty()) p["note"] = ps.note;
        doc["problems"].push_back(std::move(p));
    }
    return doc.dump(2) + "\n";
}

StatReport report_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("invalid report JSON: ") + e.what());
    }
    StatReport report;
    try {
        report.schema_version = doc.at("schema_version").get<int>();
        if (report.schema_version != 1)
            throw std::runtime_error("unsupported report schema_version " +
                                     std::to_string(report.schema_version));
        report.name = doc.at("name").get<std::string>();
        report.suite = doc.value("suite", std::string{});
        const auto& cfg = doc.at("config");
        report.runs = cfg.at("runs").get<int>();
        report.n_agents = cfg.at("n_agents").get<int>();
        report.max_iters = cfg.at("max_iters").get<int>();
        report.master_seed = cfg.at("master_seed").get<std::uint64_t>();
        report.trace_level = cfg.at("trace_level").get<std::string>();
        report.explore_anchor = cfg.at("explore_anchor").get<std::string>();
        for (const auto& p : doc.at("problems")) {
            ProblemStats ps;
            ps.problem_id = p.at("id").get<std::string>();
            ps.dim = p.at("dim").get<int>();
            ps.runs = p.at("runs").get<int>();
            ps.mean = p.at("mean").get<double>();
            ps.stddev = p.at("stddev").get<double>();
            ps.best = p.at("best").get<double>();
            ps.worst = p.at("worst").get<double>();
            ps.best_values = p.at("best_values").get<std::vector<double>>();
            ps.best_x = p.at("best_x").get<std::vector<double>>();
            if (p.contains("best_max_violation")) {
                ps.best_max_violation = p.at("best_max_violation").get<double>();
                ps.per_run_max_violation =
                    p.at("per_run_max_violation").get<std::vector<double>>();
            }
            ps.note = p.value("note", std::string{});
            report.entries.push_back(std::move(ps));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("bad report schema: ") + e.what());
    }
    return report;
}

StatReport load_report(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open report: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return report_from_json(buf.str());
}

void export_convergence_csv(const ExperimentConfig& config, const ExperimentResult& result,
                            const std::string& path) {
    std::ostringstream out;
    const bool with_mean = config.trace_level != TraceLevel::best_only;
    out << "problem,run,iteration,best_fitness";
    if (with_mean) out << ",mean_fitness";
    out << '\n';
    for (std::size_t pi = 0; pi < config.problems.size(); ++pi) {
        const std::string& id = config.problems[pi].problem.id;
        for (std::size_t r = 0; r < result.runs[pi].size(); ++r) {
            const RunTrace& trace = result.runs[pi][r].trace;
            for (std::size_t it = 0; it < trace.best_fitness_per_iter.size(); ++it) {
                out << id << ',' << r << ',' << it << ','
                    << format_double(trace.best_fitness_per_iter[it]);
                if (with_mean) out << ',' << format_double(trace.mean_fitness_per_iter[it]);
                out << '\n';
            }
        }
    }
    write_text_file(path, out.str());
}

namespace {

void export_traces(const ExperimentConfig& config, const ExperimentResult& result,
                   const fs::path& dir) {
    fs::create_directories(dir);
    for (std::size_t pi = 0; pi < config.problems.size(); ++pi) {
        const std::string& id = config.problems[pi].problem.id;
        for (std::size_t r = 0; r < result.runs[pi].size(); ++r) {
            const RunTrace& trace = result.runs[pi][r].trace;
            if (!trace.trajectory.empty()) {
                std::ostringstream out;
                out << "iteration,agent0_coord0\n";
                for (std::size_t it = 0; it < trace.trajectory.size(); ++it)
                    out << it << ',' << format_double(trace.trajectory[it]) << '\n';
                write_text_file((dir / (id + "_run" + std::to_string(r) + "_trajectory.csv"))
                                    .string(),
                                out.str());
            }
            if (!trace.search_history.empty()) {
                std::ostringstream out;
                const std::size_t dim = trace.search_history[0][0].size();
                out << "iteration,agent";
                for (std::size_t j = 0; j < dim; ++j) out << ",x" << j;
                out << '\n';
                for (std::size_t it = 0; it < trace.search_history.size(); ++it) {
                    for (std::size_t a = 0; a < trace.search_history[it].size(); ++a) {
                        out << it << ',' << a;
                        for (double v : trace.search_history[it][a])
                            out << ',' << format_double(v);
                        out << '\n';
                    }
                }
                write_text_file(
                    (dir / (id + "_run" + std::to_string(r) + "_history.csv")).string(),
                    out.str());
            }
        }
    }
}

} // namespace

std::string export_all(const ExperimentConfig& config, const ExperimentResult& result,
                       const std::string& out_dir) {
    const fs::path dir = fs::path(out_dir) / config.name;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " +
                                     ec.message());
    write_text_file((dir / "summary.json").string(), report_to_json(result.report));
    export_convergence_csv(config, result, (dir / "convergence.csv").string());
    if (config.trace_level == TraceLevel::full_history)
        export_traces(config, result, dir / "traces");
    return dir.string();
}

ComparisonTable compare_to_reference(const StatReport& report, const std::string& table_id) {
    const auto entries = reference::table(table_id); // throws on unknown id

    ComparisonTable table;
    table.table_id = table_id;
    bool any_match = false;

    for (const ProblemStats& ps : report.entries) {
        std::vector<reference::ReferenceEntry> matching;
        for (const auto& e : entries) {
            if (e.problem_id == ps.problem_id) matching.push_back(e);
        }
        // T17 keys rows by dispatch component rather than problem id.
        if (matching.empty() && !(table_id == "T17" && ps.problem_id == "eld")) continue;
        any_match = true;

        if (table_id == "T17" && ps.problem_id == "eld") {
            // one comparison row per table row key
            for (const char* key : {"P1", "P2", "P3", "total_power", "cost"}) {
                ComparisonRow row;
                row.problem_id = key;
                if (std::string(key) == "cost") {
                    row.fresh_mean = ps.mean;
                    row.fresh_best = ps.best;
                } else if (std::string(key) == "total_power") {
                    double total = 0.0;
                    for (double v : ps.best_x) total += v;
                    row.fresh_mean = row.fresh_best = total;
                } else {
                    const std::size_t unit = key[1] - '1';
                    row.fresh_mean = row.fresh_best =
                        unit < ps.best_x.size() ? ps.best_x[unit] : 0.0;
                }
                row.fresh_std = 0.0;
                for (const auto& e : entries) {
                    if (e.problem_id != key) continue;
                    if (e.algorithm_id == "GOOSE") {
                        row.paper_mean = e.mean;
                    } else {
                        row.competitors.emplace_back(e.algorithm_id, e.mean);
                    }
                }
                row.band = "n/a";
                table.rows.push_back(std::move(row));
            }
            continue;
        }

        ComparisonRow row;
        row.problem_id = ps.problem_id;
        row.fresh_mean = ps.mean;
        row.fresh_std = ps.stddev;
        row.fresh_best = ps.best;
        for (const auto& e : matching) {
            if (e.algorithm_id == "GOOSE") {
                row.paper_mean = e.mean;
                if (!std::isnan(e.stddev)) row.paper_std = e.stddev;
            } else if (!std::isnan(e.mean)) {
                row.competitors.emplace_back(e.algorithm_id, e.mean);
            }
        }
        row.fresh_rank = 1;
        for (const auto& [alg, mean] : row.competitors) {
            if (mean < row.fresh_mean) ++row.fresh_rank;
        }
        const auto band = band_check(ps.problem_id, ps.mean, ps.best);
        row.band = band ? (*band ? "pass" : "fail") : "n/a";
        table.rows.push_back(std::move(row));
    }

    if (!any_match)
        throw std::invalid_argument("reference table " + table_id +
                                    " covers none of the problems in report '" + report.name +
                                    "'");
    return table;
}

void export_comparison_csv(const ComparisonTable& table, const std::string& path) {
    std::ostringstream out;
    out << "problem,fresh_mean,fresh_std,fresh_best,paper_mean,paper_std,fresh_rank,band,"
           "competitors\n";
    for (const ComparisonRow& row : table.rows) {
        out << row.problem_id << ',' << format_double(row.fresh_mean) << ','
            << format_double(row.fresh_std) << ',' << format_double(row.fresh_best) << ',';
        out << (row.paper_mean ? format_double(*row.paper_mean) : "") << ','
            << (row.paper_std ? format_double(*row.paper_std) : "") << ',';
        out << row.fresh_rank << ',' << row.band << ',';
        out << '"';
        for (std::size_t i = 0; i < row.competitors.size(); ++i) {
            if (i) out << "; ";
            out << row.competitors[i].first << '=' << format_double(row.competitors[i].second);
        }
        out << '"' << '\n';
    }
    write_text_file(path, out.str());
}

std::string render_comparison(const ComparisonTable& table) {
    std::ostringstream out;
    out << "reference table " << table.table_id << '\n';
    char line[256];
    std::snprintf(line, sizeof line, "%-16s %13s %13s %13s %13s %5s %5s\n", "problem",
                  "fresh_mean", "fresh_std", "paper_mean", "paper_std", "rank", "band");
    out << line;
    for (const ComparisonRow& row : table.rows) {
        std::snprintf(line, sizeof line, "%-16s %13.6g %13.6g %13.6g %13.6g %5d %5s\n",
                      row.problem_id.c_str(), row.fresh_mean, row.fresh_std,
                      row.paper_mean.value_or(std::nan("")), row.paper_std.value_or(std::nan("")),
                      row.fresh_rank, row.band.c_str());
        out << line;
    }
    return out.str();
}

std::vector<stats::GroupSpec> classical_groups() {
    return {
        {"unimodal", {"F1", "F2", "F3", "F4", "F5", "F6", "F7"}},
        {"multimodal", {"F8", "F9", "F10", "F11", "F12", "F13"}},
        {"fixed_dimension", {"F14", "F15", "F16", "F17", "F18", "F19"}},
    };
}

} // namespace goose::experiment
