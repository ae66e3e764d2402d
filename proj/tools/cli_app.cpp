#include "cli_app.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "goose/acceptance.hpp"
#include "goose/benchmarks.hpp"
#include "goose/engineering.hpp"
#include "goose/experiment.hpp"

namespace goose::cli {

namespace {

std::string default_out_dir() {
    if (const char* env = std::getenv("GOOSE_OUT_DIR")) return env;
    return "goose-out";
}

std::string format_optimum(const Problem& p) {
    if (!p.known_optimum) return "-";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", *p.known_optimum);
    return buf;
}

int do_list() {
    for (const std::string& id : benchmarks::registered_ids()) {
        const Problem p = benchmarks::make_problem(id);
        std::printf("%-8s dim=%-3d range=[%g, %g]  fmin=%s%s%s\n", p.id.c_str(), p.dim,
                    p.bounds.lower[0], p.bounds.upper[0], format_optimum(p).c_str(),
                    p.note.empty() ? "" : "  ", p.note.c_str());
    }
    for (const char* id : {"eld", "igg", "pressure_vessel", "welded_beam"}) {
        engineering::ConstrainedProblem cp;
        if (std::string(id) == "welded_beam") cp = engineering::welded_beam();
        else if (std::string(id) == "pressure_vessel") cp = engineering::pressure_vessel();
        else if (std::string(id) == "eld") cp = engineering::economic_load_dispatch();
        else cp = engineering::igg_fraction();
        std::printf("%-8s dim=%-3d range=[%g, %g]  fmin=-  constrained (%zu g_i)\n",
                    cp.id.c_str(), cp.dim, cp.bounds.lower[0], cp.bounds.upper[0],
                    cp.constraints.size());
    }
    return 0;
}

void print_report_summary(const experiment::StatReport& report) {
    for (const auto& e : report.entries) {
        std::printf("%-16s runs=%d mean=%.10g std=%.10g best=%.10g", e.problem_id.c_str(), e.runs,
                    e.mean, e.stddev, e.best);
        if (e.best_max_violation) std::printf(" best_max_g=%.3g", *e.best_max_violation);
        if (!e.note.empty()) std::printf(" [%s]", e.note.c_str());
        std::printf("\n");
    }
}

void echo_config(const experiment::ExperimentConfig& cfg) {
    std::printf("# %s: %zu problem(s), runs=%d, agents=%d, iters=%d, seed=%llu, trace=%s\n",
                cfg.name.c_str(), cfg.problems.size(), cfg.runs, cfg.params.n_agents,
                cfg.params.max_iters, static_cast<unsigned long long>(cfg.master_seed),
                experiment::trace_level_name(cfg.trace_level).c_str());
}

int run_and_export(experiment::ExperimentConfig& cfg, const std::string& out_dir) {
    echo_config(cfg);
    const auto result = experiment::run_experiment(cfg);
    print_report_summary(result.report);
    const std::string dir = experiment::export_all(cfg, result, out_dir);
    std::printf("# wrote %s/{summary.json, convergence.csv%s}\n", dir.c_str(),
                cfg.trace_level == TraceLevel::full_history ? ", traces/" : "");
    return 0;
}

int do_run(const CliState& s) {
    experiment::ExperimentConfig cfg;
    cfg.name = s.run_problem;
    cfg.problems.push_back(
        experiment::ProblemSpec::plain(benchmarks::make_problem(s.run_problem)));
    cfg.runs = s.run_runs;
    cfg.params.n_agents = s.run_agents;
    cfg.params.max_iters = s.run_iters;
    cfg.master_seed = s.run_seed;
    cfg.trace_level = experiment::parse_trace_level(s.run_trace);
    cfg.workers = s.workers;
    return run_and_export(cfg, s.out_dir);
}

int do_suite(const CliState& s) {
    experiment::ExperimentConfig cfg;
    const auto suite = benchmarks::parse_suite_id(s.suite_name);
    benchmarks::SuiteOptions options;
    options.cec_data_dir = s.suite_cec_data;
    options.uniform_range_512 = s.suite_uniform_range;
    cfg.name = s.suite_name;
    cfg.suite = s.suite_name;
    for (Problem& p : benchmarks::suite_problems(suite, options))
        cfg.problems.push_back(experiment::ProblemSpec::plain(std::move(p)));
    cfg.runs = s.suite_runs;
    cfg.params.n_agents = s.suite_agents;
    cfg.params.max_iters = s.suite_iters;
    cfg.master_seed = s.suite_seed;
    cfg.trace_level = experiment::parse_trace_level(s.suite_trace);
    cfg.workers = s.workers;
    return run_and_export(cfg, s.out_dir);
}

int do_engineer(const CliState& s) {
    engineering::ConstrainedProblem cp;
    int agents = 30, iters = 500, runs = 30;
    if (s.engineer_problem == "welded_beam") {
        cp = engineering::welded_beam({s.engineer_printed_objective});
        agents = 20; // published run configuration for this problem
    } else if (s.engineer_problem == "pressure_vessel") {
        cp = engineering::pressure_vessel();
    } else if (s.engineer_problem == "eld") {
        cp = s.engineer_config.empty()
                 ? engineering::economic_load_dispatch()
                 : engineering::economic_load_dispatch(
                       engineering::load_eld_config(s.engineer_config));
        iters = 1000;
        runs = 50;
    } else if (s.engineer_problem == "igg") {
        cp = engineering::igg_fraction({s.engineer_igg_dim, s.engineer_igg_bound});
        agents = 12;
        iters = 150;
    } else {
        throw CLI::ValidationError("--problem",
                                   "unknown engineering problem '" + s.engineer_problem +
                                       "'; valid: welded_beam pressure_vessel eld igg");
    }
    if (s.engineer_agents > 0) agents = s.engineer_agents;
    if (s.engineer_iters > 0) iters = s.engineer_iters;
    if (s.engineer_runs > 0) runs = s.engineer_runs;

    experiment::ExperimentConfig cfg;
    cfg.name = s.engineer_problem;
    cfg.problems.push_back(experiment::ProblemSpec::penalized(cp));
    cfg.runs = runs;
    cfg.params.n_agents = agents;
    cfg.params.max_iters = iters;
    cfg.master_seed = s.engineer_seed;
    cfg.workers = s.workers;
    echo_config(cfg);
    const auto result = experiment::run_experiment(cfg);
    print_report_summary(result.report);

    if (s.engineer_problem == "pressure_vessel" && s.engineer_snap) {
        const auto& best = result.report.entries[0].best_x;
        if (const auto snapped = engineering::snap_vessel_thickness(cp, best)) {
            std::printf("snapped design: cost=%.6f (Ts=%g Th=%g R=%g L=%g), max_g=%.3g\n",
                        cp.raw_objective(*snapped), (*snapped)[0], (*snapped)[1], (*snapped)[2],
                        (*snapped)[3], cp.max_violation(*snapped));
        } else {
            std::printf("snapped design: no feasible thickness rounding\n");
        }
    }

    const std::string dir = experiment::export_all(cfg, result, s.out_dir);
    std::printf("# wrote %s/{summary.json, convergence.csv}\n", dir.c_str());
    return 0;
}

int do_compare(const CliState& s) {
    const auto report = experiment::load_report(s.compare_report);
    const auto table = experiment::compare_to_reference(report, s.compare_table);
    std::fputs(experiment::render_comparison(table).c_str(), stdout);
    const auto csv_path =
        std::filesystem::path(s.compare_report).parent_path() / "comparison.csv";
    experiment::export_comparison_csv(table, csv_path.string());
    std::printf("# wrote %s\n", csv_path.string().c_str());
    return 0;
}

int do_selftest(const CliState& s) {
    acceptance::Options options;
    options.workers = s.workers;
    options.verbose = true;
    const auto results = acceptance::run_all(options);
    const int failed = static_cast<int>(std::count_if(
        results.begin(), results.end(), [](const auto& r) { return !r.passed; }));
    std::printf("%zu criteria, %d failed\n", results.size(), failed);
    return failed == 0 ? 0 : 1;
}

} // namespace

std::unique_ptr<CLI::App> make_app(CliState& state) {
    state.out_dir = default_out_dir();

    auto app = std::make_unique<CLI::App>(
        "goose-opt: swarm optimizer with benchmark suites, engineering problems and a "
        "reproducible experiment harness");
    app->require_subcommand(1);
    app->add_option("--workers", state.workers,
                    "parallel runs (0 = number of available processors)");

    state.cmd_list = app->add_subcommand("list", "print every registered problem id");

    CLI::App* run = app->add_subcommand("run", "run one benchmark problem");
    run->add_option("--problem", state.run_problem, "problem id (see `goose list`)")->required();
    run->add_option("--agents", state.run_agents, "search agents");
    run->add_option("--iters", state.run_iters, "iterations per run");
    run->add_option("--runs", state.run_runs, "independent runs");
    run->add_option("--seed", state.run_seed, "master seed");
    run->add_option("--trace", state.run_trace,
                    "trace level: best_only | best_and_mean | full_history");
    run->add_option("--out", state.out_dir, "output directory (env GOOSE_OUT_DIR)");
    state.cmd_run = run;

    CLI::App* suite = app->add_subcommand("suite", "run a full benchmark suite");
    suite->add_option("--suite", state.suite_name,
                      "classical19 | five_classical30 | cec2019")->required();
    suite->add_option("--agents", state.suite_agents, "search agents");
    suite->add_option("--iters", state.suite_iters, "iterations per run");
    suite->add_option("--runs", state.suite_runs, "independent runs");
    suite->add_option("--seed", state.suite_seed, "master seed");
    suite->add_option("--trace", state.suite_trace,
                      "trace level: best_only | best_and_mean | full_history");
    suite->add_option("--cec-data", state.suite_cec_data,
                      "directory with CEC 2019 shift/rotation files");
    suite->add_flag("--uniform-range", state.suite_uniform_range,
                    "five_classical30 replication variant with [-5.12, 5.12] boxes");
    suite->add_option("--out", state.out_dir, "output directory (env GOOSE_OUT_DIR)");
    state.cmd_suite = suite;

    CLI::App* engineer = app->add_subcommand("engineer", "run a constrained design problem");
    engineer->add_option("--problem", state.engineer_problem,
                         "welded_beam | pressure_vessel | eld | igg")->required();
    engineer->add_option("--config", state.engineer_config, "ELD unit/demand JSON file");
    engineer->add_option("--agents", state.engineer_agents, "override preset agents");
    engineer->add_option("--iters", state.engineer_iters, "override preset iterations");
    engineer->add_option("--runs", state.engineer_runs, "override preset runs");
    engineer->add_option("--seed", state.engineer_seed, "master seed");
    engineer->add_flag("--printed-objective", state.engineer_printed_objective,
                       "welded beam: literal cost expression variant");
    engineer->add_flag("--snap", state.engineer_snap,
                       "pressure vessel: also report the stock-thickness rounded design");
    engineer->add_option("--igg-dim", state.engineer_igg_dim, "IgG problem dimension");
    engineer->add_option("--igg-bound", state.engineer_igg_bound, "IgG box half-width");
    engineer->add_option("--out", state.out_dir, "output directory (env GOOSE_OUT_DIR)");
    state.cmd_engineer = engineer;

    CLI::App* compare = app->add_subcommand("compare",
                                            "compare a summary.json against a reference table");
    compare->add_option("--report", state.compare_report, "path to summary.json")->required();
    compare->add_option("--table", state.compare_table, "T2 | T3 | T4 | T15 | T17 | T18")
        ->required();
    state.cmd_compare = compare;

    state.cmd_selftest = app->add_subcommand(
        "selftest", "run the embedded acceptance suite (one pass/fail line per criterion)");

    return app;
}

int dispatch(const CLI::App& app, const CliState& state) {
    if (app.got_subcommand(state.cmd_list)) return do_list();
    if (app.got_subcommand(state.cmd_run)) return do_run(state);
    if (app.got_subcommand(state.cmd_suite)) return do_suite(state);
    if (app.got_subcommand(state.cmd_engineer)) return do_engineer(state);
    if (app.got_subcommand(state.cmd_compare)) return do_compare(state);
    if (app.got_subcommand(state.cmd_selftest)) return do_selftest(state);
    return 1;
}

int run_cli(int argc, const char* const* argv) {
    CliState state;
    auto app = make_app(state);
    try {
        app->parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app->exit(e);
    }
    try {
        return dispatch(*app, state);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

} // namespace goose::cli
