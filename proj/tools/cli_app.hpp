#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "CLI11.hpp"

namespace goose::cli {

/// Parsed option values of all subcommands; populated by parse, consumed by
/// dispatch so tests can parse without executing.
struct CliState {
    // shared
    std::string out_dir;
    int workers = 0;

    // run
    std::string run_problem;
    int run_agents = 30;
    int run_iters = 500;
    int run_runs = 30;
    std::uint64_t run_seed = 0;
    std::string run_trace = "best_and_mean";

    // suite
    std::string suite_name;
    int suite_agents = 30;
    int suite_iters = 500;
    int suite_runs = 30;
    std::uint64_t suite_seed = 0;
    std::string suite_trace = "best_and_mean";
    std::string suite_cec_data;
    bool suite_uniform_range = false;

    // engineer
    std::string engineer_problem;
    std::string engineer_config;
    int engineer_agents = 0; // 0 -> preset
    int engineer_iters = 0;
    int engineer_runs = 0;
    std::uint64_t engineer_seed = 0;
    bool engineer_printed_objective = false;
    bool engineer_snap = false;
    int engineer_igg_dim = 1;
    double engineer_igg_bound = 400.0;

    // compare
    std::string compare_report;
    std::string compare_table;

    CLI::App* cmd_list = nullptr;
    CLI::App* cmd_run = nullptr;
    CLI::App* cmd_suite = nullptr;
    CLI::App* cmd_engineer = nullptr;
    CLI::App* cmd_compare = nullptr;
    CLI::App* cmd_selftest = nullptr;
};

/// Builds the CLI11 application over `state`. Parsing only records values;
/// use dispatch() to execute the selected subcommand.
std::unique_ptr<CLI::App> make_app(CliState& state);

/// Executes the subcommand selected during parsing; returns the process
/// exit code.
int dispatch(const CLI::App& app, const CliState& state);

/// Parse + dispatch; catches errors and maps them to exit codes.
int run_cli(int argc, const char* const* argv);

} // namespace goose::cli
