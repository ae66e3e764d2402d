#include "goose/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <sstream>

#include "goose/benchmarks.hpp"
#include "goose/engineering.hpp"
#include "goose/experiment.hpp"
#include "goose/optimizer.hpp"
#include "goose/reference.hpp"
#include "goose/stats.hpp"

namespace goose::acceptance {

namespace {

using experiment::ExperimentConfig;
using experiment::ProblemSpec;

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

stats::Summary run_benchmark(const std::string& id, const Options& opt, int agents, int iters,
                             int runs, std::vector<double>* values = nullptr,
                             ExperimentConfig* config_out = nullptr) {
    ExperimentConfig cfg;
    cfg.name = id;
    cfg.problems.push_back(ProblemSpec::plain(benchmarks::make_problem(id)));
    cfg.runs = runs;
    cfg.params.n_agents = agents;
    cfg.params.max_iters = iters;
    cfg.master_seed = opt.master_seed;
    cfg.trace_level = TraceLevel::best_only;
    cfg.workers = opt.workers;
    const auto result = experiment::run_experiment(cfg);
    if (values) *values = result.report.entries[0].best_values;
    if (config_out) *config_out = cfg;
    return {result.report.entries[0].mean, result.report.entries[0].stddev};
}

experiment::StatReport run_engineering(const engineering::ConstrainedProblem& cp,
                                       const Options& opt, int agents, int iters, int runs) {
    ExperimentConfig cfg;
    cfg.name = cp.id;
    cfg.problems.push_back(ProblemSpec::penalized(cp));
    cfg.runs = runs;
    cfg.params.n_agents = agents;
    cfg.params.max_iters = iters;
    cfg.master_seed = opt.master_seed;
    cfg.trace_level = TraceLevel::best_only;
    cfg.workers = opt.workers;
    return experiment::run_experiment(cfg).report;
}

// -------- statistical reproduction criteria --------

CriterionResult goldstein_price_band(const Options& opt) {
    const auto s = run_benchmark("F18", opt, 30, 500, 30);
    CriterionResult r{1, "F18 Goldstein-Price: mean within 1e-3 of 3, std <= 1e-3", false, ""};
    r.passed = std::fabs(s.mean - 3.0) <= 1e-3 && s.stddev <= 1e-3;
    r.detail = fmt("mean=%.8g std=%.3g", s.mean, s.stddev);
    return r;
}

CriterionResult fixed_dimension_bands(const Options& opt) {
    const auto f16 = run_benchmark("F16", opt, 30, 500, 30);
    const auto f17 = run_benchmark("F17", opt, 30, 500, 30);
    const auto f19 = run_benchmark("F19", opt, 30, 500, 30);
    CriterionResult r{2, "F16/F17/F19: means within 1e-3/1e-3/1e-2 of -1.0316/0.3979/-3.8628",
                      false, ""};
    const bool ok16 = std::fabs(f16.mean - (-1.0316)) <= 1e-3;
    const bool ok17 = std::fabs(f17.mean - 0.3979) <= 1e-3;
    const bool ok19 = std::fabs(f19.mean - (-3.8628)) <= 1e-2;
    r.passed = ok16 && ok17 && ok19;
    r.detail = fmt("F16=%.6g F17=%.6g F19=%.6g", f16.mean, f17.mean, f19.mean);
    return r;
}

CriterionResult sphere_band(const Options& opt) {
    const auto s = run_benchmark("F1", opt, 30, 500, 30);
    CriterionResult r{3, "F1 sphere (dim 10): mean best < 1e-2", false, fmt("mean=%.6g", s.mean)};
    r.passed = s.mean < 1e-2;
    return r;
}

CriterionResult rastrigin_band(const Options& opt) {
    const auto s = run_benchmark("F9", opt, 30, 500, 30);
    CriterionResult r{4, "F9 Rastrigin (dim 10): mean best < 0.5", false, fmt("mean=%.6g", s.mean)};
    r.passed = s.mean < 0.5;
    return r;
}

CriterionResult griewank_band(const Options& opt) {
    const auto s = run_benchmark("F11", opt, 30, 500, 30);
    CriterionResult r{5, "F11 Griewank (dim 10): mean best < 0.1", false, fmt("mean=%.6g", s.mean)};
    r.passed = s.mean < 0.1;
    return r;
}

CriterionResult welded_beam_band(const Options& opt) {
    const auto report = run_engineering(engineering::welded_beam(), opt, 20, 500, 30);
    const auto& entry = report.entries[0];
    double worst_violation = 0.0;
    for (double v : *entry.per_run_max_violation) worst_violation = std::max(worst_violation, v);
    CriterionResult r{6, "welded beam: mean penalized best in [2.0, 4.5], best designs feasible",
                      false, ""};
    r.passed = entry.mean >= 2.0 && entry.mean <= 4.5 && worst_violation <= 1e-6;
    r.detail = fmt("mean=%.6g std=%.3g worst_max_g=%.3g", entry.mean, entry.stddev,
                   worst_violation);
    return r;
}

CriterionResult pressure_vessel_band(const Options& opt) {
    const auto cp = engineering::pressure_vessel();
    const auto report = run_engineering(cp, opt, 30, 500, 30);
    const auto& entry = report.entries[0];
    const bool best_ok = entry.best <= 7000.0 && *entry.best_max_violation <= 1e-6;
    const std::vector<double> literature = {0.8125, 0.4375, 42.0984, 176.6366};
    const double lit_cost = cp.raw_objective(literature);
    const bool lit_ok = std::fabs(lit_cost - 6059.71) <= 0.5;
    CriterionResult r{7, "pressure vessel: best-of-runs <= 7000 feasible; literature design "
                         "costs 6059.71 +- 0.5",
                      false, ""};
    r.passed = best_ok && lit_ok;
    r.detail = fmt("best=%.6g best_max_g=%.3g literature_cost=%.6f", entry.best,
                   *entry.best_max_violation, lit_cost);
    return r;
}

CriterionResult eld_balance(const Options& opt) {
    const auto cfg = engineering::default_eld_config();
    const auto cp = engineering::economic_load_dispatch(cfg);
    ExperimentConfig xc;
    xc.name = "eld";
    xc.problems.push_back(ProblemSpec::penalized(cp));
    xc.runs = 50;
    xc.params.n_agents = 30;
    xc.params.max_iters = 1000;
    xc.master_seed = opt.master_seed;
    xc.trace_level = TraceLevel::best_only;
    xc.workers = opt.workers;
    const auto result = experiment::run_experiment(xc);
    double worst_dev = 0.0;
    bool limits_ok = true;
    for (const auto& runs : result.runs) {
        for (const auto& run : runs) {
            double total = 0.0;
            for (double p : run.best_x) total += p;
            worst_dev = std::max(worst_dev, std::fabs(total - cfg.demand));
            limits_ok = limits_ok && cp.bounds.contains(run.best_x);
        }
    }
    CriterionResult r{8, "ELD (50 runs, 1000 iters): |sum(P) - 150| <= 1e-3 MW, unit limits hold",
                      false, ""};
    r.passed = worst_dev <= 1e-3 && limits_ok;
    r.detail = fmt("worst_balance_dev=%.3g MW limits_ok=%d mean_cost=%.6g", worst_dev,
                   limits_ok ? 1 : 0, result.report.entries[0].mean);
    return r;
}

CriterionResult igg_band(const Options& opt) {
    const auto report = run_engineering(engineering::igg_fraction(), opt, 12, 150, 30);
    const auto& entry = report.entries[0];
    CriterionResult r{9, "IgG preset (12 agents, 150 iters): best |Y| <= 0.05", false,
                      fmt("best=%.6g", entry.best)};
    r.passed = entry.best <= 0.05;
    return r;
}

// -------- property suites --------

struct CaseShape {
    int dim;
    int agents;
    int iters;
    Problem problem;
    std::uint64_t seed;
};

CaseShape random_case(Rng& meta) {
    CaseShape c;
    c.dim = 1 + static_cast<int>(meta.uniform01() * 5);
    c.agents = 2 + static_cast<int>(meta.uniform01() * 7);
    c.iters = 3 + static_cast<int>(meta.uniform01() * 13);
    std::vector<double> lo(c.dim), hi(c.dim), center(c.dim);
    for (int j = 0; j < c.dim; ++j) {
        lo[j] = meta.uniform(-20.0, 0.0);
        hi[j] = lo[j] + meta.uniform(0.5, 25.0);
        center[j] = meta.uniform(lo[j], hi[j]);
    }
    c.problem.id = "shifted_sphere";
    c.problem.dim = c.dim;
    c.problem.bounds = Bounds(lo, hi);
    c.problem.objective = [center](const std::vector<double>& x, RandomSource*) {
        double s = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) s += (x[j] - center[j]) * (x[j] - center[j]);
        return s;
    };
    c.seed = static_cast<std::uint64_t>(meta.uniform01() * 9e18);
    return c;
}

CriterionResult property_suites(const Options&) {
    constexpr int kCases = 1000;
    int bounds_fail = 0, monotone_fail = 0, determinism_fail = 0;

    {
        Rng meta(101);
        for (int k = 0; k < kCases; ++k) {
            CaseShape c = random_case(meta);
            GooseParams params;
            params.n_agents = c.agents;
            params.max_iters = c.iters;
            Rng rng(c.seed);
            SwarmState state = make_initial_state(c.problem, params, rng);
            bool ok = true;
            for (int it = 0; it < c.iters && ok; ++it) {
                step(state, c.problem, params, rng);
                for (const auto& row : state.positions) ok = ok && c.problem.bounds.contains(row);
            }
            if (!ok) ++bounds_fail;
        }
    }
    {
        Rng meta(202);
        for (int k = 0; k < kCases; ++k) {
            CaseShape c = random_case(meta);
            GooseParams params;
            params.n_agents = c.agents;
            params.max_iters = c.iters;
            const RunResult run = optimize(c.problem, params, c.seed, TraceLevel::best_only);
            bool ok = run.trace.best_fitness_per_iter.size() ==
                      static_cast<std::size_t>(c.iters);
            for (std::size_t i = 1; i < run.trace.best_fitness_per_iter.size(); ++i) {
                ok = ok && run.trace.best_fitness_per_iter[i] <=
                               run.trace.best_fitness_per_iter[i - 1];
            }
            if (!ok) ++monotone_fail;
        }
    }
    {
        Rng meta(303);
        for (int k = 0; k < kCases; ++k) {
            CaseShape c = random_case(meta);
            GooseParams params;
            params.n_agents = c.agents;
            params.max_iters = c.iters;
            const RunResult a = optimize(c.problem, params, c.seed, TraceLevel::full_history);
            const RunResult b = optimize(c.problem, params, c.seed, TraceLevel::full_history);
            const bool ok = a.best_x == b.best_x && a.best_fitness == b.best_fitness &&
                            a.trace == b.trace && a.evaluations == b.evaluations;
            if (!ok) ++determinism_fail;
        }
    }

    CriterionResult r{10, "properties: bounds invariance, monotone best, determinism (1000 "
                          "cases each)",
                      false, ""};
    r.passed = bounds_fail == 0 && monotone_fail == 0 && determinism_fail == 0;
    r.detail = fmt("failures: bounds=%d monotone=%d determinism=%d", bounds_fail, monotone_fail,
                   determinism_fail);
    return r;
}

// Scripted-randomness equivalence of step() against straight-line formula
// recomputation (independent of the operation helpers).
CriterionResult scripted_step_equivalence(const Options&) {
    constexpr int kScenarios = 100;
    Rng meta(404);
    int failures = 0;
    double worst_rel = 0.0;

    for (int k = 0; k < kScenarios; ++k) {
        const int dim = 1 + static_cast<int>(meta.uniform01() * 6);
        const int agents = 1 + static_cast<int>(meta.uniform01() * 3);
        GooseParams params;
        params.n_agents = agents;
        params.max_iters = 20 + static_cast<int>(meta.uniform01() * 480);

        Problem prob;
        prob.id = "wide_sphere";
        prob.dim = dim;
        prob.bounds = Bounds::uniform(dim, -1e9, 1e9);
        prob.objective = [](const std::vector<double>& x, RandomSource*) {
            double s = 0.0;
            for (double v : x) s += v * v;
            return s;
        };

        SwarmState state;
        state.loop = static_cast<int>(meta.uniform01() * params.max_iters);
        state.positions.resize(agents, std::vector<double>(dim));
        state.fitness.resize(agents);
        for (auto& row : state.positions)
            for (auto& v : row) v = meta.uniform(-100.0, 100.0);
        for (int i = 0; i < agents; ++i) state.fitness[i] = prob.evaluate(state.positions[i]);
        state.best_fitness = state.fitness[0];
        state.best_x = state.positions[0];
        for (int i = 1; i < agents; ++i) {
            if (state.fitness[i] < state.best_fitness) {
                state.best_fitness = state.fitness[i];
                state.best_x = state.positions[i];
            }
        }
        state.min_total_time = meta.uniform01() < 0.5
                                   ? std::numeric_limits<double>::infinity()
                                   : meta.uniform(2.0, 2.0 * dim);

        // script the draws and predict each agent's new position
        SequenceSource scripted;
        std::vector<std::vector<double>> expected(agents, std::vector<double>(dim));
        double expected_mt = state.min_total_time;
        std::vector<double> running_best = state.best_x;
        double running_best_f = state.best_fitness;
        const double t_hi = std::max<double>(dim, 1.0 + 1e-6);

        for (int i = 0; i < agents; ++i) {
            const int branch = static_cast<int>(meta.uniform01() * 3); // 0 heavy 1 light 2 explore
            const double rnd_u = branch == 2 ? meta.uniform(0.0, 0.499) : meta.uniform(0.5, 0.999);
            const double pro_u = branch == 0 ? meta.uniform(0.21, 0.999) : meta.uniform(0.0, 0.2);
            const double coe_u = meta.uniform01();
            // stone weight: heavy branch needs >= 12g -> u >= 0.35
            const double sw_u = branch == 0 ? meta.uniform(0.36, 0.999) : meta.uniform(0.0, 0.34);
            scripted.uniforms.insert(scripted.uniforms.end(), {rnd_u, pro_u, coe_u, sw_u});
            std::vector<double> t_obj(dim), t_snd(dim);
            for (int j = 0; j < dim; ++j) {
                const double u = meta.uniform01();
                scripted.uniforms.push_back(u);
                t_obj[j] = 1.0 + (t_hi - 1.0) * u;
            }
            for (int j = 0; j < dim; ++j) {
                const double u = meta.uniform01();
                scripted.uniforms.push_back(u);
                t_snd[j] = 1.0 + (t_hi - 1.0) * u;
            }

            double tt_sum = 0.0;
            for (int j = 0; j < dim; ++j) tt_sum += t_obj[j] + t_snd[j];
            const double tt = tt_sum / dim;
            const double ta = tt / 2.0;
            const double sw = 5.0 + (25.0 - 5.0) * sw_u;
            const double coe = std::min(coe_u, 0.17);

            if (branch == 2) {
                expected_mt = std::min(expected_mt, tt);
                const double alpha =
                    2.0 - static_cast<double>(state.loop) / (params.max_iters / 2.0);
                for (int j = 0; j < dim; ++j) {
                    const double g = meta.uniform(-3.0, 3.0);
                    scripted.normals.push_back(g);
                    expected[i][j] = g * (expected_mt * alpha) + running_best[j];
                }
            } else if (branch == 0) {
                for (int j = 0; j < dim; ++j) {
                    expected[i][j] = state.positions[i][j] + t_obj[j] * std::sqrt(sw) * 9.81 +
                                     0.5 * (343.2 * t_snd[j]) * (ta * ta);
                }
            } else {
                for (int j = 0; j < dim; ++j) {
                    expected[i][j] = state.positions[i][j] + (t_obj[j] * sw * 9.81) *
                                                                 (0.5 * (343.2 * t_snd[j])) *
                                                                 (ta * ta) * coe;
                }
            }
            double f = 0.0;
            for (int j = 0; j < dim; ++j) f += expected[i][j] * expected[i][j];
            if (f < running_best_f) {
                running_best_f = f;
                running_best = expected[i];
            }
        }

        step(state, prob, params, scripted);

        bool ok = true;
        for (int i = 0; i < agents && ok; ++i) {
            for (int j = 0; j < dim && ok; ++j) {
                const double got = state.positions[i][j];
                const double want = expected[i][j];
                const double rel =
                    std::fabs(got - want) / std::max({1.0, std::fabs(got), std::fabs(want)});
                worst_rel = std::max(worst_rel, rel);
                ok = rel <= 1e-12;
            }
        }
        if (!ok) ++failures;
    }

    CriterionResult r{11, "scripted randomness: step matches straight-line update formulas "
                          "(100 scenarios, 1e-12)",
                      false, fmt("failures=%d worst_rel=%.3g", failures, worst_rel)};
    r.passed = failures == 0;
    return r;
}

CriterionResult benchmark_consistency(const Options&) {
    int optimum_fail = 0, symmetry_fail = 0, neighborhood_fail = 0;
    std::string first_fail;

    for (const std::string& id : benchmarks::registered_ids()) {
        const Problem p = benchmarks::make_problem(id);
        if (!p.optimum_location || !p.known_optimum) continue;
        const double tol = id.rfind("CEC", 0) == 0 ? 1e-6 : 1e-9;
        const double got = p.evaluate(*p.optimum_location);
        if (std::fabs(got - *p.known_optimum) > tol) {
            ++optimum_fail;
            if (first_fail.empty()) first_fail = id + fmt(" optimum got=%.12g", got);
        }
    }

    for (const char* id : {"F1", "F9", "F10", "F11"}) {
        const Problem p = benchmarks::make_problem(id);
        Rng rng(505);
        for (int k = 0; k < 100; ++k) {
            std::vector<double> x(p.dim), nx(p.dim);
            for (int j = 0; j < p.dim; ++j) {
                x[j] = rng.uniform(p.bounds.lower[j], p.bounds.upper[j]);
                nx[j] = -x[j];
            }
            if (std::fabs(p.evaluate(x) - p.evaluate(nx)) > 1e-12) {
                ++symmetry_fail;
                break;
            }
        }
    }

    for (const char* id : {"F1", "F2", "F3", "F4", "F5", "F6", "F9", "F10", "F11", "F12", "F13",
                           "F16", "F17", "F18", "F19"}) {
        const Problem p = benchmarks::make_problem(id);
        Rng rng(606);
        for (int k = 0; k < 1000; ++k) {
            std::vector<double> x(p.dim);
            for (int j = 0; j < p.dim; ++j) x[j] = rng.uniform(p.bounds.lower[j], p.bounds.upper[j]);
            if (p.evaluate(x) < *p.known_optimum - 1e-9) {
                ++neighborhood_fail;
                if (first_fail.empty()) first_fail = std::string(id) + " below optimum";
                break;
            }
        }
    }

    CriterionResult r{12, "benchmarks: optimum consistency, symmetry, neighborhood optimality",
                      false, ""};
    r.passed = optimum_fail == 0 && symmetry_fail == 0 && neighborhood_fail == 0;
    r.detail = fmt("failures: optimum=%d symmetry=%d neighborhood=%d %s", optimum_fail,
                   symmetry_fail, neighborhood_fail, first_fail.c_str());
    return r;
}

// Independent enumeration oracle over all two-group assignments.
double brute_force_wilcoxon_p(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> pooled = a;
    pooled.insert(pooled.end(), b.begin(), b.end());
    const int n = static_cast<int>(pooled.size());
    const int n1 = static_cast<int>(a.size());

    // midranks, computed locally
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return pooled[i] < pooled[j]; });
    std::vector<double> rank(n);
    for (int i = 0; i < n;) {
        int j = i;
        while (j + 1 < n && pooled[idx[j + 1]] == pooled[idx[i]]) ++j;
        const double shared = 0.5 * ((i + 1) + (j + 1));
        for (int k = i; k <= j; ++k) rank[idx[k]] = shared;
        i = j + 1;
    }
    double w_obs = 0.0;
    for (int i = 0; i < n1; ++i) w_obs += rank[i];

    long long below = 0, above = 0, total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != n1) continue;
        double w = 0.0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) w += rank[i];
        }
        ++total;
        if (w <= w_obs + 1e-12) ++below;
        if (w >= w_obs - 1e-12) ++above;
    }
    const double p = 2.0 * std::min(static_cast<double>(below) / total,
                                    static_cast<double>(above) / total);
    return std::min(1.0, p);
}

CriterionResult wilcoxon_oracle(const Options&) {
    Rng meta(707);
    int mismatches = 0;
    double worst = 0.0;
    for (int n1 = 1; n1 <= 9; ++n1) {
        for (int n2 = 1; n1 + n2 <= 10; ++n2) {
            for (int rep = 0; rep < 20; ++rep) {
                std::vector<double> a(n1), b(n2);
                const bool with_ties = rep % 2 == 0;
                for (auto& v : a)
                    v = with_ties ? std::floor(meta.uniform(0.0, 5.0)) : meta.uniform01();
                for (auto& v : b)
                    v = with_ties ? std::floor(meta.uniform(0.0, 5.0)) : meta.uniform01();
                const auto res = stats::wilcoxon_rank_sum(a, b);
                const double oracle = brute_force_wilcoxon_p(a, b);
                const double diff = std::fabs(res.p_value - oracle);
                worst = std::max(worst, diff);
                if (diff > 1e-12 || res.method != stats::WilcoxonMethod::exact) ++mismatches;
            }
        }
    }
    const auto canonical = stats::wilcoxon_rank_sum({1, 2, 3}, {4, 5, 6});
    const bool canonical_ok = std::fabs(canonical.p_value - 0.1) <= 1e-12;

    CriterionResult r{13, "Wilcoxon exact matches brute-force oracle (n1+n2 <= 10); "
                          "(1,2,3)v(4,5,6) -> p=0.1",
                      false, ""};
    r.passed = mismatches == 0 && canonical_ok;
    r.detail = fmt("mismatches=%d worst_diff=%.3g canonical_p=%.12g", mismatches, worst,
                   canonical.p_value);
    return r;
}

CriterionResult rank_arithmetic(const Options&) {
    std::vector<stats::MeanEntry> means;
    for (const auto& e : reference::table("T2")) {
        means.push_back({e.problem_id, e.algorithm_id, e.mean});
    }
    const auto table = stats::rank_by_mean(means, experiment::classical_groups());

    const double overall = table.overall_average.at("GOOSE");
    const int firsts = table.first_place_count("GOOSE");
    const int total = table.total_rank.at("GOOSE");
    const int unimodal = table.group_total.at("unimodal").at("GOOSE");
    const int multimodal = table.group_total.at("multimodal").at("GOOSE");
    const int fixed = table.group_total.at("fixed_dimension").at("GOOSE");

    CriterionResult r{14, "rank table reproduces published arithmetic: 41/19=2.158, 8 firsts, "
                          "groups 22/7, 12/6, 7/6",
                      false, ""};
    r.passed = std::fabs(overall - 2.158) <= 1e-3 && firsts == 8 && total == 41 &&
               unimodal == 22 && multimodal == 12 && fixed == 7;
    r.detail = fmt("overall=%.6g total=%d firsts=%d groups=%d/%d/%d", overall, total, firsts,
                   unimodal, multimodal, fixed);
    return r;
}

CriterionResult schedule_and_cap(const Options&) {
    bool alpha_ok = true;
    for (int m : {1, 2, 7, 500, 999, 1000}) {
        alpha_ok = alpha_ok && alpha_schedule(0, m) == 2.0 && alpha_schedule(m, m) == 0.0;
    }
    Rng rng(808);
    GooseParams params;
    double worst_coe = 0.0;
    for (int k = 0; k < 1000000; ++k) {
        const auto draws = draw_iteration_randoms(rng, 1, params);
        worst_coe = std::max(worst_coe, draws.coe);
    }
    CriterionResult r{15, "alpha endpoints exact (2 at 0, 0 at max); coe <= 0.17 over 1e6 draws",
                      false, fmt("alpha_ok=%d max_coe=%.17g", alpha_ok ? 1 : 0, worst_coe)};
    r.passed = alpha_ok && worst_coe <= 0.17;
    return r;
}

} // namespace

std::vector<CriterionResult> run_all(const Options& options) {
    using Fn = std::function<CriterionResult(const Options&)>;
    const std::vector<Fn> criteria = {
        goldstein_price_band, fixed_dimension_bands, sphere_band, rastrigin_band, griewank_band,
        welded_beam_band,     pressure_vessel_band,  eld_balance, igg_band,       property_suites,
        scripted_step_equivalence, benchmark_consistency, wilcoxon_oracle, rank_arithmetic,
        schedule_and_cap,
    };
    std::vector<CriterionResult> results;
    results.reserve(criteria.size());
    for (const Fn& fn : criteria) {
        results.push_back(fn(options));
        if (options.verbose) std::printf("%s\n", format_line(results.back()).c_str());
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

std::string format_line(const CriterionResult& result) {
    std::ostringstream out;
    out << (result.passed ? "PASS" : "FAIL") << "  [" << result.id << "] " << result.name;
    if (!result.detail.empty()) out << "  (" << result.detail << ")";
    return out.str();
}

} // namespace goose::acceptance
