#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "goose/bounds.hpp"
#include "goose/problem.hpp"
#include "goose/random.hpp"

namespace goose {

/// Tunable constants of the search. Defaults follow the published setup:
/// 30 agents, 500 iterations, 50/50 phase split, stone weights in
/// [5, 25] grams with a 12 g heavy/light threshold.
struct GooseParams {
    int n_agents = 30;
    int max_iters = 500;
    double coe_cap = 0.17;         ///< cap applied to the raw coe draw
    double phase_threshold = 0.5;  ///< rnd >= threshold -> exploitation, else exploration
    double pro_threshold = 0.2;
    double stone_threshold = 12.0; ///< grams; together with pro selects the heavy branch
    double stone_min = 5.0;        ///< grams
    double stone_max = 25.0;       ///< grams
    double gravity = 9.81;         ///< m/s^2
    double sound_speed = 343.2;    ///< m/s

    /// Where exploration scatters. BestPosition follows the prose reading
    /// (samples around the best-so-far position); CurrentPosition is the
    /// literal update-formula reading, kept for ablation runs.
    enum class ExploreAnchor { BestPosition, CurrentPosition };
    ExploreAnchor explore_anchor = ExploreAnchor::BestPosition;

    void validate() const; ///< throws std::invalid_argument
};

/// Random draws consumed by one agent update.
struct IterationDraws {
    double rnd = 0.0;
    double pro = 0.0;
    double coe = 0.0;          ///< already capped at coe_cap
    double stone_weight = 0.0; ///< grams, in [stone_min, stone_max]
    std::vector<double> t_object; ///< object time of arrival, seconds, elements in [1, dim]
    std::vector<double> t_sound;  ///< sound time of arrival, seconds, elements in [1, dim]
};

enum class TraceLevel { best_only, best_and_mean, full_history };

/// Per-iteration diagnostics of a run.
struct RunTrace {
    std::vector<double> best_fitness_per_iter;            ///< length max_iters, non-increasing
    std::vector<double> mean_fitness_per_iter;            ///< empty at best_only
    std::vector<double> trajectory;                       ///< coord 0 of agent 0; full_history only
    /// Positions of all agents per iteration; recorded at full_history and
    /// only for small runs (dim <= 3, n_agents <= 20) to bound file size.
    std::vector<std::vector<std::vector<double>>> search_history;

    bool operator==(const RunTrace&) const = default;
};

struct SwarmState {
    std::vector<std::vector<double>> positions; ///< n_agents x dim
    std::vector<double> fitness;                ///< n_agents
    std::vector<double> best_x;
    double best_fitness = std::numeric_limits<double>::infinity();
    double min_total_time = std::numeric_limits<double>::infinity(); ///< running minimum of T_T
    int loop = 0; ///< 0-based iteration counter
};

/// How many agents took each branch during one step; the three counts sum
/// to n_agents.
struct StepCounts {
    int heavy_exploit = 0;
    int light_exploit = 0;
    int explore = 0;
};

struct RunResult {
    std::vector<double> best_x;
    double best_fitness = std::numeric_limits<double>::infinity();
    RunTrace trace;
    long long evaluations = 0;
    std::uint64_t seed = 0;
};

/// Uniform sample of the box, one row per agent. Deterministic given the
/// random source; rejects invalid bounds and n_agents < 1.
std::vector<std::vector<double>> initialize_population(const Bounds& bounds, int n_agents,
                                                       RandomSource& rng);

/// Draws rnd, pro, coe (capped), the stone weight and the two per-dimension
/// arrival-time vectors, in that documented order.
IterationDraws draw_iteration_randoms(RandomSource& rng, int dim, const GooseParams& params);

/// Total time averaged over dimensions and its half. Both inputs must have
/// the same nonzero length.
std::pair<double, double> total_and_average_time(const std::vector<double>& t_object,
                                                 const std::vector<double>& t_sound);

/// Falling speed of a heavy stone: t_object[j] * sqrt(stone_weight) * gravity.
std::vector<double> falling_speed_heavy(const std::vector<double>& t_object, double stone_weight,
                                        double gravity);

/// Falling speed of a light stone: t_object[j] * stone_weight * gravity.
std::vector<double> falling_speed_light(const std::vector<double>& t_object, double stone_weight,
                                        double gravity);

/// Distance the alarm sound travels: sound_speed * t_sound[j].
std::vector<double> sound_travel_distance(const std::vector<double>& t_sound, double sound_speed);

/// One-way guard-to-flock distance: half the sound travel distance.
std::vector<double> goose_distance(std::vector<double> sound_dist);

/// Heavy-stone exploitation move: x + fall_speed + dist * avg_time^2.
std::vector<double> exploit_heavy_update(const std::vector<double>& x,
                                         const std::vector<double>& fall_speed,
                                         const std::vector<double>& dist, double avg_time);

/// Light-stone exploitation move: x + fall_speed * dist * avg_time^2 * coe.
std::vector<double> exploit_light_update(const std::vector<double>& x,
                                         const std::vector<double>& fall_speed,
                                         const std::vector<double>& dist, double avg_time,
                                         double coe);

/// Linear decay 2 -> 0 over the run: 2 - loop / (max_iters / 2).
/// Exactly 2 at loop 0 and exactly 0 at loop == max_iters.
double alpha_schedule(int loop, int max_iters);

/// Exploration move: anchor + g * (min_total_time * alpha) with g a vector
/// of dim independent standard-normal draws.
std::vector<double> explore_update(const std::vector<double>& anchor, double min_total_time,
                                   double alpha, RandomSource& rng, int dim);

/// Samples and evaluates the initial population and selects the incumbent
/// best. NaN objective values are treated as +infinity.
SwarmState make_initial_state(const Problem& problem, const GooseParams& params, RandomSource& rng);

/// Advances every agent by one iteration: exploitation (heavy or light
/// stone) when rnd clears the phase threshold, exploration around the
/// anchor otherwise. New positions are clamped to the box, evaluated and
/// unconditionally replace the agent; the global best is updated greedily.
StepCounts step(SwarmState& state, const Problem& problem, const GooseParams& params,
                RandomSource& rng);

/// Full run: initialization followed by max_iters steps. Deterministic for
/// a fixed seed.
RunResult optimize(const Problem& problem, const GooseParams& params, std::uint64_t seed,
                   TraceLevel trace_level = TraceLevel::best_and_mean);

} // namespace goose
