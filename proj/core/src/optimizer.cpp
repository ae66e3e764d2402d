#include "goose/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace goose {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double evaluate_or_inf(const Problem& problem, const std::vector<double>& x, RandomSource& rng) {
    const double f = problem.evaluate(x, &rng);
    return std::isnan(f) ? kInf : f;
}

} // namespace

void GooseParams::validate() const {
    if (n_agents < 1) throw std::invalid_argument("params: n_agents must be >= 1");
    if (max_iters < 1) throw std::invalid_argument("params: max_iters must be >= 1");
    if (!(coe_cap > 0.0 && coe_cap <= 1.0))
        throw std::invalid_argument("params: coe_cap must be in (0, 1]");
    if (!(phase_threshold >= 0.0 && phase_threshold <= 1.0))
        throw std::invalid_argument("params: phase_threshold must be in [0, 1]");
    if (!(stone_min < stone_threshold && stone_threshold < stone_max))
        throw std::invalid_argument("params: need stone_min < stone_threshold < stone_max");
    if (!(stone_min > 0.0)) throw std::invalid_argument("params: stone_min must be positive");
    if (!std::isfinite(gravity) || !std::isfinite(sound_speed))
        throw std::invalid_argument("params: gravity and sound_speed must be finite");
}

std::vector<std::vector<double>> initialize_population(const Bounds& bounds, int n_agents,
                                                       RandomSource& rng) {
    bounds.validate();
    if (n_agents < 1) throw std::invalid_argument("initialize_population: n_agents must be >= 1");
    std::vector<std::vector<double>> positions(n_agents, std::vector<double>(bounds.dim()));
    for (auto& row : positions) {
        for (std::size_t j = 0; j < bounds.dim(); ++j) {
            row[j] = rng.uniform(bounds.lower[j], bounds.upper[j]);
        }
    }
    return positions;
}

IterationDraws draw_iteration_randoms(RandomSource& rng, int dim, const GooseParams& params) {
    if (dim < 1) throw std::invalid_argument("draw_iteration_randoms: dim must be >= 1");
    IterationDraws d;
    d.rnd = rng.uniform01();
    d.pro = rng.uniform01();
    d.coe = std::min(rng.uniform01(), params.coe_cap);
    d.stone_weight = rng.uniform(params.stone_min, params.stone_max);
    // The [1, dim] range collapses at dim = 1; widen by epsilon to keep the
    // draw well-defined.
    const double t_hi = std::max<double>(dim, 1.0 + 1e-6);
    d.t_object.resize(dim);
    d.t_sound.resize(dim);
    for (auto& t : d.t_object) t = rng.uniform(1.0, t_hi);
    for (auto& t : d.t_sound) t = rng.uniform(1.0, t_hi);
    return d;
}

std::pair<double, double> total_and_average_time(const std::vector<double>& t_object,
                                                 const std::vector<double>& t_sound) {
    if (t_object.empty() || t_object.size() != t_sound.size())
        throw std::invalid_argument("total_and_average_time: equal nonzero lengths required");
    double sum = 0.0;
    for (std::size_t j = 0; j < t_object.size(); ++j) sum += t_object[j] + t_sound[j];
    const double total = sum / static_cast<double>(t_object.size());
    return {total, total / 2.0};
}

std::vector<double> falling_speed_heavy(const std::vector<double>& t_object, double stone_weight,
                                        double gravity) {
    const double scale = std::sqrt(stone_weight) * gravity;
    std::vector<double> out(t_object.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = t_object[j] * scale;
    return out;
}

std::vector<double> falling_speed_light(const std::vector<double>& t_object, double stone_weight,
                                        double gravity) {
    const double scale = stone_weight * gravity;
    std::vector<double> out(t_object.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = t_object[j] * scale;
    return out;
}

std::vector<double> sound_travel_distance(const std::vector<double>& t_sound, double sound_speed) {
    std::vector<double> out(t_sound.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = sound_speed * t_sound[j];
    return out;
}

std::vector<double> goose_distance(std::vector<double> sound_dist) {
    for (auto& v : sound_dist) v *= 0.5;
    return sound_dist;
}

std::vector<double> exploit_heavy_update(const std::vector<double>& x,
                                         const std::vector<double>& fall_speed,
                                         const std::vector<double>& dist, double avg_time) {
    if (x.size() != fall_speed.size() || x.size() != dist.size())
        throw std::invalid_argument("exploit_heavy_update: length mismatch");
    const double t2 = avg_time * avg_time;
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = x[j] + fall_speed[j] + dist[j] * t2;
    return out;
}

std::vector<double> exploit_light_update(const std::vector<double>& x,
                                         const std::vector<double>& fall_speed,
                                         const std::vector<double>& dist, double avg_time,
                                         double coe) {
    if (x.size() != fall_speed.size() || x.size() != dist.size())
        throw std::invalid_argument("exploit_light_update: length mismatch");
    const double t2coe = avg_time * avg_time * coe;
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = x[j] + fall_speed[j] * dist[j] * t2coe;
    return out;
}

double alpha_schedule(int loop, int max_iters) {
    if (max_iters < 1) throw std::invalid_argument("alpha_schedule: max_iters must be >= 1");
    if (loop < 0 || loop > max_iters)
        throw std::invalid_argument("alpha_schedule: loop out of [0, max_iters]");
    return 2.0 - static_cast<double>(loop) / (static_cast<double>(max_iters) / 2.0);
}

std::vector<double> explore_update(const std::vector<double>& anchor, double min_total_time,
                                   double alpha, RandomSource& rng, int dim) {
    if (static_cast<int>(anchor.size()) != dim)
        throw std::invalid_argument("explore_update: anchor length != dim");
    if (!std::isfinite(min_total_time))
        throw std::invalid_argument("explore_update: min_total_time must be finite");
    const double scale = min_total_time * alpha;
    std::vector<double> out(anchor.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = rng.normal01() * scale + anchor[j];
    return out;
}

SwarmState make_initial_state(const Problem& problem, const GooseParams& params,
                              RandomSource& rng) {
    params.validate();
    if (static_cast<std::size_t>(problem.dim) != problem.bounds.dim())
        throw std::invalid_argument("problem " + problem.id + ": dim does not match bounds");
    SwarmState state;
    state.positions = initialize_population(problem.bounds, params.n_agents, rng);
    state.fitness.resize(params.n_agents);
    for (int i = 0; i < params.n_agents; ++i) {
        state.fitness[i] = evaluate_or_inf(problem, state.positions[i], rng);
        if (state.fitness[i] < state.best_fitness) {
            state.best_fitness = state.fitness[i];
            state.best_x = state.positions[i];
        }
    }
    if (state.best_x.empty()) state.best_x = state.positions.front(); // all-NaN objective
    return state;
}

StepCounts step(SwarmState& state, const Problem& problem, const GooseParams& params,
                RandomSource& rng) {
    StepCounts counts;
    const int dim = problem.dim;
    for (int i = 0; i < params.n_agents; ++i) {
        const IterationDraws draws = draw_iteration_randoms(rng, dim, params);
        const auto [total_time, avg_time] = total_and_average_time(draws.t_object, draws.t_sound);

        std::vector<double> candidate;
        if (draws.rnd >= params.phase_threshold) {
            const auto dist =
                goose_distance(sound_travel_distance(draws.t_sound, params.sound_speed));
            if (draws.pro > params.pro_threshold && draws.stone_weight >= params.stone_threshold) {
                candidate = exploit_heavy_update(
                    state.positions[i],
                    falling_speed_heavy(draws.t_object, draws.stone_weight, params.gravity), dist,
                    avg_time);
                ++counts.heavy_exploit;
            } else {
                candidate = exploit_light_update(
                    state.positions[i],
                    falling_speed_light(draws.t_object, draws.stone_weight, params.gravity), dist,
                    avg_time, draws.coe);
                ++counts.light_exploit;
            }
        } else {
            state.min_total_time = std::min(state.min_total_time, total_time);
            const double alpha = alpha_schedule(state.loop, params.max_iters);
            const auto& anchor = params.explore_anchor == GooseParams::ExploreAnchor::BestPosition
                                     ? state.best_x
                                     : state.positions[i];
            candidate = explore_update(anchor, state.min_total_time, alpha, rng, dim);
            ++counts.explore;
        }

        candidate = clamp_to_bounds(std::move(candidate), problem.bounds);
        const double f = evaluate_or_inf(problem, candidate, rng);
        state.positions[i] = std::move(candidate);
        state.fitness[i] = f;
        if (f < state.best_fitness) {
            state.best_fitness = f;
            state.best_x = state.positions[i];
        }
    }
    ++state.loop;
    return counts;
}

RunResult optimize(const Problem& problem, const GooseParams& params, std::uint64_t seed,
                   TraceLevel trace_level) {
    Rng rng(seed);
    SwarmState state = make_initial_state(problem, params, rng);

    RunResult result;
    result.seed = seed;
    result.evaluations = params.n_agents;
    result.trace.best_fitness_per_iter.reserve(params.max_iters);

    const bool record_mean = trace_level != TraceLevel::best_only;
    const bool record_full = trace_level == TraceLevel::full_history;
    const bool record_history = record_full && problem.dim <= 3 && params.n_agents <= 20;

    for (int it = 0; it < params.max_iters; ++it) {
        step(state, problem, params, rng);
        result.evaluations += params.n_agents;
        result.trace.best_fitness_per_iter.push_back(state.best_fitness);
        if (record_mean) {
            const double sum = std::accumulate(state.fitness.begin(), state.fitness.end(), 0.0);
            result.trace.mean_fitness_per_iter.push_back(sum / params.n_agents);
        }
        if (record_full) {
            result.trace.trajectory.push_back(state.positions[0][0]);
            if (record_history) result.trace.search_history.push_back(state.positions);
        }
    }

    result.best_x = state.best_x;
    result.best_fitness = state.best_fitness;
    return result;
}

} // namespace goose
