#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "goose/benchmarks.hpp"
#include "goose/optimizer.hpp"

using namespace goose;

namespace {

Problem sphere_problem(int dim, double lo, double hi) {
    Problem p;
    p.id = "sphere";
    p.dim = dim;
    p.bounds = Bounds::uniform(dim, lo, hi);
    p.objective = [](const std::vector<double>& x, RandomSource*) {
        double s = 0.0;
        for (double v : x) s += v * v;
        return s;
    };
    return p;
}

} // namespace

TEST_CASE("bounds validation rejects degenerate boxes") {
    CHECK_THROWS_AS(Bounds({0.0, 0.0}, {0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(Bounds({1.0}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(Bounds({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Bounds({0.0}, {1.0, 2.0}), std::invalid_argument);
    CHECK_NOTHROW(Bounds({-1.0, -1.0}, {1.0, 1.0}));
}

TEST_CASE("clamp projects onto the box") {
    const Bounds box({-1.0, -1.0}, {1.0, 1.0});
    CHECK(clamp_to_bounds({5.0, -5.0}, box) == std::vector<double>{1.0, -1.0});
    const std::vector<double> inside = {0.25, -0.75};
    CHECK(clamp_to_bounds(inside, box) == inside);
}

TEST_CASE("clamp replaces NaN with the box midpoint") {
    const Bounds box({-1.0, 0.0}, {1.0, 4.0});
    const auto out = clamp_to_bounds({std::nan(""), 0.0}, box);
    CHECK(out[0] == 0.0);  // midpoint of [-1, 1]
    CHECK(out[1] == 0.0);
    const auto out2 = clamp_to_bounds({0.5, std::nan("")}, box);
    CHECK(out2[1] == 2.0); // midpoint of [0, 4]
}

TEST_CASE("initialize_population rejects bad input and fills the box") {
    Rng rng(7);
    CHECK_THROWS_AS(initialize_population(Bounds({0.0}, {1.0}), 0, rng), std::invalid_argument);

    const Bounds box = Bounds::uniform(2, -1.0, 1.0);
    const auto pop = initialize_population(box, 1000, rng);
    REQUIRE(pop.size() == 1000);
    double mean0 = 0.0, mean1 = 0.0;
    for (const auto& row : pop) {
        CHECK(box.contains(row));
        mean0 += row[0];
        mean1 += row[1];
    }
    // statistical check with a fixed seed
    CHECK(std::fabs(mean0 / 1000.0) < 0.1);
    CHECK(std::fabs(mean1 / 1000.0) < 0.1);
}

TEST_CASE("initialize_population is deterministic per seed") {
    Rng a(42), b(42);
    const Bounds box = Bounds::uniform(3, -5.0, 5.0);
    CHECK(initialize_population(box, 20, a) == initialize_population(box, 20, b));
}

TEST_CASE("draw order and ranges") {
    GooseParams params;
    SequenceSource src;
    // rnd, pro, coe, stone weight, then t_object and t_sound per dimension
    src.uniforms = {0.9, 0.3, 0.5, 0.25, 0.0, 1.0 - 1e-16, 0.5, 0.5};
    const auto draws = draw_iteration_randoms(src, 2, params);
    CHECK(draws.rnd == 0.9);
    CHECK(draws.pro == 0.3);
    CHECK(draws.coe == 0.17);             // raw 0.5 capped at 0.17
    CHECK(draws.stone_weight == 10.0);    // 5 + 0.25 * 20
    CHECK(draws.t_object[0] == 1.0);
    CHECK(draws.t_object[1] <= 2.0);
    CHECK(draws.t_sound[0] == 1.5);

    SequenceSource below;
    below.uniforms = {0.9, 0.3, 0.05, 0.25, 0.0, 0.0};
    CHECK(draw_iteration_randoms(below, 1, params).coe == 0.05); // below cap, unchanged
}

TEST_CASE("t draws live in [1, dim] and dim=1 collapses to a sliver") {
    GooseParams params;
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        const auto d10 = draw_iteration_randoms(rng, 10, params);
        for (double t : d10.t_object) {
            CHECK(t >= 1.0);
            CHECK(t <= 10.0);
        }
        const auto d1 = draw_iteration_randoms(rng, 1, params);
        CHECK(d1.t_object[0] >= 1.0);
        CHECK(d1.t_object[0] <= 1.0 + 1e-6);
        CHECK(d1.t_sound[0] >= 1.0);
        CHECK(d1.t_sound[0] <= 1.0 + 1e-6);
    }
}

TEST_CASE("time aggregation") {
    auto [tt, ta] = total_and_average_time({2.0, 2.0}, {4.0, 4.0});
    CHECK(tt == 6.0);
    CHECK(ta == 3.0);

    auto [tt1, ta1] = total_and_average_time({1.0, 1.0, 1.0}, {1.0, 1.0, 1.0});
    CHECK(tt1 == 2.0);
    CHECK(ta1 == 1.0);

    auto [tt2, ta2] = total_and_average_time({1.0}, {1.0});
    CHECK(tt2 == 2.0);

    CHECK_THROWS_AS(total_and_average_time({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(total_and_average_time({1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("falling speeds") {
    CHECK(falling_speed_heavy({1.0}, 16.0, 9.81)[0] == doctest::Approx(39.24).epsilon(1e-12));
    const auto heavy = falling_speed_heavy({2.0, 3.0}, 25.0, 9.81);
    CHECK(heavy[0] == doctest::Approx(98.1).epsilon(1e-12));
    CHECK(heavy[1] == doctest::Approx(147.15).epsilon(1e-12));
    CHECK(falling_speed_heavy({0.0, 0.0}, 16.0, 9.81) == std::vector<double>{0.0, 0.0});

    CHECK(falling_speed_light({1.0}, 10.0, 9.81)[0] == doctest::Approx(98.1).epsilon(1e-12));
    CHECK(falling_speed_light({2.0}, 5.0, 9.81)[0] == doctest::Approx(98.1).epsilon(1e-12));
    CHECK(falling_speed_light({0.0}, 10.0, 9.81)[0] == 0.0);
}

TEST_CASE("sound travel and goose distance") {
    CHECK(sound_travel_distance({1.0}, 343.2)[0] == 343.2);
    const auto d = sound_travel_distance({2.0, 0.5}, 343.2);
    CHECK(d[0] == doctest::Approx(686.4).epsilon(1e-12));
    CHECK(d[1] == doctest::Approx(171.6).epsilon(1e-12));
    CHECK(sound_travel_distance({3.0}, 0.0)[0] == 0.0);

    CHECK(goose_distance({343.2})[0] == 171.6);
    CHECK(goose_distance({0.0})[0] == 0.0);
    CHECK(goose_distance({10.0, 20.0}) == std::vector<double>{5.0, 10.0});
}

TEST_CASE("exploitation updates") {
    CHECK(exploit_heavy_update({0.0}, {1.0}, {2.0}, 1.0)[0] == 3.0);
    CHECK(exploit_heavy_update({7.0, -2.0}, {0.0, 0.0}, {0.0, 0.0}, 5.0) ==
          std::vector<double>{7.0, -2.0});
    const auto h = exploit_heavy_update({1.0, 1.0}, {0.0, 0.0}, {1.0, 1.0}, 2.0);
    CHECK(h == std::vector<double>{5.0, 5.0});

    CHECK(exploit_light_update({4.0}, {2.0}, {3.0}, 1.5, 0.0)[0] == 4.0);
    CHECK(exploit_light_update({0.0}, {2.0}, {3.0}, 1.0, 0.17)[0] ==
          doctest::Approx(1.02).epsilon(1e-12));
    CHECK(exploit_light_update({1.0}, {1.0}, {1.0}, 2.0, 0.1)[0] ==
          doctest::Approx(1.4).epsilon(1e-12));
}

TEST_CASE("alpha schedule endpoints are exact") {
    for (int m : {1, 2, 7, 10, 499, 500, 1000}) {
        CHECK(alpha_schedule(0, m) == 2.0);
        CHECK(alpha_schedule(m, m) == 0.0);
    }
    CHECK(alpha_schedule(250, 500) == 1.0);
    CHECK_THROWS_AS(alpha_schedule(-1, 10), std::invalid_argument);
    CHECK_THROWS_AS(alpha_schedule(11, 10), std::invalid_argument);
}

TEST_CASE("explore update scatters around the anchor") {
    const std::vector<double> anchor = {1.0, -2.0, 3.0};
    {
        Rng rng(11);
        CHECK(explore_update(anchor, 5.0, 0.0, rng, 3) == anchor); // alpha = 0
    }
    {
        Rng rng(11);
        CHECK(explore_update(anchor, 0.0, 1.7, rng, 3) == anchor); // m_t = 0
    }
    {
        // replay the seeded generator: first three standard normals
        Rng rng(2024);
        const auto out = explore_update(anchor, 1.0, 1.0, rng, 3);
        Rng replay(2024);
        for (int j = 0; j < 3; ++j) CHECK(out[j] == replay.normal01() + anchor[j]);
    }
    {
        Rng rng(1);
        CHECK_THROWS_AS(
            explore_update(anchor, std::numeric_limits<double>::infinity(), 1.0, rng, 3),
            std::invalid_argument);
    }
}

TEST_CASE("step branch selection is forced by the draws") {
    Problem prob = sphere_problem(2, -1000.0, 1000.0);
    GooseParams params;
    params.n_agents = 1;
    params.max_iters = 10;

    const auto run_one = [&](std::deque<double> uniforms, std::deque<double> normals) {
        Rng init(5);
        SwarmState state = make_initial_state(prob, params, init);
        SequenceSource src;
        src.uniforms = std::move(uniforms);
        src.normals = std::move(normals);
        const StepCounts counts = step(state, prob, params, src);
        return counts;
    };

    // rnd=0.6, pro=0.5, stone 20g (u=0.75) -> heavy branch
    auto heavy = run_one({0.6, 0.5, 0.1, 0.75, 0.5, 0.5, 0.5, 0.5}, {});
    CHECK(heavy.heavy_exploit == 1);
    CHECK(heavy.light_exploit == 0);
    CHECK(heavy.explore == 0);

    // rnd=0.6, pro=0.1, stone 8g (u=0.15) -> light branch
    auto light = run_one({0.6, 0.1, 0.1, 0.15, 0.5, 0.5, 0.5, 0.5}, {});
    CHECK(light.light_exploit == 1);

    // rnd=0.4 -> exploration
    auto expl = run_one({0.4, 0.9, 0.1, 0.75, 0.5, 0.5, 0.5, 0.5}, {0.1, -0.2});
    CHECK(expl.explore == 1);

    // boundary combinations fall into the light branch (plain else)
    auto mixed1 = run_one({0.6, 0.1, 0.1, 0.75, 0.5, 0.5, 0.5, 0.5}, {}); // pro low, stone heavy
    CHECK(mixed1.light_exploit == 1);
    auto mixed2 = run_one({0.6, 0.5, 0.1, 0.15, 0.5, 0.5, 0.5, 0.5}, {}); // pro high, stone light
    CHECK(mixed2.light_exploit == 1);
}

TEST_CASE("exploration updates the running minimum time") {
    Problem prob = sphere_problem(2, -1000.0, 1000.0);
    GooseParams params;
    params.n_agents = 1;
    params.max_iters = 10;
    Rng init(5);
    SwarmState state = make_initial_state(prob, params, init);
    CHECK(state.min_total_time == std::numeric_limits<double>::infinity());

    SequenceSource src;
    // exploration with t_object = t_sound = (1.5, 1.5): T_T = 3
    src.uniforms = {0.4, 0.9, 0.1, 0.75, 0.5, 0.5, 0.5, 0.5};
    src.normals = {0.0, 0.0};
    step(state, prob, params, src);
    CHECK(state.min_total_time == 3.0);

    // larger T_T must not raise it
    src.uniforms = {0.4, 0.9, 0.1, 0.75, 0.9, 0.9, 0.9, 0.9};
    src.normals = {0.0, 0.0};
    step(state, prob, params, src);
    CHECK(state.min_total_time == 3.0);
}

TEST_CASE("branch counters sum to the population every iteration") {
    Problem prob = sphere_problem(3, -10.0, 10.0);
    GooseParams params;
    params.n_agents = 17;
    params.max_iters = 50;
    Rng rng(31);
    SwarmState state = make_initial_state(prob, params, rng);
    for (int it = 0; it < params.max_iters; ++it) {
        const StepCounts counts = step(state, prob, params, rng);
        CHECK(counts.heavy_exploit + counts.light_exploit + counts.explore == params.n_agents);
    }
}

TEST_CASE("NaN objective values never become the best") {
    Problem prob;
    prob.id = "nan_pocket";
    prob.dim = 1;
    prob.bounds = Bounds::uniform(1, -1.0, 1.0);
    prob.objective = [](const std::vector<double>& x, RandomSource*) {
        if (x[0] < 0.0) return std::nan("");
        return x[0];
    };
    GooseParams params;
    params.n_agents = 8;
    params.max_iters = 40;
    const RunResult result = optimize(prob, params, 9);
    CHECK(std::isfinite(result.best_fitness));
    CHECK(result.best_x[0] >= 0.0);
}

TEST_CASE("optimize traces are complete, monotone and deterministic") {
    Problem prob = benchmarks::make_problem("F18");
    GooseParams params;
    params.n_agents = 10;
    params.max_iters = 60;

    const RunResult a = optimize(prob, params, 77, TraceLevel::full_history);
    const RunResult b = optimize(prob, params, 77, TraceLevel::full_history);
    CHECK(a.trace == b.trace);
    CHECK(a.best_x == b.best_x);
    CHECK(a.best_fitness == b.best_fitness);

    REQUIRE(a.trace.best_fitness_per_iter.size() == 60);
    for (std::size_t i = 1; i < 60; ++i)
        CHECK(a.trace.best_fitness_per_iter[i] <= a.trace.best_fitness_per_iter[i - 1]);
    CHECK(a.trace.mean_fitness_per_iter.size() == 60);
    CHECK(a.trace.trajectory.size() == 60);
    CHECK(a.trace.search_history.size() == 60); // dim 2, 10 agents: small enough
    CHECK(a.evaluations == 10 * 61);

    const RunResult c = optimize(prob, params, 78, TraceLevel::full_history);
    CHECK(c.trace.best_fitness_per_iter != a.trace.best_fitness_per_iter);

    const RunResult lean = optimize(prob, params, 77, TraceLevel::best_only);
    CHECK(lean.trace.mean_fitness_per_iter.empty());
    CHECK(lean.trace.trajectory.empty());
    CHECK(lean.best_fitness == a.best_fitness);
}

TEST_CASE("search history is withheld for large populations") {
    Problem prob = sphere_problem(2, -5.0, 5.0);
    GooseParams params;
    params.n_agents = 25; // above the snapshot cap
    params.max_iters = 5;
    const RunResult r = optimize(prob, params, 3, TraceLevel::full_history);
    CHECK(r.trace.search_history.empty());
    CHECK(r.trace.trajectory.size() == 5);
}

TEST_CASE("one-iteration run can only improve on the initial population") {
    Problem prob = sphere_problem(4, -8.0, 8.0);
    GooseParams params;
    params.n_agents = 6;
    params.max_iters = 1;
    Rng rng(55);
    const auto pop = initialize_population(prob.bounds, params.n_agents, rng);
    double init_best = std::numeric_limits<double>::infinity();
    for (const auto& row : pop) init_best = std::min(init_best, prob.evaluate(row));

    const RunResult r = optimize(prob, params, 55);
    CHECK(r.best_fitness <= init_best);
}

TEST_CASE("params validation") {
    GooseParams bad;
    bad.coe_cap = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = {};
    bad.stone_threshold = 30.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = {};
    bad.n_agents = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_NOTHROW(GooseParams{}.validate());
}

TEST_CASE("coe never exceeds the cap") {
    GooseParams params;
    Rng rng(123);
    for (int k = 0; k < 100000; ++k) {
        CHECK(draw_iteration_randoms(rng, 1, params).coe <= params.coe_cap);
    }
}

TEST_CASE("current-position anchor is available for ablation") {
    Problem prob = sphere_problem(2, -50.0, 50.0);
    GooseParams params;
    params.n_agents = 6;
    params.max_iters = 30;
    params.explore_anchor = GooseParams::ExploreAnchor::CurrentPosition;
    const RunResult r = optimize(prob, params, 4);
    CHECK(std::isfinite(r.best_fitness));

    GooseParams base;
    base.n_agents = 6;
    base.max_iters = 30;
    const RunResult rb = optimize(prob, base, 4);
    CHECK(r.trace.best_fitness_per_iter != rb.trace.best_fitness_per_iter);
}
