#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "goose/bounds.hpp"
#include "goose/random.hpp"

namespace goose {

/// A minimization problem over a bounded box. Objectives are total on the
/// box and pure; stochastic objectives (the noisy quartic F7) draw their
/// noise from the supplied random source and set `stochastic`.
struct Problem {
    std::string id;
    int dim = 0;
    Bounds bounds;
    std::function<double(const std::vector<double>&, RandomSource*)> objective;
    std::optional<double> known_optimum;
    std::optional<std::vector<double>> optimum_location;
    bool stochastic = false;
    /// Free-form qualifier carried into reports (e.g. marks CEC problems
    /// evaluated with the identity shift/rotation fallback as unofficial).
    std::string note;

    /// Evaluates the objective; throws std::invalid_argument on a dimension
    /// mismatch. `rng` may be null for deterministic objectives.
    double evaluate(const std::vector<double>& x, RandomSource* rng = nullptr) const;
};

} // namespace goose
