#include "goose/problem.hpp"

#include <stdexcept>

namespace goose {

double Problem::evaluate(const std::vector<double>& x, RandomSource* rng) const {
    if (static_cast<int>(x.size()) != dim)
        throw std::invalid_argument("problem " + id + ": expected dimension " + std::to_string(dim) +
                                    ", got " + std::to_string(x.size()));
    return objective(x, rng);
}

} // namespace goose
