#include "goose/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace goose {

Bounds::Bounds(std::vector<double> lo, std::vector<double> up)
    : lower(std::move(lo)), upper(std::move(up)) {
    validate();
}

Bounds Bounds::uniform(std::size_t dim, double lo, double up) {
    return Bounds(std::vector<double>(dim, lo), std::vector<double>(dim, up));
}

bool Bounds::contains(const std::vector<double>& x, double tol) const {
    if (x.size() != dim()) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (std::isnan(x[j]) || x[j] < lower[j] - tol || x[j] > upper[j] + tol) return false;
    }
    return true;
}

void Bounds::validate() const {
    if (lower.empty()) throw std::invalid_argument("bounds: dimension must be >= 1");
    if (lower.size() != upper.size())
        throw std::invalid_argument("bounds: lower/upper length mismatch");
    for (std::size_t j = 0; j < lower.size(); ++j) {
        if (!std::isfinite(lower[j]) || !std::isfinite(upper[j]))
            throw std::invalid_argument("bounds: non-finite bound in dimension " + std::to_string(j));
        if (!(lower[j] < upper[j]))
            throw std::invalid_argument("bounds: lower >= upper in dimension " + std::to_string(j));
    }
}

std::vector<double> clamp_to_bounds(std::vector<double> x, const Bounds& bounds) {
    if (x.size() != bounds.dim())
        throw std::invalid_argument("clamp_to_bounds: dimension mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (std::isnan(x[j])) {
            x[j] = bounds.midpoint(j);
        } else {
            x[j] = std::clamp(x[j], bounds.lower[j], bounds.upper[j]);
        }
    }
    return x;
}

} // namespace goose
