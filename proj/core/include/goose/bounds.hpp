#pragma once

#include <cstddef>
#include <vector>

namespace goose {

/// Axis-aligned search box. Valid bounds satisfy lower[j] < upper[j] for
/// every dimension and hold at least one dimension.
struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;

    Bounds() = default;
    Bounds(std::vector<double> lo, std::vector<double> up);

    /// Box [lo, up]^dim.
    static Bounds uniform(std::size_t dim, double lo, double up);

    std::size_t dim() const { return lower.size(); }
    double width(std::size_t j) const { return upper[j] - lower[j]; }
    double midpoint(std::size_t j) const { return 0.5 * (lower[j] + upper[j]); }

    bool contains(const std::vector<double>& x, double tol = 0.0) const;

    /// Throws std::invalid_argument on empty, mismatched, non-finite or
    /// degenerate (lower >= upper) bounds.
    void validate() const;
};

/// Coordinate-wise projection onto the box. Coordinates already inside are
/// returned unchanged; NaN coordinates are replaced by the box midpoint.
std::vector<double> clamp_to_bounds(std::vector<double> x, const Bounds& bounds);

} // namespace goose
