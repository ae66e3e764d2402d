#include "goose/random.hpp"

#include <cmath>

namespace goose {

double Rng::uniform01() {
    // 53-bit mantissa in [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal01() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_normal_;
    }
    // Marsaglia polar method; avoids log(0) by rejecting s == 0.
    double v1, v2, s;
    do {
        v1 = 2.0 * uniform01() - 1.0;
        v2 = 2.0 * uniform01() - 1.0;
        s = v1 * v1 + v2 * v2;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    cached_normal_ = v2 * m;
    has_cached_ = true;
    return v1 * m;
}

double SequenceSource::uniform01() {
    if (uniforms.empty()) throw std::out_of_range("SequenceSource: uniform queue exhausted");
    const double v = uniforms.front();
    uniforms.pop_front();
    return v;
}

double SequenceSource::normal01() {
    if (normals.empty()) throw std::out_of_range("SequenceSource: normal queue exhausted");
    const double v = normals.front();
    normals.pop_front();
    return v;
}

std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t run_index) {
    std::uint64_t z = master_seed ^ (0x9E3779B97F4A7C15ULL * (run_index + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace goose
