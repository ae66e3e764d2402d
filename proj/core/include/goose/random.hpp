#pragma once

#include <cstdint>
#include <deque>
#include <random>
#include <stdexcept>

namespace goose {

/// Source of randomness consumed by the optimizer. Tests substitute scripted
/// implementations to drive single update steps through prescribed draws.
class RandomSource {
public:
    virtual ~RandomSource() = default;

    /// Uniform draw in [0, 1).
    virtual double uniform01() = 0;

    /// Standard normal draw.
    virtual double normal01() = 0;

    /// Uniform draw in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
};

/// Default generator. The engine is std::mt19937_64 (its output sequence is
/// fixed by the standard); the scalar transforms are implemented here so the
/// stream does not depend on any standard library's distribution internals.
class Rng final : public RandomSource {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() override;
    double normal01() override;

private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

/// Replays queued draws; throws std::out_of_range when a queue is exhausted.
/// Intended for tests and the scripted-randomness equivalence checks.
class SequenceSource final : public RandomSource {
public:
    std::deque<double> uniforms;
    std::deque<double> normals;

    double uniform01() override;
    double normal01() override;
};

/// Seed for run `run_index` of an experiment with the given master seed:
/// the SplitMix64 finalizer applied to
///   master_seed XOR (0x9E3779B97F4A7C15 * (run_index + 1))
/// using wrapping 64-bit arithmetic. Frozen test vectors live in
/// tests/test_random.cpp and in the README so ports can match streams.
std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t run_index);

} // namespace goose
