#pragma once

#include <cstdint>
#include <random>

namespace semihyper {

/// Seeded uniform generator. Draws are derived from raw mt19937_64 words so
/// that a fixed seed yields the same sequence on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t word() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(word() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(word() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(word() % n); }

private:
    std::mt19937_64 gen_;
};

} // namespace semihyper
