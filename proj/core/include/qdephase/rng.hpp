#pragma once

#include <cstdint>
#include <random>

namespace qdephase {

// Seeded random stream with platform-stable output. The engine is the
// standardized mt19937_64 sequence; value mappings (uniform doubles,
// normal deviates) are implemented here rather than through
// std::*_distribution, whose output is implementation-defined.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    // Independent stream for one ensemble realization: the (seed, index)
    // pair is mixed through splitmix64 so neighbouring indices do not
    // produce correlated mt19937_64 states.
    static RngStream for_realization(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal deviate (Marsaglia polar method).
    double normal();

    // Normal(mean, sd) truncated to [0, inf), by rejection.
    double truncated_normal_nonneg(double mean, double sd);

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

} // namespace qdephase
