#include "qdephase/rng.hpp"

#include <cmath>

namespace qdephase {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RngStream RngStream::for_realization(std::uint64_t seed, std::uint64_t index) {
    return RngStream(splitmix64(splitmix64(seed) ^ (index + 1)));
}

double RngStream::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    have_spare_ = true;
    return u * m;
}

double RngStream::truncated_normal_nonneg(double mean, double sd) {
    if (sd == 0.0) return mean;
    // Acceptance probability is Phi(mean/sd); fine for mean/sd >~ -2.
    // The disorder models used here have mean >= 0, so this never stalls.
    for (;;) {
        const double x = mean + sd * normal();
        if (x >= 0.0) return x;
    }
}

} // namespace qdephase
