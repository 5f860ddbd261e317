#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace relstate {

/// Identifier recorded in simulation results so outputs can be reproduced
/// by any implementation of the same generator.
inline constexpr const char* kRngAlgorithm = "splitmix64-ctr";

/// splitmix64 finalizer (Steele, Lea & Flood's SplittableRandom mixing
/// constants). Stateless; the full generator is this function applied to
/// key + counter * golden-gamma.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based generator: output i of stream (seed, stream) is
/// splitmix64(key + i * gamma) with key = splitmix64(splitmix64(seed) ^
/// stream). Streams are statistically independent and any output is
/// reachable in O(1), so shots can be sharded arbitrarily without changing
/// the sampled values.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(splitmix64(splitmix64(seed) ^ stream)) {}

    std::uint64_t next_u64() { return splitmix64(key_ + (counter_++) * 0x9e3779b97f4a7c15ULL); }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1]; safe under log().
    double next_double_open() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (two uniforms per call).
    double next_gaussian() {
        const double u = next_double_open();
        const double v = next_double();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Haar-random SU(2) element, row-major 2x2: a Gaussian 4-vector normalized
/// onto the unit quaternion sphere.
inline std::array<std::complex<double>, 4> haar_su2(CounterRng& rng) {
    double q[4];
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (double& c : q) {
            c = rng.next_gaussian();
            norm2 += c * c;
        }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    const std::complex<double> a(q[0] * inv, q[1] * inv);
    const std::complex<double> b(q[2] * inv, q[3] * inv);
    return {a, -std::conj(b), b, std::conj(a)};
}

}  // namespace relstate
