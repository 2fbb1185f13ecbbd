#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace skewlab {

/// SplitMix64 (Vigna). Fixed, portable 64-bit generator: the whole state is
/// one word, so per-sample streams are cheap and replayable.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    /// Stream for sample `index` of a run seeded with `seed`.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(seed ^ index);
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (two uniforms per pair, spare cached).
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        // Avoid log(0).
        double r = std::sqrt(-2.0 * std::log1p(-u1));
        double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    std::complex<double> complex_gaussian() {
        double re = gaussian();
        double im = gaussian();
        return {re, im};
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace skewlab
