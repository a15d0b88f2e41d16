#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

namespace pace {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen as the project-wide seeded
/// generator because the state transition and output mix use only 64-bit
/// integer arithmetic, so streams are identical on every platform.
/// Golden vectors are pinned in the test suite.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, n). Modulo bias is below n/2^64 and irrelevant
    /// for the small n used here; kept for bit-exact reproducibility.
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

    /// Uniform double in [0, 1), 53 significant bits.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller on this stream (pairs cached).
    double next_gaussian() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        // u1 in (0, 1] so the log is finite.
        double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
        double u2 = next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 2.0 * std::numbers::pi * u2;
        cached_ = r * std::sin(t);
        have_cached_ = true;
        return r * std::cos(t);
    }

    /// Derive an independent stream for a keyed subtask (per image, per
    /// block, ...) without consuming this stream.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t key) {
        SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL * (key + 1)));
        return g.next();
    }

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

/// FNV-1a, used to key per-image RNG streams off stable string ids.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

} // namespace pace
