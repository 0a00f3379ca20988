#pragma once

#include <cstdint>
#include <string_view>

namespace membridge::sim {

/// Counter-based pseudo-random generator (splitmix64 over seed + counter).
/// Pure 64-bit integer arithmetic: the same seed produces the same stream on
/// every platform. fork() derives statistically independent substreams so
/// sweeps and per-component draws never share state.
class Rng {
  public:
    Rng() = default;
    explicit Rng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

    std::uint64_t next_u64() {
        std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). Rejection sampling keeps the distribution exact.
    std::uint64_t next_below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~0ull - (~0ull % n + 1) % n;
        std::uint64_t v = next_u64();
        while (v > limit) v = next_u64();
        return v % n;
    }

    std::uint64_t next_range(std::uint64_t lo, std::uint64_t hi_inclusive) {
        return lo + next_below(hi_inclusive - lo + 1);
    }

    /// Uniform double in [0, 1) with 53 significant bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bool(double p_true) { return next_double() < p_true; }

    /// Independent child stream identified by an integer label.
    Rng fork(std::uint64_t label) const {
        Rng child(mix(seed_ ^ mix(label ^ 0xA5A5A5A5A5A5A5A5ull)));
        return child;
    }

    Rng fork(std::string_view label) const {
        std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        return fork(h);
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_ = 0;
    std::uint64_t counter_ = 0;
};

}  // namespace membridge::sim
