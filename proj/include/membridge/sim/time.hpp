#pragma once

#include <cstdint>
#include <string>

namespace membridge::sim {

/// Simulation time in picoseconds since run start. 64 bits survives
/// > 100 days of simulated time and represents 10 Gb/s bit times and
/// multi-GHz clock periods without floating-point drift.
using TimePs = std::uint64_t;

constexpr TimePs kPsPerNs = 1'000ull;
constexpr TimePs kPsPerUs = 1'000'000ull;
constexpr TimePs kPsPerMs = 1'000'000'000ull;
constexpr TimePs kPsPerSec = 1'000'000'000'000ull;

constexpr double to_ns(TimePs t) { return static_cast<double>(t) / 1e3; }
constexpr double to_us(TimePs t) { return static_cast<double>(t) / 1e6; }
constexpr double to_seconds(TimePs t) { return static_cast<double>(t) / 1e12; }

/// n cycles of a clock at `freq_hz`, rounded to the nearest picosecond.
/// Computed as one wide multiply/divide so boundary times never accumulate
/// per-cycle rounding error.
constexpr TimePs cycles_to_time(std::uint64_t freq_hz, std::uint64_t cycles) {
    using u128 = unsigned __int128;
    return static_cast<TimePs>((u128(cycles) * kPsPerSec + freq_hz / 2) / freq_hz);
}

/// A named clock with integral frequency and a phase offset. Cycle boundary
/// n lies at phase + round(n / freq).
struct ClockDomain {
    std::string name;
    std::uint64_t freq_hz = 0;
    TimePs phase_ps = 0;

    TimePs period_ps() const { return cycles_to_time(freq_hz, 1); }

    TimePs cycle_time(std::uint64_t n) const {
        return phase_ps + cycles_to_time(freq_hz, n);
    }

    /// Smallest cycle index n with cycle_time(n) >= t.
    std::uint64_t cycle_at_or_after(TimePs t) const {
        if (t <= phase_ps) return 0;
        using u128 = unsigned __int128;
        const TimePs d = t - phase_ps;
        auto n = static_cast<std::uint64_t>(u128(d) * freq_hz / kPsPerSec);
        while (cycle_time(n) < t) ++n;
        while (n > 0 && cycle_time(n - 1) >= t) --n;
        return n;
    }
};

}  // namespace membridge::sim
