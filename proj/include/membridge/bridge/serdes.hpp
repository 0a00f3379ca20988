#pragma once

#include <cstdint>

#include "membridge/sim/time.hpp"

namespace membridge::bridge {

/// Timing parameters of a serial transceiver link. The link is lossless and
/// in-order; there is no acknowledgement or retransmission scheme, and no
/// backpressure past the serDES pipelines.
///
/// A flit occupies the serializer for payload_bytes / payload_rate; the
/// per-flit header costs header_bits / line_rate of latency on top (framing
/// overhead rides the line but does not throttle payload throughput, which
/// is what the usable payload rate expresses). Arrival at the far end is
///   depart + serialization + header_time + fixed_latency.
struct SerdesLinkParams {
    std::uint64_t payload_rate_bytes_per_s = 0;  // 0 = link down
    std::uint64_t line_rate_bits_per_s = 10'000'000'000ull;
    std::uint32_t header_bits = 64;
    sim::TimePs fixed_latency_ps = 0;

    sim::TimePs serialization_time(std::uint64_t payload_bytes) const {
        if (payload_rate_bytes_per_s == 0) return 0;
        using u128 = unsigned __int128;
        return static_cast<sim::TimePs>(
            (u128(payload_bytes) * sim::kPsPerSec + payload_rate_bytes_per_s / 2) /
            payload_rate_bytes_per_s);
    }

    sim::TimePs header_time() const {
        if (line_rate_bits_per_s == 0) return 0;
        using u128 = unsigned __int128;
        return static_cast<sim::TimePs>(
            (u128(header_bits) * sim::kPsPerSec + line_rate_bits_per_s / 2) /
            line_rate_bits_per_s);
    }

    bool down() const { return payload_rate_bytes_per_s == 0; }
};

}  // namespace membridge::bridge
