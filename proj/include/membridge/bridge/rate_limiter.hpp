#pragma once

#include <algorithm>
#include <cstdint>

#include "membridge/sim/time.hpp"

namespace membridge::bridge {

struct RateLimiterConfig {
    std::uint64_t rate_bytes_per_s = 0;  // 0 = blocked master
    std::uint64_t depth_bytes = 0;
};

/// Software-controlled token bucket applied at the master port side.
/// Tokens accrue at `rate` up to `depth`; admitting a flit consumes its
/// payload size. Tracks token state in byte-picosecond fixed point so
/// accrual is exact.
class TokenBucket {
  public:
    TokenBucket() = default;
    explicit TokenBucket(RateLimiterConfig cfg)
        : cfg_(cfg), tokens_fp_(to_fp(cfg.depth_bytes)) {}  // starts full

    const RateLimiterConfig& config() const { return cfg_; }

    /// Reconfigure at `now`; bucket state is preserved, clamped to the new
    /// depth.
    void set_config(RateLimiterConfig cfg, sim::TimePs now) {
        accrue(now);
        cfg_ = cfg;
        tokens_fp_ = std::min(tokens_fp_, to_fp(cfg.depth_bytes));
    }

    /// Try to admit a flit of `payload_bytes` at `now`. On success the
    /// tokens are consumed.
    bool try_admit(std::uint64_t payload_bytes, sim::TimePs now) {
        if (cfg_.rate_bytes_per_s == 0) return false;  // blocked
        accrue(now);
        const u128 need = to_fp(payload_bytes);
        if (tokens_fp_ < need) return false;
        tokens_fp_ -= need;
        return true;
    }

    /// Earliest time at which `payload_bytes` tokens will have accrued.
    /// Only meaningful when rate > 0.
    sim::TimePs next_admit_time(std::uint64_t payload_bytes, sim::TimePs now) {
        accrue(now);
        const u128 need = to_fp(payload_bytes);
        if (tokens_fp_ >= need) return now;
        const u128 deficit = need - tokens_fp_;
        const u128 dt = (deficit + cfg_.rate_bytes_per_s - 1) / cfg_.rate_bytes_per_s;
        return now + static_cast<sim::TimePs>(dt);
    }

    double tokens_bytes() const {
        return static_cast<double>(tokens_fp_) / 1e12;
    }

  private:
    using u128 = unsigned __int128;
    static u128 to_fp(std::uint64_t bytes) { return u128(bytes) * sim::kPsPerSec; }

    void accrue(sim::TimePs now) {
        if (now > last_) {
            tokens_fp_ = std::min(tokens_fp_ + u128(now - last_) * cfg_.rate_bytes_per_s,
                                  to_fp(cfg_.depth_bytes));
            last_ = now;
        }
    }

    RateLimiterConfig cfg_;
    u128 tokens_fp_ = 0;
    sim::TimePs last_ = 0;
};

}  // namespace membridge::bridge
