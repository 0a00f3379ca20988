#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <unordered_set>
#include <vector>

#include "membridge/sim/time.hpp"

namespace membridge::sim {

/// Event priorities. Events at the same timestamp dispatch in ascending
/// priority, then schedule order. The assignment resolves same-cycle
/// consume-before-produce hazards identically on every run: control-plane
/// commits land before deliveries, deliveries and completions before issuers,
/// and the TDM muxes / link pumps scan last so they observe everything
/// enqueued on their cycle boundary.
enum Priority : int {
    kPrioControl = 0,
    kPrioDeliver = 1,
    kPrioIssue = 2,
    kPrioMux = 3,
    kPrioStats = 4,
};

using EventFn = std::function<void()>;

/// Handle for cancelling a scheduled event before it fires.
struct EventHandle {
    std::uint64_t seq = 0;
    bool valid() const { return seq != 0; }
};

/// Deterministic single-threaded discrete-event kernel. Dispatch order is
/// the total order (fire time, priority, sequence); sequence numbers are
/// unique per run, so replaying a run yields a bit-identical event trace.
class EventKernel {
  public:
    TimePs now() const { return now_; }

    /// Enqueue `fn` at time t. Throws PastTimeError if t < now().
    EventHandle schedule(TimePs t, int priority, EventFn fn);

    EventHandle schedule_now(int priority, EventFn fn) {
        return schedule(now_, priority, std::move(fn));
    }

    /// Cancel a pending event. Returns false if it already fired or was
    /// cancelled. Cancelled events never dispatch.
    bool cancel(EventHandle h);

    /// Dispatch every event with fire time <= t_end in total order, then
    /// advance now() to t_end. Returns the fire time of the last event
    /// dispatched by this call (0 if none).
    TimePs run_until(TimePs t_end);

    /// Dispatch until the queue drains or `limit` events fire.
    TimePs run_all(std::uint64_t limit = ~0ull);

    bool empty() const { return live_count_ == 0; }
    std::uint64_t scheduled_count() const { return scheduled_count_; }
    std::uint64_t dispatched_count() const { return dispatched_count_; }

    /// Ask the current run_until/run_all loop to stop after the current
    /// event returns.
    void request_stop() { stop_requested_ = true; }

  private:
    struct Entry {
        TimePs t;
        int priority;
        std::uint64_t seq;
        bool operator>(const Entry& o) const {
            if (t != o.t) return t > o.t;
            if (priority != o.priority) return priority > o.priority;
            return seq > o.seq;
        }
    };

    bool pop_next(Entry& out, EventFn& fn);

    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap_;
    std::unordered_map<std::uint64_t, EventFn> pending_;
    TimePs now_ = 0;
    std::uint64_t next_seq_ = 1;
    std::uint64_t live_count_ = 0;
    std::uint64_t scheduled_count_ = 0;
    std::uint64_t dispatched_count_ = 0;
    bool stop_requested_ = false;
};

}  // namespace membridge::sim
