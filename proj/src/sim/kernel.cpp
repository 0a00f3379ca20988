#include "membridge/sim/kernel.hpp"

#include <string>
#include <unordered_map>

#include "membridge/errors.hpp"

namespace membridge::sim {

EventHandle EventKernel::schedule(TimePs t, int priority, EventFn fn) {
    if (t < now_) {
        throw PastTimeError("schedule at t=" + std::to_string(t) +
                            " ps before now=" + std::to_string(now_) + " ps");
    }
    const std::uint64_t seq = next_seq_++;
    heap_.push(Entry{t, priority, seq});
    pending_.emplace(seq, std::move(fn));
    ++live_count_;
    ++scheduled_count_;
    return EventHandle{seq};
}

bool EventKernel::cancel(EventHandle h) {
    auto it = pending_.find(h.seq);
    if (it == pending_.end()) return false;
    pending_.erase(it);
    --live_count_;
    return true;
}

bool EventKernel::pop_next(Entry& out, EventFn& fn) {
    while (!heap_.empty()) {
        Entry e = heap_.top();
        auto it = pending_.find(e.seq);
        if (it == pending_.end()) {
            heap_.pop();  // cancelled
            continue;
        }
        out = e;
        fn = std::move(it->second);
        heap_.pop();
        pending_.erase(it);
        --live_count_;
        return true;
    }
    return false;
}

TimePs EventKernel::run_until(TimePs t_end) {
    TimePs last = 0;
    bool any = false;
    stop_requested_ = false;
    while (!heap_.empty() && heap_.top().t <= t_end) {
        Entry e;
        EventFn fn;
        if (!pop_next(e, fn)) break;
        if (e.t > t_end) {
            // pop_next skipped tombstones; e is the real head. Reinsert.
            heap_.push(e);
            pending_.emplace(e.seq, std::move(fn));
            ++live_count_;
            break;
        }
        now_ = e.t;
        ++dispatched_count_;
        fn();
        last = e.t;
        any = true;
        if (stop_requested_) break;
    }
    if (now_ < t_end && !stop_requested_) now_ = t_end;
    return any ? last : 0;
}

TimePs EventKernel::run_all(std::uint64_t limit) {
    TimePs last = 0;
    stop_requested_ = false;
    for (std::uint64_t n = 0; n < limit; ++n) {
        Entry e;
        EventFn fn;
        if (!pop_next(e, fn)) break;
        now_ = e.t;
        ++dispatched_count_;
        fn();
        last = e.t;
        if (stop_requested_) break;
    }
    return last;
}

}  // namespace membridge::sim
