#pragma once

#include <cstdint>
#include <deque>
#include <string>

#include "membridge/bus/types.hpp"
#include "membridge/errors.hpp"

namespace membridge::bridge {

/// FIFO at the boundary between the bus clock domain and a serDES link: the
/// last point where backpressure applies. The upstream mux must not admit a
/// flit while backpressured(); pushing a full buffer is a broken-contract
/// abort, not a drop.
class EdgeBuffer {
  public:
    EdgeBuffer() = default;
    EdgeBuffer(std::string name, std::uint32_t capacity, std::uint32_t threshold)
        : name_(std::move(name)), capacity_(capacity), threshold_(threshold) {}

    bool backpressured() const { return fifo_.size() >= threshold_; }
    bool empty() const { return fifo_.empty(); }
    std::size_t occupancy() const { return fifo_.size(); }
    std::uint32_t capacity() const { return capacity_; }
    std::uint32_t threshold() const { return threshold_; }
    std::size_t max_occupancy() const { return max_occupancy_; }

    void push(const bus::Flit& f) {
        if (fifo_.size() >= capacity_) {
            throw ContractViolation(
                "Overflow", "edge buffer '" + name_ + "' push at occupancy " +
                                std::to_string(fifo_.size()) + " = capacity (backpressure contract broken)");
        }
        fifo_.push_back(f);
        if (fifo_.size() > max_occupancy_) max_occupancy_ = fifo_.size();
    }

    const bus::Flit& front() const { return fifo_.front(); }

    bus::Flit pop() {
        bus::Flit f = fifo_.front();
        fifo_.pop_front();
        return f;
    }

  private:
    std::string name_;
    std::uint32_t capacity_ = 64;
    std::uint32_t threshold_ = 60;
    std::deque<bus::Flit> fifo_;
    std::size_t max_occupancy_ = 0;
};

}  // namespace membridge::bridge
