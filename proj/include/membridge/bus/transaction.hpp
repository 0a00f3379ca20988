#pragma once

#include <optional>
#include <vector>

#include "membridge/bus/types.hpp"

namespace membridge::bus {

/// Flits produced by decomposing `txn`, in issue order:
///   READ  -> [ReadReq(last)]
///   WRITE -> [WriteReq] + burst_len x WriteData, last flag on the final beat
/// All flits carry the transaction id and source tag. Throws
/// UnmappedAddressError if the transaction range does not lie within exactly
/// one region of `map`.
std::vector<Flit> decompose(const Transaction& txn, const MemoryMap& map);

/// Same decomposition without an address-map check (for buses whose decode
/// already happened).
std::vector<Flit> decompose_unchecked(const Transaction& txn);

/// Response flits a slave emits for a request:
///   READ  -> burst_len x ReadData beats
///   WRITE -> one WriteResp
/// `route` is the return tag (source node/master of the request).
std::vector<Flit> make_response_flits(const Transaction& txn, RouteTag route);

struct CompletionRecord {
    std::uint64_t txn_id = 0;
    TxnKind kind = TxnKind::Read;
    std::uint64_t bytes = 0;
    sim::TimePs issue_time = 0;
    sim::TimePs complete_time = 0;
    sim::TimePs latency() const { return complete_time - issue_time; }
    bool decode_error = false;  // NoRoute surfaced as a bus decode error
};

/// Accumulates response flits for one transaction and closes the loop:
/// READ completes after burst_len ReadData beats, WRITE after one WriteResp.
/// Mismatched counts or a foreign txn id raise ProtocolViolationError.
class TxnCompletion {
  public:
    TxnCompletion() = default;
    explicit TxnCompletion(const Transaction& txn) : txn_(txn) {}

    /// Feed one response flit; returns the completion record when the
    /// transaction finishes.
    std::optional<CompletionRecord> feed(const Flit& f, sim::TimePs now);

    const Transaction& txn() const { return txn_; }

  private:
    Transaction txn_;
    std::uint32_t data_beats_ = 0;
    bool responded_ = false;
};

}  // namespace membridge::bus
