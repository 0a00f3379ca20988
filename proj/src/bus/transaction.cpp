#include "membridge/bus/transaction.hpp"

#include <string>

namespace membridge::bus {

std::vector<Flit> decompose_unchecked(const Transaction& txn) {
    std::vector<Flit> out;
    Flit base;
    base.src_node = static_cast<std::uint8_t>(txn.node);
    base.src_master = static_cast<std::uint8_t>(txn.master);
    base.txn_id = txn.id;
    base.burst_len = txn.burst_len;
    base.addr = txn.addr;
    if (txn.kind == TxnKind::Read) {
        Flit f = base;
        f.channel = BusChannel::ReadReq;
        f.payload_bytes = 0;
        f.last = true;
        out.push_back(f);
    } else {
        Flit req = base;
        req.channel = BusChannel::WriteReq;
        req.payload_bytes = 0;
        req.last = false;
        out.push_back(req);
        for (std::uint32_t b = 0; b < txn.burst_len; ++b) {
            Flit d = base;
            d.channel = BusChannel::WriteData;
            d.beat_index = b;
            d.payload_bytes = txn.beat_bytes;
            d.last = (b + 1 == txn.burst_len);
            out.push_back(d);
        }
    }
    return out;
}

std::vector<Flit> decompose(const Transaction& txn, const MemoryMap& map) {
    map.lookup_range(txn.range());  // throws UnmappedAddressError
    return decompose_unchecked(txn);
}

std::vector<Flit> make_response_flits(const Transaction& txn, RouteTag route) {
    std::vector<Flit> out;
    Flit base;
    base.src_node = static_cast<std::uint8_t>(txn.node);
    base.src_master = static_cast<std::uint8_t>(txn.master);
    base.txn_id = txn.id;
    base.burst_len = txn.burst_len;
    base.route = route;
    if (txn.kind == TxnKind::Read) {
        for (std::uint32_t b = 0; b < txn.burst_len; ++b) {
            Flit d = base;
            d.channel = BusChannel::ReadData;
            d.beat_index = b;
            d.payload_bytes = txn.beat_bytes;
            d.last = (b + 1 == txn.burst_len);
            out.push_back(d);
        }
    } else {
        Flit r = base;
        r.channel = BusChannel::WriteResp;
        r.payload_bytes = 0;
        r.last = true;
        out.push_back(r);
    }
    return out;
}

std::optional<CompletionRecord> TxnCompletion::feed(const Flit& f, sim::TimePs now) {
    if (f.txn_id != txn_.id) {
        throw ProtocolViolationError("response flit for foreign txn id " +
                                     std::to_string(f.txn_id) + " fed to txn " +
                                     std::to_string(txn_.id));
    }
    if (txn_.kind == TxnKind::Read) {
        if (f.channel != BusChannel::ReadData) {
            throw ProtocolViolationError("READ txn received " +
                                         std::string(to_string(f.channel)));
        }
        if (++data_beats_ > txn_.burst_len) {
            throw ProtocolViolationError("READ txn " + std::to_string(txn_.id) +
                                         " received more data beats than burst length");
        }
        if (data_beats_ < txn_.burst_len) return std::nullopt;
    } else {
        if (f.channel != BusChannel::WriteResp) {
            throw ProtocolViolationError("WRITE txn received " +
                                         std::string(to_string(f.channel)));
        }
        if (responded_) {
            throw ProtocolViolationError("WRITE txn " + std::to_string(txn_.id) +
                                         " received a second WRITE_RESP");
        }
        responded_ = true;
    }
    CompletionRecord rec;
    rec.txn_id = txn_.id;
    rec.kind = txn_.kind;
    rec.bytes = txn_.total_bytes();
    rec.issue_time = txn_.issue_time;
    rec.complete_time = now;
    return rec;
}

}  // namespace membridge::bus
