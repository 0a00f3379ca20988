#pragma once

#include <stdexcept>
#include <string>

namespace membridge {

/// Base class for all simulator errors.
struct SimError : std::runtime_error {
    explicit SimError(const std::string& what) : std::runtime_error(what) {}
};

/// Attempt to schedule an event before the current simulation time.
struct PastTimeError : SimError {
    using SimError::SimError;
};

/// Transaction address range does not resolve to exactly one mapped endpoint.
struct UnmappedAddressError : SimError {
    using SimError::SimError;
};

/// Response flits do not match the transaction's completion rule.
struct ProtocolViolationError : SimError {
    using SimError::SimError;
};

/// Switch port map is not a partial bijection.
struct InvalidMapError : SimError {
    using SimError::SimError;
};

/// A run-aborting contract violation. `contract` names the violated rule
/// (Overflow, NoCircuit, UnknownDestination); the CLI maps these to exit 2.
struct ContractViolation : SimError {
    ContractViolation(std::string contract_name, const std::string& what)
        : SimError(contract_name + ": " + what), contract(std::move(contract_name)) {}
    std::string contract;
};

/// Control-plane operation failures (not run-aborting).
enum class CtrlStatus {
    Ok,
    OutOfMemory,
    OutOfAperture,
    NoPath,
    Busy,
    BadSlot,
};

const char* to_string(CtrlStatus s);

struct ControlError : SimError {
    ControlError(CtrlStatus status_, const std::string& what)
        : SimError(std::string(to_string(status_)) + ": " + what), status(status_) {}
    CtrlStatus status;
};

/// Calibration targets cannot be met by the model.
struct UnreachableTargetError : SimError {
    using SimError::SimError;
};

}  // namespace membridge
