#pragma once

#include <stdexcept>
#include <string>

namespace zm {

/// Base class for errors in the mathematical domain (poles, capacity limits,
/// mismatched levels). CLI maps these to exit code 3.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a parameter tuple hits a pole of the defining formula,
/// e.g. (t)_n = 0 for a z-measure at level n.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

/// Raised when a request exceeds a configured enumeration bound.
struct CapacityError : DomainError {
    using DomainError::DomainError;
};

/// Raised when objects from different levels n are combined.
struct LevelMismatchError : DomainError {
    using DomainError::DomainError;
};

/// Raised on malformed exact-string input ("3/2", "1+2i", pair lists...).
/// CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Signals an internal inconsistency (e.g. hook-length division not exact).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace zm
