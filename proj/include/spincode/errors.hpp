#pragma once

#include <stdexcept>
#include <string>

namespace spincode {

/// Dense-path request exceeds the configured memory/size guard.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A gate leaks amplitude out of the codespace.
struct NotTransversalError : std::runtime_error {
    explicit NotTransversalError(const std::string& what) : std::runtime_error(what) {}
};

/// A sub-threshold search minimum failed independent verification; this
/// signals a bug, not a search failure.
struct InconsistencyError : std::logic_error {
    explicit InconsistencyError(const std::string& what) : std::logic_error(what) {}
};

} // namespace spincode
