#pragma once

#include <stdexcept>
#include <string>

namespace d2dsim {

/// Invalid or inconsistent scenario configuration (maps to CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A hard constraint cannot be met, e.g. the energy budget is below the
/// all-1-bit profile (maps to CLI exit code 3).
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The outage-constraint system is numerically singular.
struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A test-scale oracle was asked for an instance beyond its guard.
struct ScaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace d2dsim
