#pragma once

#include <stdexcept>
#include <string>

namespace diamond {

// Error conditions named by the operation contracts. All derive from
// std::runtime_error so callers can catch broadly or by condition.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DepthTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AddressMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LengthMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VariantMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ToleranceNotReached : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AtOrBeyondCritical : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoBlowUpDetected : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace diamond
