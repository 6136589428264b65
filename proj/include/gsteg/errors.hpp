#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gsteg {

// Invalid run configuration (bad K/n/dim/key/flag values). CLI exit code 5.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameters that cannot support the requested grouping: the expected group
// occupancy is too low, or a sampled group actually came up short.
struct InfeasibleError : ConfigError {
    InfeasibleError(const std::string& msg, uint32_t group)
        : ConfigError(msg), deficient_group(group) {}
    uint32_t deficient_group;
};

// Message does not fit the arrangement capacity. CLI exit code 2.
struct CapacityError : std::runtime_error {
    CapacityError(size_t message, size_t capacity)
        : std::runtime_error("message of " + std::to_string(message) +
                             " bits exceeds payload capacity of " +
                             std::to_string(capacity) + " bits"),
          message_bits(message),
          payload_capacity_bits(capacity) {}
    size_t message_bits;
    size_t payload_capacity_bits;
};

// Malformed input file: bad magic, truncated payload, size mismatch.
// CLI exit code 4.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Recovered data is inconsistent beyond repair. CLI exit code 3.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gsteg
