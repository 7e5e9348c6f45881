#pragma once

#include <stdexcept>
#include <string>

namespace selfsim {

// base class for all library errors; parse_error maps to CLI exit code 2,
// every other subclass to exit code 1
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    using error::error;
};

struct composition_error : error {
    using error::error;
};

struct partial_action_error : error {
    using error::error;
};

struct unsupported_error : error {
    using error::error;
};

struct cap_exceeded : error {
    using error::error;
};

struct decomposition_error : error {
    using error::error;
};

struct not_cancellative_error : error {
    using error::error;
};

struct domain_error : error {
    using error::error;
};

struct not_complete_error : error {
    using error::error;
};

struct move_error : error {
    using error::error;
};

struct orthogonality_error : error {
    using error::error;
};

struct associativity_error : error {
    using error::error;
};

struct missing_inverse_error : error {
    using error::error;
};

struct dimension_error : error {
    using error::error;
};

struct validation_error : error {
    using error::error;
};

}  // namespace selfsim
