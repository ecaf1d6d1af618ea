#pragma once

#include <stdexcept>
#include <string>

namespace heisenring {

// Error categories map onto the CLI exit codes: invalid input -> 2,
// capacity -> 3, I/O -> 4.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_input_error : error {
    using error::error;
};

struct capacity_error : error {
    using error::error;
};

struct io_error : error {
    using error::error;
};

struct numerical_error : error {
    using error::error;
};

} // namespace heisenring
