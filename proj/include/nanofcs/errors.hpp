#pragma once

#include <stdexcept>
#include <string>

namespace nanofcs {

// Error taxonomy maps onto CLI exit codes: config 2, physics 3, fit 4, io 5.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct physics_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct fit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nanofcs
