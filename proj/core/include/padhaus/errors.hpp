#pragma once

#include <stdexcept>
#include <string>

namespace padhaus {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A series was asked for outside its region of convergence.
struct NonconvergentSum : Error {
    using Error::Error;
};

struct ParameterOutOfRange : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct ResourceLimit : Error {
    using Error::Error;
};

struct HypothesisViolated : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace padhaus
