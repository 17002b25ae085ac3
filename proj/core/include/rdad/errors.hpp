#pragma once

#include <stdexcept>
#include <string>

namespace rdad {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad parameters, malformed configuration. CLI exit code 2.
struct ConfigError : Error {
    using Error::Error;
};

// Unusable input data (missing files, unparseable rows, degenerate clouds). CLI exit code 3.
struct DataError : Error {
    using Error::Error;
};

// A computation hit a value it cannot work with. CLI exit code 4.
struct NumericalError : Error {
    using Error::Error;
};

// d_k(x) = 0: the query coincides with at least k data points, so the
// nearest-neighbor density estimate diverges.
struct DegenerateDistance : NumericalError {
    using NumericalError::NumericalError;
};

// Some point has at least k_den coincident copies, so its k_den-th neighbor
// distance is zero. The caller must deduplicate or jitter.
struct DuplicateOverload : DataError {
    using DataError::DataError;
};

}  // namespace rdad
