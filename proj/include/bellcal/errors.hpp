#pragma once

#include <stdexcept>
#include <string>

namespace bellcal {

// Error taxonomy for the library. Everything derives from Error so callers
// can catch broadly; the CLI maps these to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct OverlapViolation : Error {
    using Error::Error;
};
struct SolverFailure : Error {
    using Error::Error;
};
struct SingularSystem : Error {
    using Error::Error;
};
struct StationaryNotFound : Error {
    using Error::Error;
};
struct NegativeWeight : Error {
    using Error::Error;
};
struct NonpositiveWeight : Error {
    using Error::Error;
};
struct NonfiniteTarget : Error {
    using Error::Error;
};
struct TruncationTooLoose : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

} // namespace bellcal
