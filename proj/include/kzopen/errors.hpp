#ifndef KZOPEN_ERRORS_HPP
#define KZOPEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kz {

// Base for all library errors so callers (and the C API) can catch in one place.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejected input (precondition violation, bad value).
struct InvalidArgument : Error {
    using Error::Error;
};

// Config / file parsing problems. `where` carries a field path or line number.
struct ParseError : Error {
    using Error::Error;
};

// Both BdG matrix elements vanish: the Bogoliubov angle is undefined there.
struct DegeneratePoint : Error {
    using Error::Error;
};

// Requested a prediction outside the regime the scaling laws cover.
struct UnsupportedRegime : Error {
    using Error::Error;
};

// Integration failure; carries the ramp coordinate where it happened.
struct SolverError : Error {
    double tau;
    explicit SolverError(const std::string& msg, double tau_at = -1.0)
        : Error(msg), tau(tau_at) {}
};

struct IoError : Error {
    using Error::Error;
};

} // namespace kz

#endif
