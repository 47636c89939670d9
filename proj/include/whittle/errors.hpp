#pragma once

#include <stdexcept>
#include <string>

namespace whittle {

/// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSimplex : Error {
    using Error::Error;
};
struct NotASimplex : Error {
    using Error::Error;
};
struct NotASubcomplex : Error {
    using Error::Error;
};
struct CompositionMismatch : Error {
    using Error::Error;
};
struct NotAComplex : Error {
    using Error::Error;
};
struct NotAChainMap : Error {
    using Error::Error;
};
struct InvalidLabeling : Error {
    using Error::Error;
};
struct NotACocycle : Error {
    using Error::Error;
};
struct NotConnected : Error {
    using Error::Error;
};
struct NotACover : Error {
    using Error::Error;
};
struct IllegalMove : Error {
    using Error::Error;
};
struct InternalInconsistency : Error {
    using Error::Error;
};

/// The mapping cone of f is not acyclic over Z[Z/n]; carries the first
/// degree with nonvanishing homology as a witness.
struct NotAPiHomologyEquivalence : Error {
    NotAPiHomologyEquivalence(const std::string& msg, int degree)
        : Error(msg), witness_degree(degree)
    {
    }
    int witness_degree;
};

/// Parse failure in one of the text formats; carries the 1-based line.
struct ParseError : Error {
    ParseError(const std::string& msg, int line_arg) : Error(msg), line(line_arg) {}
    int line;
};

} // namespace whittle
