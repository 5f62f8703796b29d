#pragma once

#include <stdexcept>
#include <string>

namespace orthant {

// Base of all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed data handed to the library (wrong sizes, non-integer entries, ...).
struct InvalidInput : Error {
    using Error::Error;
};

// Coxeter matrix entry whose exact geometric realization does not exist over Q.
struct UnsupportedCoxeterMatrix : Error {
    using Error::Error;
};

// Catalog lookup miss.
struct NotFound : Error {
    using Error::Error;
};

// (X, H) is not a lattice basis, or H is not invariant.
struct InvalidBasis : Error {
    using Error::Error;
};

// Internal consistency trap: a structure guaranteed by the theory failed to
// materialize. Impossible on inputs satisfying the documented preconditions.
struct TheoremViolation : Error {
    using Error::Error;
};

// Decomposition requested for a graph with a forbidden component.
struct NotNormalizable : Error {
    using Error::Error;
};

// A group element mapped a lattice point outside the lattice.
struct LatticeViolation : Error {
    using Error::Error;
};

// Operation outside the supported regime (infinite group, unsupported n, ...).
struct Unsupported : Error {
    using Error::Error;
};

}  // namespace orthant
