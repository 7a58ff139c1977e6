#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The linear system is consistent but the solution space has positive
// dimension; distinct from "no integer solution", which is reported by an
// empty optional.
struct NonUniqueSolution : Error {
    using Error::Error;
};

// Assembling a derived object (e.g. a fibration total fan) produced data
// that fails validation.
struct ConstructionError : Error {
    using Error::Error;
};

// A documented precondition of an operation does not hold for the inputs.
struct PreconditionError : Error {
    using Error::Error;
};

// A sign pattern with nonzero homology has an unbounded character region;
// on a valid complete fan this cannot happen.
struct CohomologyError : Error {
    using Error::Error;
};

}  // namespace toric
