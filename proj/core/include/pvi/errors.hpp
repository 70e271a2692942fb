#pragma once

#include <stdexcept>
#include <string>

namespace pvi {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tower mismatch, duplicate generator names, malformed extensions.
struct TowerError : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by the zero element") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// y == 0, 1, t or t == 0, 1 identically: the equation's singular loci.
struct DegenerateSolution : Error {
    using Error::Error;
};

// Z(t) vanishes identically: the solution is fixed by the Okamoto operator.
struct FixedSolution : Error {
    using Error::Error;
};

// A transformation's theta-precondition does not hold.
struct ShapeError : Error {
    using Error::Error;
};

// Numeric evaluation hit a pole (or an inconsistent branch value).
struct NumericError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Exact reduction exceeded the monomial budget; callers fall back to numeric.
struct BudgetExceeded : Error {
    using Error::Error;
};

}  // namespace pvi
