#pragma once

#include <stdexcept>
#include <string>

namespace ips {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configuration violates its invariants (non-square apex distance,
// unordered offsets, non-integral pairwise distances, ...).
struct InvalidConfig : Error {
  using Error::Error;
};

// A matrix fails the squared-distance-matrix invariants (asymmetry,
// nonzero diagonal, coincident points).
struct InvalidMatrix : Error {
  using Error::Error;
};

// A replacement simplex does not fit strictly inside the sphere of
// radius sqrt(h2); equality is rejected as well since the blown-up set
// would collapse into a hyperplane.
struct DoesNotFit : Error {
  using Error::Error;
};

// f^2 + v^2 is not a perfect square.
struct NotPythagorean : Error {
  using Error::Error;
};

// A sphere set's circumradius does not equal the apex height squared.
struct SphereMismatch : Error {
  using Error::Error;
};

// A sphere set's embedding dimension is not the required m-1.
struct DimMismatch : Error {
  using Error::Error;
};

// Thrown by operations whose precondition requires a realizable input.
// Operations whose job is to decide realizability signal it through an
// empty optional instead.
struct NotRealizable : Error {
  using Error::Error;
};

// Point set file could not be parsed.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace ips
