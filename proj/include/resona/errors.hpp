#pragma once

#include <stdexcept>
#include <string>

namespace resona {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's preconditions (bad sizes, ranges, flags).
struct InvalidArgument : Error {
  using Error::Error;
};

// A file could not be opened or read.
struct IoError : Error {
  using Error::Error;
};

// A file was readable but not in a supported format.
struct UnsupportedFormat : Error {
  using Error::Error;
};

// A linear system has no unique solution.
struct SingularMatrix : Error {
  int rank;
  int dimension;
  SingularMatrix(int rank_, int dimension_)
      : Error("singular system: rank " + std::to_string(rank_) + " < dimension " +
              std::to_string(dimension_)),
        rank(rank_),
        dimension(dimension_) {}
};

// Input is structurally valid but numerically degenerate (e.g. an all-zero
// spectrum has no centroid).
struct DegenerateInput : Error {
  using Error::Error;
};

// A body lies outside the domain a spatial structure covers.
struct OutOfBounds : Error {
  int body_id;
  OutOfBounds(int body_id_, const std::string& what_)
      : Error(what_), body_id(body_id_) {}
};

}  // namespace resona
