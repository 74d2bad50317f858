#pragma once

#include <stdexcept>
#include <string>

namespace ulrichlab {

/// Malformed polynomial text, bundle descriptor or range flag.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A homogeneous object whose degrees do not line up with what was requested.
class InconsistentDegrees : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// B^1 was requested on a space whose Frobenius splitting is false or unverified.
/// Without the splitting the direct-sum formula for its cohomology is invalid.
class NotSplit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedSpace : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Hilbert-function samples did not settle into a polynomial of the expected degree.
class InsufficientWindow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ulrichlab
