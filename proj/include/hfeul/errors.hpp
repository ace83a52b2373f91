#pragma once

#include <stdexcept>
#include <string>

namespace hfeul {

/// Raised when an operation is called outside its domain (non-coprime
/// arguments, unknown Spin^c label, unnormalized polynomial, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (rationals, polynomials, files).
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A verified identity did not hold.
class identity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hfeul
