#pragma once

#include <stdexcept>
#include <string>

namespace discoh {

/// A value lies outside the domain an operation accepts (bad n/ell, wrong
/// vector length, zero torus coordinate, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two scalars of incompatible kinds were combined (e.g. F_p and F_q).
class ScalarKindError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural invariant failed at runtime (nonzero composition in a
/// complex, violated inequality). Indicates a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace discoh
