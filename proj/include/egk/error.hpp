#pragma once

#include <stdexcept>
#include <string>

namespace egk {

/// Malformed or inconsistent user input (unknown labels, bad rationals,
/// missing payoff cells). The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on a model that does not satisfy the
/// hypotheses it needs (non-cautious type, missing surjection, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace egk
