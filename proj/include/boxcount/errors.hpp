#pragma once

#include <stdexcept>
#include <string>

namespace boxcount {

// Operands live on exponent lattices of different arity.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical degeneracy: a vanishing denominator, a pole of the
// a-hat map, a weight collision at a fixed point. `witness` names the
// offending object in a machine-readable way.
class DegeneracyError : public std::runtime_error {
 public:
  DegeneracyError(const std::string& what, std::string witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

// A result that must be polynomial by theory was not. Always a bug in a
// convention, never bad input.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed text or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Not enough series coefficients to carry out a requested fit or check.
class InsufficientDataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace boxcount
