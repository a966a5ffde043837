#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cyclewidth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: out-of-range ids, self-loops, malformed specs.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 / PACE input or certificate text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A search exhausted its node budget, or an instance is larger than an exact
/// solver can represent. Distinct from a "no" answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input that violates its precondition.
/// `evidence` carries a witness (e.g. the offending long cycle).
class PreconditionViolated : public Error {
 public:
  PreconditionViolated(const std::string& what, std::vector<int> evidence)
      : Error(what), evidence_(std::move(evidence)) {}
  const std::vector<int>& evidence() const noexcept { return evidence_; }

 private:
  std::vector<int> evidence_;
};

/// A proven inequality failed at runtime. Must never fire.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclewidth
