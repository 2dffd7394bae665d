#pragma once

#include <stdexcept>
#include <string>

namespace singerfact {

// Resource budget exhausted (map growth, tuple budget, dense-group bound).
// Carries partial-progress metadata so callers can report exit code 3.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::string partial = "")
      : std::runtime_error(what), partial_json(std::move(partial)) {}
  std::string partial_json;
};

// Violation of an internal invariant (inexact division, lost exactness,
// postcondition failure).  Maps to CLI exit code 4.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace singerfact
