// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLRC_ERRORS_HPP
#define TOWERLRC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace towerlrc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters supplied by the caller (bad q, level, pole order, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// An operation applied outside its mathematical domain, e.g. inverting zero.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A requested enumeration or search exceeds the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : Error(what + ": requires " + std::to_string(required) + ", budget is " +
              std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// A construction that the theory says must succeed did not.
class ConstructionFailure : public Error {
 public:
  using Error::Error;
};

/// More than one symbol of a recovery set is missing.
class UnrecoverableErasure : public Error {
 public:
  using Error::Error;
};

}  // namespace towerlrc

#endif  // TOWERLRC_ERRORS_HPP
