#pragma once

#include <stdexcept>
#include <string>

namespace vpfix {

// Base of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resource budgets ran out (CLI exit code 2). The computation was abandoned,
// not wrong; rerun with a larger cap or budget.
struct BudgetError : Error {
  using Error::Error;
};

struct ClosureExceedsCap : BudgetError {
  using BudgetError::BudgetError;
};

struct SearchBudgetExceeded : BudgetError {
  using BudgetError::BudgetError;
};

// Contract violations: the input does not satisfy an operation's precondition
// (CLI exit code 1).
struct DomainError : Error {
  using Error::Error;
};

struct NotTransitive : DomainError {
  using DomainError::DomainError;
};

struct TrivialGroup : DomainError {
  using DomainError::DomainError;
};

struct NotAGraph : DomainError {
  using DomainError::DomainError;
};

struct Irregular : DomainError {
  using DomainError::DomainError;
};

struct RigidGraph : DomainError {
  using DomainError::DomainError;
};

struct NotHomogeneous : DomainError {
  using DomainError::DomainError;
};

struct ParseError : DomainError {
  using DomainError::DomainError;
};

}  // namespace vpfix
