#pragma once

#include <stdexcept>
#include <string>

namespace dmv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation at (or numerically too close to) a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Argument outside the validated domain of a routine.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested index or configuration not implemented.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Series or quadrature failed its own convergence / truncation test.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Work estimate above the configured compute budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Integer width or table size would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace dmv
