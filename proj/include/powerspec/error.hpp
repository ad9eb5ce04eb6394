#pragma once

#include <stdexcept>
#include <string>

namespace powerspec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when parameters violate a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised by routines that need shortest-path distances on a disconnected graph.
class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

/// A numeric routine ran out of its iteration budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace powerspec
