#pragma once

#include <stdexcept>
#include <string>

namespace zonotopal {

// A documented precondition does not hold for the given input (non-spanning
// list, point on a wall, cone not acute, malformed ideal spec, ...).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

class NonGenericPointError : public PreconditionError {
 public:
  explicit NonGenericPointError(const std::string& what) : PreconditionError(what) {}
};

// A structural identity the implementation relies on failed; this is a bug,
// not a valid state of the input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace zonotopal
