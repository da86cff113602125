#pragma once

#include <stdexcept>
#include <string>

namespace cohere {

/// Malformed or invalid input: parse failures, violated graph invariants,
/// unsupported flavors. The CLI maps these to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A self-check failed (cross-oracle disagreement, an emitted proof that does
/// not re-verify). Always a bug. The CLI maps these to exit code 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cohere
