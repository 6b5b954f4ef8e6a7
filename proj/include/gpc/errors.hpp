#pragma once

#include <stdexcept>
#include <string>

namespace gpc {

/// Base of every error raised by the library. The CLI maps the subclasses
/// onto exit codes, so new error kinds should derive from one of these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-provided configuration (duplicate modes, bad keys, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A mode or name that is not part of the object it was looked up in.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the regime an approximation is valid for.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Non-finite input or failed numerical routine.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Requested object would exceed a memory/dimension budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Truncation guard violated. Carries the smallest cutoff that satisfies it.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, int required_n_max)
      : Error(what), required_n_max_(required_n_max) {}

  int required_n_max() const noexcept { return required_n_max_; }

 private:
  int required_n_max_;
};

}  // namespace gpc
