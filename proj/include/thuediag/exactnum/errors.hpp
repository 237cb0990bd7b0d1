#pragma once

#include <stdexcept>
#include <string>

namespace thuediag {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NotIntegralError : public Error {
 public:
  using Error::Error;
};

class DegenerateError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// A statement that must hold for every input was observed to fail.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(const std::string& what, long attained)
      : Error(what), attained_(attained) {}
  long attained() const noexcept { return attained_; }

 private:
  long attained_;
};

}  // namespace thuediag
