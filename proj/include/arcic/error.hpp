#pragma once

#include <stdexcept>
#include <string>

namespace arcic {

/// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed input: dimension mismatches, schema violations.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, std::string path = {})
      : Error(what), path_(std::move(path)) {}
  const char* kind() const noexcept override { return "input"; }
  /// JSON pointer to the offending value, empty when not applicable.
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Argument outside the domain of the function (e.g. a point outside the cone).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

/// Valid input that this implementation does not handle.
class UnsupportedError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "unsupported"; }
};

}  // namespace arcic
