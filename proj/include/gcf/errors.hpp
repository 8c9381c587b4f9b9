#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcf {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class FormatCapabilityError : public Error {
 public:
  using Error::Error;
};

class EmptyMesh : public Error {
 public:
  using Error::Error;
};

class ConnectivityMismatch : public Error {
 public:
  using Error::Error;
};

class CountMismatch : public Error {
 public:
  using Error::Error;
};

class EdgeMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyField : public Error {
 public:
  using Error::Error;
};

class TraceTooShort : public Error {
 public:
  using Error::Error;
};

class BadResolution : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied parameter violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace gcf
