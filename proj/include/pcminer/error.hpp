#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcminer {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An item is not present in the prime table it is being encoded against.
class UnknownItemError : public Error {
 public:
  using Error::Error;
};

/// A value has a factor outside the prime table, or a repeated prime.
class DecodeError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The brute-force enumerator refuses universes beyond its guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace pcminer
