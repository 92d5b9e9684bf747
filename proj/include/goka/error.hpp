#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goka {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed digraph construction (out-of-range endpoint, loop).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Operation called outside its domain (wrong family parameters, vertex sets
/// over a different universe, non-functional input to the functional
/// construction, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Text input that does not follow the documented format.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace goka
