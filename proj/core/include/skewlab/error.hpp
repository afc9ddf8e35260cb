#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewlab {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Tables with inconsistent dimensions or out-of-range entries.
  class MalformedInput : public Error {
   public:
    using Error::Error;
  };

  // A precondition of an operation was not met by the caller.
  class ContractViolation : public Error {
   public:
    using Error::Error;
  };

  // An exponential enumeration was refused because the input is too large.
  class CapacityError : public Error {
   public:
    using Error::Error;
  };

  // The operation is not defined for this input (e.g. Laurent arithmetic
  // over a non-invertible endomorphism).
  class UnsupportedOperation : public Error {
   public:
    using Error::Error;
  };

  // Unknown property or theorem identifiers, unresolvable selectors.
  class UsageError : public Error {
   public:
    using Error::Error;
  };

  // An internal consistency check failed. Always indicates a bug.
  class SoundnessAlarm : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string file,
               std::size_t line,
               std::size_t column,
               std::string expected)
        : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column)
                + ": expected " + expected),
          _file(std::move(file)),
          _line(line),
          _column(column),
          _expected(std::move(expected)) {}

    std::string const& file() const noexcept {
      return _file;
    }
    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }
    std::string const& expected() const noexcept {
      return _expected;
    }

   private:
    std::string _file;
    std::size_t _line;
    std::size_t _column;
    std::string _expected;
  };

  // A definition file parsed but one of its structures failed verification,
  // or it redefines an id.
  class DefinitionError : public Error {
   public:
    DefinitionError(std::string file, std::size_t line, std::string const& what)
        : Error(file + ":" + std::to_string(line) + ": " + what),
          _file(std::move(file)),
          _line(line) {}

    std::string const& file() const noexcept {
      return _file;
    }
    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::string _file;
    std::size_t _line;
  };

}  // namespace skewlab
