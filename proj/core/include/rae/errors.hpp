#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rae {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (bad JSON, bad JSON-lines record).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed document that does not match the scenario schema.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Invalid configuration: unknown property, bad rates, bad method spec.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A framework is larger than the configured enumeration limit.
class CapacityError : public Error {
 public:
  CapacityError(std::size_t arguments, std::size_t limit)
      : Error("framework has " + std::to_string(arguments) +
              " arguments, above the enumeration limit of " +
              std::to_string(limit)),
        arguments_(arguments),
        limit_(limit) {}

  std::size_t arguments() const noexcept { return arguments_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t arguments_;
  std::size_t limit_;
};

}  // namespace rae
