#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace repairaf {

enum class ErrorKind {
  Parse,
  Schema,
  Dependency,
  Domain,
  Resource,
  Precondition,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error the library raises. The kind decides the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  /// `line` is 1-based; 0 means the error is not tied to a line.
  ParseError(const std::string& message, std::size_t line = 0);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& message) : Error(ErrorKind::Schema, message) {}
};

class DependencyError : public Error {
 public:
  explicit DependencyError(const std::string& message) : Error(ErrorKind::Dependency, message) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error(ErrorKind::Domain, message) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& message) : Error(ErrorKind::Resource, message) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error(ErrorKind::Precondition, message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error(ErrorKind::Io, message) {}
};

}  // namespace repairaf
