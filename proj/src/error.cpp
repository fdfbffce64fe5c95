#include "repairaf/error.hpp"

namespace repairaf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Dependency: return "dependency";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

static std::string with_line(const std::string& message, std::size_t line) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}

ParseError::ParseError(const std::string& message, std::size_t line)
    : Error(ErrorKind::Parse, with_line(message, line)), line_(line) {}

}  // namespace repairaf
