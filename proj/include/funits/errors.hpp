#pragma once

#include <stdexcept>
#include <string>

namespace funits {

// Process exit codes used by the CLI. Every exception type maps to one of
// these categories; anything else escaping main is a numerical failure.
enum class ExitCode : int {
  Ok = 0,
  Config = 2,
  Data = 3,
  Numerical = 4,
};

struct Error : std::runtime_error {
  Error(ExitCode code, const std::string& msg) : std::runtime_error(msg), code(code) {}
  ExitCode code;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(ExitCode::Config, msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(ExitCode::Data, msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(ExitCode::Data, msg) {}
};

// Inconsistent column counts in a CSV file.
struct RaggedError : Error {
  explicit RaggedError(const std::string& msg) : Error(ExitCode::Data, msg) {}
};

// Matrix invariant violations (negative entry, NaN/Inf).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(ExitCode::Data, msg) {}
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& msg) : Error(ExitCode::Data, msg) {}
};

struct LengthError : Error {
  explicit LengthError(const std::string& msg) : Error(ExitCode::Data, msg) {}
};

struct EmptyRegionError : Error {
  explicit EmptyRegionError(const std::string& msg) : Error(ExitCode::Data, msg) {}
};

// Degenerate numerical situation: all-zero matrix, isolated graph node, ...
struct DegenerateError : Error {
  explicit DegenerateError(const std::string& msg) : Error(ExitCode::Numerical, msg) {}
};

}  // namespace funits
