#pragma once

#include <stdexcept>
#include <string>

namespace daggerkit {

// Base class for all daggerkit exceptions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input data is malformed at the id/table level (unresolved ids, missing
// entries, mismatched variance). Distinct from axiom failures, which are
// reported through ValidationReport.
class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what) : Error(what) {}
};

// A builder size guard was violated. Hard error by design: table sizes grow
// super-exponentially and a silent blowup would poison CI.
class SizeGuardError : public Error {
 public:
  explicit SizeGuardError(const std::string& what) : Error(what) {}
};

// An exhaustive search exceeded its configured ceiling. Reported, never
// silent: callers must either raise the ceiling or shrink the instance.
class SearchLimitError : public Error {
 public:
  explicit SearchLimitError(const std::string& what) : Error(what) {}
};

// Manifest text does not parse or does not match its schema. Line and
// column are 1-based; 0 means "not a syntax-level position".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int col = 0)
      : Error(what), line(line), col(col) {}
  int line;
  int col;
};

// Command/manifest mismatch or bad invocation.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace daggerkit
