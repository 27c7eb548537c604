#pragma once

#include <stdexcept>
#include <string>

namespace lefkit {

/// Base class for all lefkit errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Violated precondition or mathematically inconsistent input
/// (genus mismatch, nonzero base genus, non-integral signature, ...).
class domain_error : public error {
 public:
  explicit domain_error(const std::string& what) : error(what) {}
};

/// Integer overflow detected in exact arithmetic. Results are never wrapped.
class overflow_error : public error {
 public:
  explicit overflow_error(const std::string& what) : error(what) {}
};

/// Syntax or semantic error in a text input (word literals, the
/// factorization DSL, mapping-class literals). Carries a 1-based
/// line/column position when one is known; 0 means "not applicable".
class parse_error : public error {
 public:
  parse_error(const std::string& what, int line = 0, int column = 0)
      : error(line > 0 ? "line " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + what
                       : what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace lefkit
