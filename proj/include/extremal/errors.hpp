#pragma once

#include <stdexcept>
#include <string>

namespace extremal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive operation was asked to run above its size limit.
class GuardError : public Error {
 public:
  GuardError(const std::string& what, int limit)
      : Error(what + " (limit " + std::to_string(limit) +
              "; raise it with --guard)"),
        limit_(limit) {}
  int limit() const { return limit_; }

 private:
  int limit_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace extremal
