#pragma once

#include <stdexcept>
#include <string>

namespace rmc {

/// Caller violated a documented precondition (bad arguments, wrong mode).
class UsageError : public std::runtime_error {
  public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Instance or witness file could not be parsed; carries line/column info.
class FormatError : public std::runtime_error {
  public:
    FormatError(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// The exhaustive oracle refuses instances whose enumeration space exceeds its budget.
class OracleBudgetError : public UsageError {
  public:
    explicit OracleBudgetError(const std::string& what) : UsageError(what) {}
};

} // namespace rmc
