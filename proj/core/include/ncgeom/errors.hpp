#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncgeom {

// Every failure raised by this library derives from Error, so callers can
// catch one type at the boundary and still discriminate when they need to.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- scalar / field layer ---------------------------------------------------

// Construction of a rational function with the zero polynomial below the bar.
class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("denominator is the zero polynomial") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Evaluation hit a zero of the denominator at a concrete base point.
class DenominatorZeroAtPoint : public Error {
 public:
  explicit DenominatorZeroAtPoint(const std::string& where)
      : Error("denominator vanishes at base point " + where) {}
};

// --- structural arithmetic --------------------------------------------------

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class NotComposable : public Error {
 public:
  explicit NotComposable(const std::string& what) : Error(what) {}
};

class DegenerateMetric : public Error {
 public:
  explicit DegenerateMetric(const std::string& what) : Error(what) {}
};

class MixedSectors : public Error {
 public:
  explicit MixedSectors(const std::string& what) : Error(what) {}
};

class SectorMismatch : public Error {
 public:
  explicit SectorMismatch(const std::string& what) : Error(what) {}
};

class UnsupportedAction : public Error {
 public:
  explicit UnsupportedAction(const std::string& what) : Error(what) {}
};

// --- kernels and witnesses --------------------------------------------------

class ZeroInput : public Error {
 public:
  explicit ZeroInput(const std::string& what) : Error(what) {}
};

class BadColumn : public Error {
 public:
  explicit BadColumn(const std::string& what) : Error(what) {}
};

class NotASubset : public Error {
 public:
  explicit NotASubset(const std::string& what) : Error(what) {}
};

// --- sampling / representation ---------------------------------------------

class PoleOnGrid : public Error {
 public:
  explicit PoleOnGrid(const std::string& what) : Error(what) {}
};

// --- sheaf engine -----------------------------------------------------------

class CoverNotInTopology : public Error {
 public:
  explicit CoverNotInTopology(const std::string& what) : Error(what) {}
};

// --- scenario front end -----------------------------------------------------

class UnknownSuite : public Error {
 public:
  explicit UnknownSuite(const std::string& name)
      : Error("unknown suite: " + name) {}
};

// Scenario file syntax error with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Scenario content is well formed but semantically invalid.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// A task inside a scenario could not be executed against the declared objects.
class TaskError : public Error {
 public:
  explicit TaskError(const std::string& what) : Error(what) {}
};

}  // namespace ncgeom
