#pragma once

#include <stdexcept>
#include <string>

namespace slideocam {

/// Base class for every error raised by the library.
///
/// Carries the name of the module that raised it so that front ends can
/// report where a failure originated. Errors are split into two classes:
/// bad input (validation, parse, precondition) and numerical/solver failure.
class Error : public std::runtime_error {
  public:
    Error(std::string module, const std::string& what, bool solver_failure)
        : std::runtime_error(what), module_(std::move(module)), solver_failure_(solver_failure) {}

    const std::string& module() const noexcept { return module_; }
    bool solver_failure() const noexcept { return solver_failure_; }

  private:
    std::string module_;
    bool solver_failure_;
};

/// eta too close to 1/(2 pi): the profile coefficients divide by 2 pi eta - 1.
class SingularityError : public Error {
  public:
    SingularityError(std::string module, const std::string& what)
        : Error(std::move(module), what, true) {}
};

/// Evaluation requested outside the admissible parameter or angle domain.
class DomainError : public Error {
  public:
    DomainError(std::string module, const std::string& what)
        : Error(std::move(module), what, true) {}
};

class DegenerateSpeedError : public Error {
  public:
    DegenerateSpeedError(std::string module, const std::string& what)
        : Error(std::move(module), what, true) {}
};

class NoRootInBracket : public Error {
  public:
    NoRootInBracket(std::string module, const std::string& what)
        : Error(std::move(module), what, true) {}
};

class ClosureFailure : public Error {
  public:
    ClosureFailure(std::string module, const std::string& what)
        : Error(std::move(module), what, true) {}
};

class DegeneratePolyline : public Error {
  public:
    DegeneratePolyline(std::string module, const std::string& what)
        : Error(std::move(module), what, true) {}
};

/// Points from the fixed and the rotating frame were combined without rotation.
class FrameMismatch : public Error {
  public:
    FrameMismatch(std::string module, const std::string& what)
        : Error(std::move(module), what, false) {}
};

class PreconditionError : public Error {
  public:
    PreconditionError(std::string module, const std::string& what)
        : Error(std::move(module), what, false) {}
};

/// A configuration or parameter value failed validation; names the field.
class ValidationError : public Error {
  public:
    ValidationError(std::string module, std::string field, const std::string& what)
        : Error(std::move(module), field + ": " + what, false), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

  private:
    std::string field_;
};

/// Malformed configuration text. Line and column are 1-based.
class ParseError : public Error {
  public:
    ParseError(std::string module, int line, int column, const std::string& what)
        : Error(std::move(module),
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what,
                false),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

  private:
    int line_;
    int column_;
};

}  // namespace slideocam
