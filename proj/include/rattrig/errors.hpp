#pragma once

#include <stdexcept>
#include <string>

namespace rattrig {

// Failure classes map to CLI exit codes: io -> 1, usage/config -> 2,
// mathematical inconsistency -> 3, no in-field solution -> 4.
enum class ErrorClass { io = 1, usage = 2, inconsistent = 3, not_in_field = 4 };

class Error : public std::runtime_error {
public:
  Error(ErrorClass cls, const std::string& msg) : std::runtime_error(msg), cls_(cls) {}
  ErrorClass error_class() const { return cls_; }

private:
  ErrorClass cls_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(ErrorClass::usage, m) {}
};

struct InvalidField : Error {
  explicit InvalidField(const std::string& m) : Error(ErrorClass::usage, m) {}
};

struct UnsupportedPattern : Error {
  explicit UnsupportedPattern(const std::string& m) : Error(ErrorClass::usage, m) {}
};

struct UnsupportedField : Error {
  explicit UnsupportedField(const std::string& m) : Error(ErrorClass::usage, m) {}
};

struct ExhaustiveBoundExceeded : Error {
  explicit ExhaustiveBoundExceeded(const std::string& m) : Error(ErrorClass::usage, m) {}
};

struct IoError : Error {
  explicit IoError(const std::string& m) : Error(ErrorClass::io, m) {}
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& m) : Error(ErrorClass::inconsistent, m) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& m) : Error(ErrorClass::inconsistent, m) {}
};

struct CoincidentPoints : Error {
  explicit CoincidentPoints(const std::string& m) : Error(ErrorClass::inconsistent, m) {}
};

struct DuplicatePoints : Error {
  explicit DuplicatePoints(const std::string& m) : Error(ErrorClass::inconsistent, m) {}
};

struct NullLine : Error {
  explicit NullLine(const std::string& m) : Error(ErrorClass::inconsistent, m) {}
};

struct ParallelLines : Error {
  explicit ParallelLines(const std::string& m) : Error(ErrorClass::inconsistent, m) {}
};

struct IsotropicConfiguration : Error {
  explicit IsotropicConfiguration(const std::string& m) : Error(ErrorClass::inconsistent, m) {}
};

struct ZeroQuadrance : Error {
  explicit ZeroQuadrance(const std::string& m) : Error(ErrorClass::inconsistent, m) {}
};

struct InvalidTriangle : Error {
  explicit InvalidTriangle(const std::string& m) : Error(ErrorClass::inconsistent, m) {}
};

struct InconsistentData : Error {
  explicit InconsistentData(const std::string& m) : Error(ErrorClass::inconsistent, m) {}
};

// Carries the name of the offending quantity and its deviation.
struct ToleranceExceeded : Error {
  ToleranceExceeded(const std::string& quantity, double deviation, double tol)
      : Error(ErrorClass::inconsistent,
              "tolerance exceeded for " + quantity + ": deviation " +
                  std::to_string(deviation) + " > " + std::to_string(tol)),
        quantity(quantity),
        deviation(deviation) {}
  std::string quantity;
  double deviation;
};

// A required square root does not exist in the active field. The serialized
// discriminant is kept as the certificate of non-solvability.
struct NotInField : Error {
  NotInField(const std::string& m, std::string discriminant)
      : Error(ErrorClass::not_in_field, m + " (discriminant " + discriminant + ")"),
        discriminant(std::move(discriminant)) {}
  std::string discriminant;
};

}  // namespace rattrig
