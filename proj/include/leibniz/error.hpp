#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leibniz {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Input outside the domain of an operation (negative radicand, square radicand, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Quadratic scalars over two different radicands were combined.
class ContextError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& var) : Error("unbound variable " + var) {}
};

class DenominatorVanishes : public Error {
 public:
  using Error::Error;
};

class RadicalInconsistent : public Error {
 public:
  using Error::Error;
};

class RadicalNegative : public Error {
 public:
  using Error::Error;
};

class SideConditionViolated : public Error {
 public:
  explicit SideConditionViolated(const std::string& condition)
      : Error("side condition violated: " + condition), condition_(condition) {}
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// alpha missing for a parametric algebra, given for a non-parametric one, or
/// outside the algebra's validity conditions.
class InvalidAlpha : public Error {
 public:
  using Error::Error;
};

/// A deserialized object breaks one of its structural invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace leibniz
