#pragma once

#include <stdexcept>
#include <string>

namespace bohrlab {

/// Argument outside the mathematical domain of an operation (|z| >= 1, a0 outside (0,1), ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// compose() was handed an inner series with w(0) != 0.
class NonVanishingConstantTerm : public std::invalid_argument {
public:
  explicit NonVanishingConstantTerm(const std::string& what) : std::invalid_argument(what) {}
};

/// A bracketing solver found no sign change across its bracket.
class BracketError : public std::runtime_error {
public:
  explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

/// Stored coefficients contradict the declared growth class, or a coefficient is not finite.
class InvalidSeries : public std::invalid_argument {
public:
  explicit InvalidSeries(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace bohrlab
