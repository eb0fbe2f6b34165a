#pragma once

#include <stdexcept>
#include <string>

namespace vdw {

/// Argument outside the mathematical domain of an operation (d <= 0, l >= 2 where l < 2 is required, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation requested at (or numerically on top of) one of the fixed particles.
class SingularityError : public DomainError {
 public:
  explicit SingularityError(const std::string& what) : DomainError(what) {}
};

/// Leading coefficient vanishes relative to the rest of the polynomial.
class DegenerateLeadingCoefficient : public DomainError {
 public:
  explicit DegenerateLeadingCoefficient(const std::string& what) : DomainError(what) {}
};

class UnsupportedDegree : public DomainError {
 public:
  explicit UnsupportedDegree(const std::string& what) : DomainError(what) {}
};

}  // namespace vdw
