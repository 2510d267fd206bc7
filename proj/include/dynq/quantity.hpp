#pragma once

#include <stdexcept>
#include <string>

#include "dynq/dimension.hpp"

namespace dynq {

/// Thrown when quantities of different dimensions are added or compared.
/// Carries both offending dimensions in canonical rendering.
class DimensionMismatchError : public std::runtime_error {
public:
  DimensionMismatchError(const char* op, const Dimension& lhs,
                         const Dimension& rhs)
      : std::runtime_error(std::string("dimension mismatch in ") + op + ": [" +
                           lhs.str() + "] vs [" + rhs.str() + "]"),
        lhs_(lhs),
        rhs_(rhs) {}

  const Dimension& lhs() const { return lhs_; }
  const Dimension& rhs() const { return rhs_; }

private:
  Dimension lhs_;
  Dimension rhs_;
};

/// A numeric value tagged with its dimension. Addition and subtraction
/// require equal dimensions; multiplication and division compose them.
struct Quantity {
  double value = 0.0;
  Dimension dim;

  friend Quantity operator+(const Quantity& a, const Quantity& b) {
    if (!(a.dim == b.dim)) throw DimensionMismatchError("+", a.dim, b.dim);
    return {a.value + b.value, a.dim};
  }
  friend Quantity operator-(const Quantity& a, const Quantity& b) {
    if (!(a.dim == b.dim)) throw DimensionMismatchError("-", a.dim, b.dim);
    return {a.value - b.value, a.dim};
  }
  friend Quantity operator*(const Quantity& a, const Quantity& b) {
    return {a.value * b.value, a.dim * b.dim};
  }
  friend Quantity operator/(const Quantity& a, const Quantity& b) {
    return {a.value / b.value, a.dim / b.dim};
  }
};

Quantity pow(const Quantity& q, const Rational& e);

}  // namespace dynq
