#pragma once

#include <string>

#include "dynq/rational.hpp"

namespace dynq {

/// Physical dimension as a vector of rational exponents over the three base
/// units metre, kilogram, second. In this unit system electric charge is an
/// energy density (J/m^2), so every electromagnetic quantity reduces to a
/// pure mechanical dimension and the exponent vector is a complete
/// description. Dimensions form an abelian group under multiplication.
struct Dimension {
  Rational m_exp;
  Rational kg_exp;
  Rational s_exp;

  bool is_dimensionless() const {
    return m_exp.is_zero() && kg_exp.is_zero() && s_exp.is_zero();
  }

  Dimension pow(const Rational& e) const {
    return {m_exp * e, kg_exp * e, s_exp * e};
  }

  /// Canonical rendering: "m^a kg^b s^c" with zero exponents omitted and
  /// exponent 1 left bare; the dimensionless dimension renders as "1".
  /// The result re-parses (see parse_unit) to an equal Dimension.
  std::string str() const;

  friend Dimension operator*(const Dimension& a, const Dimension& b) {
    return {a.m_exp + b.m_exp, a.kg_exp + b.kg_exp, a.s_exp + b.s_exp};
  }
  friend Dimension operator/(const Dimension& a, const Dimension& b) {
    return {a.m_exp - b.m_exp, a.kg_exp - b.kg_exp, a.s_exp - b.s_exp};
  }
  friend bool operator==(const Dimension& a, const Dimension& b) = default;
};

}  // namespace dynq
