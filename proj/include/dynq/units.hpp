#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynq/dimension.hpp"

namespace dynq {

/// Thrown by parse_unit. `position` is the 1-based character offset of the
/// offending token in the input expression.
class UnitParseError : public std::runtime_error {
public:
  UnitParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Registry mapping unit symbols to dimensions. natural() returns the table
/// for the natural electromagnetic unit system, where the velocity-coupling
/// constant is dimensionless, charge carries J/m^2, and every derived symbol
/// reduces to pure powers of (m, kg, s):
///
///   m kg s        base units
///   Hz            s^-1
///   N             kg m s^-2
///   J             kg m^2 s^-2
///   C             charge, kg s^-2 (an energy per area)
///   E             electric field, C/m^2
///   B             magnetic field, C/(m^2 u)
///   u             velocity, m/s
///   eps           permittivity-like coupling, N/m^4
///   eta           energy-transfer coupling, N/m^4
///   sigma         radiation coupling, N/m^4
///   beta          dimensionless velocity coupling
///   hbar          inverse of eta up to 4*pi, N^-1 m^4
class UnitTable {
public:
  static const UnitTable& natural();

  /// Throws std::out_of_range for unknown symbols.
  const Dimension& lookup(std::string_view symbol) const;
  bool contains(std::string_view symbol) const;
  const std::map<std::string, Dimension, std::less<>>& entries() const {
    return entries_;
  }

  void define(std::string symbol, Dimension dim);

private:
  std::map<std::string, Dimension, std::less<>> entries_;
};

/// Parse a unit expression against a symbol table.
///
/// Grammar:
///   expr     := term { sep term }
///   sep      := whitespace+ | "·" | "*" | "/"
///   term     := (symbol | "1") [ "^" exponent ]
///   exponent := ["+"|"-"] digits [ "/" digits ]
///
/// "/" divides by exactly the next term ("C s^2/kg" is C·s^2·kg^-1).
/// An exponent denominator must immediately follow its slash with a digit,
/// which is how "m^1/2" (square root) is told apart from "m^1/kg"
/// (division). The literal term "1" is the dimensionless unit, so canonical
/// renderings such as "1" and dimension strings like "m^-2 kg s^-2" always
/// re-parse. Errors report 1-based character positions.
Dimension parse_unit(std::string_view expr,
                     const UnitTable& table = UnitTable::natural());

/// One checked term of an equation: its dimension, its ratio to the target
/// dimension, and whether the ratio is dimensionless (i.e. the term is
/// consistent with the target).
struct TermCheck {
  Dimension dim;
  Dimension ratio;
  bool consistent = false;
};

/// Result of checking every term of an equation against a target dimension.
struct ConsistencyReport {
  Dimension target;
  std::vector<TermCheck> terms;
  bool consistent = false;  // true iff every term matches the target
};

ConsistencyReport check_equation(const Dimension& target,
                                 const std::vector<Dimension>& terms);

/// Built-in dimensional checks for the model's force and radiation laws.
/// Each names a target expression and a list of labelled term expressions in
/// the grammar above; run_builtin_check parses and checks them.
///
///   lorentz-naive      F = q E + q u B against N. The magnetic term comes
///                      out a factor N/m^4 too heavy: the raw force law is
///                      dimensionally broken in this unit system.
///   lorentz-repaired   F = (q/eta) E + (q/eta) u B against N. Dividing the
///                      charge by the coupling eta repairs both terms.
///   force-natural      F = hbar q E (and hbar q u B) against N, the same
///                      repair written through hbar = 4*pi/eta.
///   angular-natural    L = hbar q E m against N m (lever arm included).
///   radiation-density  phi = hbar E^2 + hbar u^2 B^2 against N/m^2.
struct BuiltinEquation {
  std::string name;
  std::string target_expr;
  std::vector<std::pair<std::string, std::string>> term_exprs;
  bool expect_consistent = true;
};

struct BuiltinCheckResult {
  BuiltinEquation equation;
  ConsistencyReport report;
  bool matches_expectation = false;
};

const std::vector<BuiltinEquation>& builtin_equations();

/// Throws std::out_of_range for an unknown equation name.
BuiltinCheckResult run_builtin_check(std::string_view name,
                                     const UnitTable& table = UnitTable::natural());

}  // namespace dynq
