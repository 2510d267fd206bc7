#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dynq {

enum class Provenance { Default, Overridden };

/// Thrown on malformed or inconsistent override input. Carries the 1-based
/// line number when the failure is tied to a specific line (0 otherwise).
class ConstantsError : public std::runtime_error {
public:
  ConstantsError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Immutable table of physical constants and model parameters, SI values.
/// Defaults are CODATA 2018 plus the model's atomic drive frequency nu_H and
/// the reference value hbar_natural of the inverse coupling (in N^-1 m^4).
///
/// hbar_si is stored as h/(2*pi) evaluated in double precision, and the
/// loader keeps that identity within 1e-12 relative: overriding h alone
/// recomputes hbar_si, and an explicit hbar_si override that contradicts h
/// by more than 1e-12 is rejected.
struct ConstantsTable {
  double M_e;           // electron mass, kg
  double M_p;           // proton mass, kg
  double h;             // Planck constant, J s
  double hbar_si;       // reduced Planck constant, J s
  double e_charge;      // elementary charge, A s
  double eps0;          // vacuum permittivity, F/m
  double G;             // gravitational constant, m^3/(kg s^2)
  double N_A;           // Avogadro constant, 1/mol
  double c;             // speed of light, m/s
  double M_earth;       // Earth mass, kg
  double R_E;           // Earth radius, m
  double R_O;           // Earth orbit radius, m
  double tau_E;         // orbital period, s
  double nu_H;          // hydrogen ground-state drive frequency, Hz
  double hbar_natural;  // reference inverse coupling 4*pi/eta, N^-1 m^4

  std::map<std::string, Provenance> provenance;

  friend bool operator==(const ConstantsTable&, const ConstantsTable&) = default;
};

/// Canonical key order, matching the member order above.
const std::vector<std::string>& constant_keys();

/// Throws std::out_of_range for an unknown key.
double get_constant(const ConstantsTable& table, std::string_view key);

/// Table with all defaults.
ConstantsTable load_constants();

/// Defaults with overrides applied. The override text is a flat key=value
/// file: one assignment per line, '#' starts a comment, blank lines are
/// ignored. Keys must be known, values must parse as finite positive
/// doubles. Unknown keys, malformed values, and h/hbar_si inconsistency
/// raise ConstantsError naming the line.
ConstantsTable load_constants(std::string_view override_text);

}  // namespace dynq
