#pragma once

#include "dynq/constants.hpp"

namespace dynq {

/// Default hydrogen shell radius, m.
inline constexpr double kDefaultAtomRadius = 3.33e-10;

/// Proton radius window consistent with nucleon density profiles, m.
inline constexpr double kProtonRadiusWindowLo = 0.5e-15;
inline constexpr double kProtonRadiusWindowHi = 3.0e-15;

/// Hydrogen atom as a driven spherical oscillator: the electron is a radial
/// standing wave of velocity amplitude u_n = nu_H * R_H / n inside the shell
/// radius R_H, driven by the proton's dynamic charge at frequency nu_H.
///
/// Construction validates nu_H, R_H, R_p, masses > 0, n >= 1 and the
/// point-source separation R_p / R_H < 1e-3 (std::invalid_argument
/// otherwise).
struct HydrogenModel {
  double nu_H;  // drive frequency, Hz
  double R_H;   // shell radius, m
  double R_p;   // proton radius, m
  int n;        // principal state index
  double M_e;   // electron mass, kg
  double M_p;   // proton mass, kg

  HydrogenModel(double nu_H, double R_H, double R_p, int n, double M_e,
                double M_p);

  static HydrogenModel from_constants(const ConstantsTable& c, int n = 1,
                                      double R_p = 1.4e-15,
                                      double R_H = kDefaultAtomRadius);

  double omega() const;       // 2 pi nu_H
  double wavevector() const;  // k_n = pi n / R_H
};

/// Electron wave velocity u_n = nu_H * R_H / n.
double state_velocity(const HydrogenModel& h);

/// Electron density amplitude rho0 = M_e / (2 pi R_H).
double density_amplitude(const HydrogenModel& h);

/// Proton strain amplitude x = 3d/R_p = M_e / ((2 pi)^2 M_p n), fixed by
/// matching the proton's exterior field to the electron momentum swing.
/// Strictly decreasing in n and vanishing as n grows.
double oscillation_amplitude(const HydrogenModel& h);

/// Kinetic and field shares of the electron energy density at radius r and
/// time t: (rho0 u_n^2 / r^2) cos^2(omega t) split by sin^2 / cos^2 of the
/// standing-wave phase k_n r. Requires 0 < r <= R_H (std::domain_error
/// otherwise).
struct EnergyDensities {
  double kinetic;
  double field;
};
EnergyDensities energy_densities(const HydrogenModel& h, double r, double t);

/// The electron energy ledger, joules:
///   W_el    = M_e u_n^2 / 2   shell average of kinetic + field density
///   W_free  = M_e u_n^2       free electron at the same velocity
///   Delta_W = W_free - W_el   binding energy
///   W_Rad   = Delta_W         energy carried by the proton's radiation
struct EnergyLedger {
  double W_el;
  double W_free;
  double Delta_W;
  double W_Rad;
};
EnergyLedger electron_energy(const HydrogenModel& h);

/// Literal space-time average of energy_densities over the shell volume and
/// one period, via nested adaptive quadrature. Evaluates to M_e u_n^2: twice
/// the ledger W_el, since the density split double-counts the field share
/// relative to the ledger convention. Exposed for inspection.
double electron_energy_quadrature(const HydrogenModel& h, double rel_tol = 1e-9);

/// Radiated energy per period in closed form:
/// W_Rad = M_p^2 omega^4 x^2 / (4 eta R_p). Requires eta > 0.
double radiation_energy_closed_form(const HydrogenModel& h, double eta);

/// The same integral done numerically: time average over one period of the
/// radiation density (1/(8 pi eta)) (M_p omega^2 x / r^2)^2 sin^2(omega t)
/// integrated over R_p <= r <= R_H. Agrees with the closed form up to the
/// O(R_p/R_H) tail truncated there.
double radiation_energy_quadrature(const HydrogenModel& h, double eta,
                                   double rel_tol = 1e-8);

/// Coupling fixed by requiring W_Rad = hbar_si omega / 2 at n = 1:
/// eta = M_e^2 nu_H^3 / (2 h R_p). eta_times_Rp is the radius-free product.
struct EtaCoupling {
  double eta;
  double eta_times_Rp;
};
EtaCoupling derive_eta_coupling(const HydrogenModel& h, const ConstantsTable& c);

/// 4 pi / eta evaluated at a trial proton radius, with its deviation from
/// the reference inverse coupling. radius_in_window flags trial radii inside
/// the nucleon-profile window [0.5, 3.0] fm; out-of-window radii are still
/// evaluated.
struct HbarEstimate {
  double four_pi_over_eta;
  double reference;
  double rel_dev;
  bool radius_in_window;
};
HbarEstimate hbar_from_radius(const HydrogenModel& h, double R_p_trial,
                              const ConstantsTable& c);

/// Full report for one state, energies in eV.
struct HydrogenReport {
  int n;
  double u_n;
  double rho0;
  double x;
  double W_el_eV;
  double W_free_eV;
  double Delta_W_eV;
  double W_Rad_eV;
  double eta_coupling;
  double eta_times_Rp;
  double four_pi_over_eta;
  double hbar_reference;
  double rel_dev;
};
HydrogenReport hydrogen_report(const HydrogenModel& h, const ConstantsTable& c);

}  // namespace dynq
