#pragma once

#include "dynq/constants.hpp"

namespace dynq {

/// Frequency interval in Hz. Requires 0 < lo_Hz <= hi_Hz; a degenerate band
/// with lo_Hz == hi_Hz is allowed.
struct FrequencyBand {
  double lo_Hz;
  double hi_Hz;

  FrequencyBand(double lo_Hz, double hi_Hz);

  bool overlaps(double lo, double hi) const {
    return lo_Hz <= hi && hi_Hz >= lo;
  }
};

/// Bounds on the gravity-to-electromagnetic frequency ratio.
///
/// The lower route scales the static field laws: eta_lo =
/// sqrt(k_u * 4 pi eps0 G M / e), with k_u a dimensional bookkeeping factor.
/// The upper route compares the field couplings directly at unit mass and
/// charge, eps0 * G ~ 1e-22, an order-of-magnitude statement; eta_hi keeps
/// that one-decade resolution, 10^round(log10(sqrt(eps0 G))), and the raw
/// square root is carried alongside for inspection.
struct FreqRatioBounds {
  double eta_lo;
  double eta_hi;
  double eps0_G;
  double sqrt_eps0_G;
};

/// Requires M > 0, k_u > 0 (std::invalid_argument otherwise).
FreqRatioBounds freq_ratio_bounds(const ConstantsTable& c, double M,
                                  double k_u = 1.0);

/// Scale an electromagnetic frequency into the gravity band:
/// [eta_lo * nu_E, eta_hi * nu_E]. Requires nu_E > 0 and eta_lo <= eta_hi
/// (a k_u large enough to push the routes past each other is rejected by
/// the band constructor).
FrequencyBand gravity_band(double nu_E, const FreqRatioBounds& bounds);

/// Earth-Sun configuration for the solar gravity field estimate.
/// Construction validates all parameters positive and R_E < R_O.
struct GravityScenario {
  double M_earth;       // Earth mass, kg
  double R_E;           // Earth radius, m
  double R_O;           // orbital radius, m
  double tau_E;         // orbital period, s
  double N_A;           // atomic-to-SI scale
  double c;             // wave speed, m/s
  double hbar_natural;  // inverse coupling, N^-1 m^4

  GravityScenario(double M_earth, double R_E, double R_O, double tau_E, double N_A,
                  double c, double hbar_natural);

  static GravityScenario from_constants(const ConstantsTable& c);
};

/// Mean terrestrial density 3 M_E / (4 pi R_E^3).
double earth_density(const GravityScenario& s);

/// Centripetal acceleration of the orbit, (2 pi / tau_E)^2 R_O.
double centripetal_accel(const GravityScenario& s);

/// Solar gravity field G_S = rho_E * a_C: the momentum-density swing of
/// terrestrial matter on its orbit, read as a dynamic field amplitude.
double solar_field(const GravityScenario& s);

/// Radiation-density estimate of the field at the orbit and its energy flow
/// through a surface element:
///   phi_G = (hbar/2) (G_S / 4 pi)^2      J/m^3 equivalent density
///   J_G   = phi_G * N_A * c              W/m^2, linear in hbar
struct GravityFlux {
  double phi_G;
  double J_G;
};
GravityFlux gravity_flux(const GravityScenario& s);

/// Full report; flux quoted in mW/m^2.
struct GravityReport {
  double eta_lo;
  double eta_hi;
  double band_lo_Hz;
  double band_hi_Hz;
  double rho_E;
  double a_C;
  double G_S;
  double phi_G;
  double J_G_mW_per_m2;
};
GravityReport gravity_report(const ConstantsTable& c, double k_u = 1.0);

}  // namespace dynq
