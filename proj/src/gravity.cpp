#include "dynq/gravity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dynq {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;
}

FrequencyBand::FrequencyBand(double lo, double hi) : lo_Hz(lo), hi_Hz(hi) {
  if (!(lo_Hz > 0.0) || !(lo_Hz <= hi_Hz))
    throw std::invalid_argument("FrequencyBand: requires 0 < lo_Hz <= hi_Hz");
}

FreqRatioBounds freq_ratio_bounds(const ConstantsTable& c, double M,
                                  double k_u) {
  if (!(M > 0.0))
    throw std::invalid_argument("freq_ratio_bounds: requires M > 0");
  if (!(k_u > 0.0))
    throw std::invalid_argument("freq_ratio_bounds: requires k_u > 0");
  FreqRatioBounds b;
  b.eta_lo = std::sqrt(k_u * kFourPi * c.eps0 * c.G * M / c.e_charge);
  b.eps0_G = c.eps0 * c.G;
  b.sqrt_eps0_G = std::sqrt(b.eps0_G);
  b.eta_hi = std::pow(10.0, std::round(std::log10(b.sqrt_eps0_G)));
  return b;
}

FrequencyBand gravity_band(double nu_E, const FreqRatioBounds& bounds) {
  if (!(nu_E > 0.0))
    throw std::invalid_argument("gravity_band: requires nu_E > 0");
  return {bounds.eta_lo * nu_E, bounds.eta_hi * nu_E};
}

GravityScenario::GravityScenario(double M_earth_, double R_E_, double R_O_,
                                 double tau_E_, double N_A_, double c_,
                                 double hbar_natural_)
    : M_earth(M_earth_),
      R_E(R_E_),
      R_O(R_O_),
      tau_E(tau_E_),
      N_A(N_A_),
      c(c_),
      hbar_natural(hbar_natural_) {
  if (!(M_earth > 0.0) || !(R_E > 0.0) || !(R_O > 0.0) || !(tau_E > 0.0) ||
      !(N_A > 0.0) || !(c > 0.0) || !(hbar_natural > 0.0))
    throw std::invalid_argument("GravityScenario: parameters must be positive");
  if (!(R_E < R_O))
    throw std::invalid_argument("GravityScenario: requires R_E < R_O");
}

GravityScenario GravityScenario::from_constants(const ConstantsTable& c) {
  return {c.M_earth, c.R_E, c.R_O, c.tau_E, c.N_A, c.c, c.hbar_natural};
}

double earth_density(const GravityScenario& s) {
  return 3.0 * s.M_earth / (kFourPi * s.R_E * s.R_E * s.R_E);
}

double centripetal_accel(const GravityScenario& s) {
  const double w = 2.0 * std::numbers::pi / s.tau_E;
  return w * w * s.R_O;
}

double solar_field(const GravityScenario& s) {
  return earth_density(s) * centripetal_accel(s);
}

GravityFlux gravity_flux(const GravityScenario& s) {
  const double amplitude = solar_field(s) / kFourPi;
  GravityFlux flux;
  flux.phi_G = 0.5 * s.hbar_natural * amplitude * amplitude;
  flux.J_G = flux.phi_G * s.N_A * s.c;
  return flux;
}

GravityReport gravity_report(const ConstantsTable& c, double k_u) {
  const FreqRatioBounds bounds = freq_ratio_bounds(c, c.M_p, k_u);
  const FrequencyBand band = gravity_band(c.nu_H, bounds);
  const GravityScenario scenario = GravityScenario::from_constants(c);
  const GravityFlux flux = gravity_flux(scenario);
  GravityReport report;
  report.eta_lo = bounds.eta_lo;
  report.eta_hi = bounds.eta_hi;
  report.band_lo_Hz = band.lo_Hz;
  report.band_hi_Hz = band.hi_Hz;
  report.rho_E = earth_density(scenario);
  report.a_C = centripetal_accel(scenario);
  report.G_S = solar_field(scenario);
  report.phi_G = flux.phi_G;
  report.J_G_mW_per_m2 = flux.J_G * 1000.0;
  return report;
}

}  // namespace dynq
