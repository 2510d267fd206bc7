#include "dynq/oscillator.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace dynq {

ProtonOscillation::ProtonOscillation(double R_p_, double d_, double omega_,
                                     double M_p_, double beta_)
    : R_p(R_p_), d(d_), omega(omega_), M_p(M_p_), beta(beta_) {
  if (!(R_p > 0.0) || !(d > 0.0) || !(d < R_p))
    throw std::invalid_argument("ProtonOscillation: requires 0 < d < R_p");
  if (!(omega > 0.0))
    throw std::invalid_argument("ProtonOscillation: requires omega > 0");
  if (!(M_p > 0.0))
    throw std::invalid_argument("ProtonOscillation: requires M_p > 0");
  if (!(beta > 0.0))
    throw std::invalid_argument("ProtonOscillation: requires beta > 0");
}

double ProtonOscillation::rho0() const {
  return 3.0 * M_p / (4.0 * std::numbers::pi * R_p * R_p * R_p);
}

double ProtonOscillation::period() const {
  return 2.0 * std::numbers::pi / omega;
}

double radius_at(const ProtonOscillation& p, double t) {
  return p.R_p + p.d * std::sin(p.omega * t);
}

double density_first_order(const ProtonOscillation& p, double t) {
  return p.rho0() * (1.0 - p.x() * std::sin(p.omega * t));
}

double dynamic_charge(const ProtonOscillation& p, double t) {
  return p.beta * p.x() * p.M_p * p.omega * p.omega * std::sin(p.omega * t);
}

double poisson_source(const ProtonOscillation& p, double t) {
  return 3.0 * dynamic_charge(p, t) /
         (4.0 * std::numbers::pi * p.R_p * p.R_p * p.R_p);
}

double poisson_source_at(const ProtonOscillation& p, double r, double t) {
  return r < p.R_p ? poisson_source(p, t) : 0.0;
}

double exterior_field(const ProtonOscillation& p, double r, double t) {
  if (r < p.R_p)
    throw std::domain_error("exterior_field: requires r >= R_p");
  return dynamic_charge(p, t) / (r * r);
}

WoodsSaxonProfile::WoodsSaxonProfile(double r_half_, double skin_, double rho0_)
    : r_half(r_half_), skin(skin_), rho0(rho0_) {
  if (!(r_half > 0.0) || !(skin > 0.0) || !(rho0 > 0.0))
    throw std::invalid_argument("WoodsSaxonProfile: parameters must be positive");
}

double woods_saxon_density(const WoodsSaxonProfile& w, double r) {
  return w.rho0 / (1.0 + std::exp((r - w.r_half) / w.skin));
}

double efold_radius(const WoodsSaxonProfile& w) {
  const double level = w.rho0 / std::numbers::e;
  return find_root([&](double r) { return woods_saxon_density(w, r) - level; },
                   0.0, 20.0, 1e-6);
}

void write_timeseries_csv(const ProtonOscillation& p, double r_probe,
                          int samples, std::ostream& out) {
  if (samples < 2)
    throw std::invalid_argument("write_timeseries_csv: requires samples >= 2");
  if (r_probe < p.R_p)
    throw std::domain_error("write_timeseries_csv: requires r_probe >= R_p");
  out << "t_s,q_D,E_at_r\n";
  const double T = p.period();
  char row[128];
  for (int j = 0; j < samples; ++j) {
    const double t = T * j / (samples - 1);
    std::snprintf(row, sizeof(row), "%.16e,%.16e,%.16e\n", t,
                  dynamic_charge(p, t), exterior_field(p, r_probe, t));
    out << row;
  }
}

}  // namespace dynq
