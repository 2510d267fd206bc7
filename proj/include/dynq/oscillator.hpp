#pragma once

#include <iosfwd>

#include "dynq/numerics.hpp"

namespace dynq {

/// Breathing-mode proton: a uniform sphere of rest radius R_p whose surface
/// oscillates with amplitude d at angular frequency omega. To first order in
/// the strain x = 3d/R_p the interior density is modulated uniformly, and
/// the density swing acts as a dynamic charge q_D(t) = beta * x * M_p *
/// omega^2 * sin(omega t), an energy density in J/m^2.
///
/// Construction validates 0 < d < R_p, omega > 0, M_p > 0, beta > 0
/// (std::invalid_argument otherwise). The first-order expansion degrades
/// for x > 0.1; first_order_strained() flags that regime.
struct ProtonOscillation {
  double R_p;    // rest radius, m
  double d;      // surface amplitude, m
  double omega;  // angular frequency, rad/s
  double M_p;    // mass, kg
  double beta;   // dimensionless coupling

  ProtonOscillation(double R_p, double d, double omega, double M_p,
                    double beta = 1.0);

  double x() const { return 3.0 * d / R_p; }
  double rho0() const;  // rest density 3 M_p / (4 pi R_p^3), kg/m^3
  double period() const;
  bool first_order_strained() const { return x() > 0.1; }
};

/// Instantaneous surface radius R_p + d sin(omega t).
double radius_at(const ProtonOscillation& p, double t);

/// First-order interior density rho0 * (1 - x sin(omega t)).
double density_first_order(const ProtonOscillation& p, double t);

/// Dynamic charge beta * x * M_p * omega^2 * sin(omega t), J/m^2.
double dynamic_charge(const ProtonOscillation& p, double t);

/// Uniform interior source density for the radial potential equation:
/// 3 q_D / (4 pi R_p^3), the value whose volume integral over r < R_p is
/// exactly dynamic_charge(p, t).
double poisson_source(const ProtonOscillation& p, double t);

/// poisson_source inside the sphere, zero outside.
double poisson_source_at(const ProtonOscillation& p, double r, double t);

/// Exterior radial field q_D(t) / r^2. Requires r >= R_p
/// (std::domain_error otherwise).
double exterior_field(const ProtonOscillation& p, double r, double t);

/// Sigmoid nucleon density profile rho0 / (1 + exp((r - r_half)/skin)),
/// radii in fm. Defaults are the standard charge-distribution parameters
/// r_half = 1.07 fm, skin = 0.55 fm.
struct WoodsSaxonProfile {
  double r_half = 1.07;
  double skin = 0.55;
  double rho0 = 1.0;

  WoodsSaxonProfile() = default;
  WoodsSaxonProfile(double r_half, double skin, double rho0 = 1.0);
};

double woods_saxon_density(const WoodsSaxonProfile& w, double r);

/// Radius where the profile falls to rho0/e, located by bisection to 1e-6 fm
/// inside [0, 20] fm. Closed form: r_half + skin * ln(e - 1). Throws
/// std::invalid_argument if the profile never crosses rho0/e in-bracket.
double efold_radius(const WoodsSaxonProfile& w);

/// CSV emitter: header "t_s,q_D,E_at_r", `samples` rows covering one full
/// period t in [0, T], field probed at fixed radius r_probe >= R_p.
/// Requires samples >= 2.
void write_timeseries_csv(const ProtonOscillation& p, double r_probe,
                          int samples, std::ostream& out);

}  // namespace dynq
