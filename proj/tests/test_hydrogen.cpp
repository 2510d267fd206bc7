#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dynq/constants.hpp"
#include "dynq/hydrogen.hpp"
#include "dynq/numerics.hpp"
#include "dynq/oscillator.hpp"

using namespace dynq;

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(double got, double expected) {
  return std::abs(got - expected) / std::abs(expected);
}

HydrogenModel ground_state() {
  return HydrogenModel::from_constants(load_constants());
}

}  // namespace

TEST_CASE("construction rejects unphysical parameters") {
  CHECK_THROWS_AS(HydrogenModel(0.0, 3.33e-10, 1.4e-15, 1, 9.1e-31, 1.67e-27),
                  std::invalid_argument);
  CHECK_THROWS_AS(HydrogenModel(6.57e15, 3.33e-10, 1.4e-15, 0, 9.1e-31,
                                1.67e-27),
                  std::invalid_argument);
  CHECK_THROWS_AS(HydrogenModel(6.57e15, 3.33e-10, 0.0, 1, 9.1e-31, 1.67e-27),
                  std::invalid_argument);
  CHECK_THROWS_AS(HydrogenModel(6.57e15, 1e-15, 1.4e-15, 1, 9.1e-31, 1.67e-27),
                  std::invalid_argument);
  CHECK_THROWS_AS(HydrogenModel(6.57e15, 3.33e-10, 3.33e-13, 1, 9.1e-31,
                                1.67e-27),
                  std::invalid_argument);
}

TEST_CASE("ground state velocity and wave numbers") {
  const HydrogenModel h = ground_state();
  CHECK(rel_err(state_velocity(h), 2.1878100000000000e+06) < 1e-13);
  CHECK(rel_err(h.omega(), 2.0 * kPi * 6.57e15) < 1e-15);
  CHECK(rel_err(h.wavevector(), kPi / 3.33e-10) < 1e-15);

  // Independent anchor: the speed a free electron needs to carry the
  // ionization energy, sqrt(2 * 13.6 eV / M_e). The model velocity lands
  // within 0.03% of it.
  const ConstantsTable c = load_constants();
  const double v_ion = std::sqrt(2.0 * 13.6 * c.e_charge / c.M_e);
  CHECK(rel_err(state_velocity(h), v_ion) < 3e-4);
}

TEST_CASE("density and strain amplitudes match the frozen references") {
  const HydrogenModel h = ground_state();
  CHECK(rel_err(density_amplitude(h), 4.3537640979413563e-22) < 1e-13);
  CHECK(rel_err(oscillation_amplitude(h), 1.3795310312147715e-05) < 1e-13);
  CHECK(oscillation_amplitude(h) / 3.0 < 1e-5);
}

TEST_CASE("excited states scale inversely with the index") {
  const ConstantsTable c = load_constants();
  const HydrogenModel h1 = ground_state();
  double prev_u = state_velocity(h1);
  double prev_x = oscillation_amplitude(h1);
  for (int n = 2; n <= 50; ++n) {
    const HydrogenModel hn = HydrogenModel::from_constants(c, n);
    const double u = state_velocity(hn);
    const double x = oscillation_amplitude(hn);
    CHECK(u < prev_u);
    CHECK(x < prev_x);
    CHECK(rel_err(u * n, state_velocity(h1)) < 1e-12);
    CHECK(rel_err(x * n, oscillation_amplitude(h1)) < 1e-12);
    prev_u = u;
    prev_x = x;
  }
  CHECK(oscillation_amplitude(HydrogenModel::from_constants(c, 1000000)) <
        1.4e-11);
}

TEST_CASE("energy densities split between kinetic and field shares") {
  const HydrogenModel h = ground_state();
  const double T = 1.0 / h.nu_H;

  for (double frac : {0.0, 0.11, 0.37}) {
    const double t = frac * T;
    for (double rf : {0.1, 0.25, 0.5, 0.75, 1.0}) {
      const double r = rf * h.R_H;
      const EnergyDensities d = energy_densities(h, r, t);
      const double u = state_velocity(h);
      const double coswt = std::cos(h.omega() * t);
      const double total =
          density_amplitude(h) * u * u * coswt * coswt / (r * r);
      CHECK(d.kinetic >= 0.0);
      CHECK(d.field >= -1e-15 * total);
      CHECK(rel_err(d.kinetic + d.field, total) < 1e-12);
    }
  }

  // Standing-wave nodes: all kinetic at k r = pi/2, all field at k r = pi.
  const EnergyDensities mid = energy_densities(h, h.R_H / 2.0, 0.0);
  CHECK(mid.field <= 1e-24 * mid.kinetic);
  const EnergyDensities edge = energy_densities(h, h.R_H, 0.0);
  CHECK(edge.kinetic <= 1e-24 * edge.field);

  CHECK_THROWS_AS(energy_densities(h, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(energy_densities(h, 1.01 * h.R_H, 0.0), std::domain_error);
}

TEST_CASE("energy ledger holds its exact identities") {
  const HydrogenModel h = ground_state();
  const EnergyLedger ledger = electron_energy(h);
  const double u = state_velocity(h);

  CHECK(ledger.W_free == h.M_e * u * u);
  CHECK(ledger.W_el == 0.5 * ledger.W_free);
  CHECK(ledger.Delta_W == ledger.W_free - ledger.W_el);
  CHECK(ledger.W_Rad == ledger.Delta_W);
  CHECK(ledger.Delta_W == ledger.W_el);

  const ConstantsTable c = load_constants();
  CHECK(rel_err(ledger.W_el / c.e_charge, 1.3607170053741340e+01) < 1e-13);
  CHECK(rel_err(ledger.W_free / c.e_charge, 2.7214340107482681e+01) < 1e-13);
  CHECK(rel_err(ledger.W_free / c.e_charge, c.h * c.nu_H / c.e_charge) < 2e-3);
}

TEST_CASE("shell quadrature reproduces twice the ledger energy") {
  // The literal space-time average double-counts the field share relative
  // to the ledger convention, so it comes out at W_free = 2 W_el.
  const HydrogenModel h = ground_state();
  const EnergyLedger ledger = electron_energy(h);
  const double quad = electron_energy_quadrature(h);
  CHECK(rel_err(quad, ledger.W_free) < 1e-8);
  CHECK(rel_err(quad, 2.0 * ledger.W_el) < 1e-8);
}

TEST_CASE("derived coupling is radius-free in the product eta R_p") {
  const ConstantsTable c = load_constants();
  const HydrogenModel h = ground_state();
  const EtaCoupling ec = derive_eta_coupling(h, c);
  CHECK(rel_err(ec.eta_times_Rp, 1.7757755613575682e+20) < 1e-13);
  CHECK(rel_err(ec.eta, ec.eta_times_Rp / h.R_p) < 1e-15);

  const HydrogenModel h13 =
      HydrogenModel::from_constants(c, 1, 1.3e-15);
  CHECK(rel_err(derive_eta_coupling(h13, c).eta_times_Rp, ec.eta_times_Rp) <
        1e-15);
}

TEST_CASE("inverse coupling reproduces the frozen radius scan") {
  const ConstantsTable c = load_constants();
  const HydrogenModel h = ground_state();

  const HbarEstimate at13 = hbar_from_radius(h, 1.3e-15, c);
  const HbarEstimate at14 = hbar_from_radius(h, 1.4e-15, c);
  const HbarEstimate at15 = hbar_from_radius(h, 1.5e-15, c);
  CHECK(rel_err(at13.four_pi_over_eta, 9.1995194404961576e-35) < 1e-13);
  CHECK(rel_err(at14.four_pi_over_eta, 9.9071747820727848e-35) < 1e-13);
  CHECK(rel_err(at15.four_pi_over_eta, 1.0614830123649412e-34) < 1e-13);
  CHECK(at14.reference == c.hbar_natural);
  CHECK(std::abs(at14.rel_dev - (-6.0575120228258658e-02)) < 1e-13);
  CHECK(at13.radius_in_window);
  CHECK(at14.radius_in_window);
  CHECK(at15.radius_in_window);
  CHECK_FALSE(hbar_from_radius(h, 0.4e-15, c).radius_in_window);
  CHECK_FALSE(hbar_from_radius(h, 3.5e-15, c).radius_in_window);
  CHECK_THROWS_AS(hbar_from_radius(h, 0.0, c), std::invalid_argument);
}

TEST_CASE("closed-form radiated energy equals half a quantum at the derived coupling") {
  const ConstantsTable c = load_constants();
  const HydrogenModel h = ground_state();
  const EtaCoupling ec = derive_eta_coupling(h, c);
  const double W = radiation_energy_closed_form(h, ec.eta);
  CHECK(rel_err(W, 0.5 * c.hbar_si * h.omega()) < 1e-14);
  CHECK_THROWS_AS(radiation_energy_closed_form(h, 0.0), std::invalid_argument);
}

TEST_CASE("coupling solved from the energy condition matches the closed form") {
  const ConstantsTable c = load_constants();
  const HydrogenModel h = ground_state();
  const double eta0 = derive_eta_coupling(h, c).eta;
  const double target = 0.5 * c.hbar_si * h.omega();
  const double solved = find_root(
      [&](double eta) { return radiation_energy_closed_form(h, eta) - target; },
      eta0 / 10.0, eta0 * 10.0, eta0 * 1e-12);
  CHECK(rel_err(solved, eta0) < 1e-10);
}

TEST_CASE("radiation quadrature agrees with the closed form") {
  const ConstantsTable c = load_constants();
  const HydrogenModel h = ground_state();
  const double eta = derive_eta_coupling(h, c).eta;
  const double closed = radiation_energy_closed_form(h, eta);
  const double quad = radiation_energy_quadrature(h, eta);
  CHECK(rel_err(quad, closed) < 1e-3);
  // The finite shell truncates an O(R_p / R_H) tail.
  CHECK(rel_err(quad, closed) < 3.0 * h.R_p / h.R_H);
  CHECK(quad < closed);
}

TEST_CASE("nucleon profile radius chains into the coupling scan") {
  const ConstantsTable c = load_constants();
  const HydrogenModel h = ground_state();
  const double rp_fm = efold_radius(WoodsSaxonProfile{});
  const HbarEstimate est = hbar_from_radius(h, rp_fm * 1e-15, c);
  CHECK(rel_err(est.four_pi_over_eta, 9.6788049917925393e-35) < 1e-6);
  CHECK(est.radius_in_window);
  CHECK(std::abs(est.rel_dev) < 0.10);
}

TEST_CASE("report collects the full state summary") {
  const ConstantsTable c = load_constants();
  const HydrogenModel h = ground_state();
  const HydrogenReport r = hydrogen_report(h, c);

  CHECK(r.n == 1);
  CHECK(r.u_n == state_velocity(h));
  CHECK(r.rho0 == density_amplitude(h));
  CHECK(r.x == oscillation_amplitude(h));
  CHECK(rel_err(r.W_el_eV, 1.3607170053741340e+01) < 1e-13);
  CHECK(rel_err(r.W_free_eV, 2.7214340107482681e+01) < 1e-13);
  CHECK(r.Delta_W_eV == r.W_Rad_eV);
  CHECK(rel_err(r.eta_times_Rp, 1.7757755613575682e+20) < 1e-13);
  CHECK(rel_err(r.four_pi_over_eta, 9.9071747820727848e-35) < 1e-13);
  CHECK(r.hbar_reference == c.hbar_natural);
  CHECK(std::abs(r.rel_dev - (-6.0575120228258658e-02)) < 1e-13);
  CHECK(rel_err(r.eta_coupling, r.eta_times_Rp / h.R_p) < 1e-15);
}

TEST_CASE("report responds to constant overrides") {
  const ConstantsTable c = load_constants("nu_H = 3.285e15");
  const HydrogenModel h = HydrogenModel::from_constants(c);
  const HydrogenReport r = hydrogen_report(h, c);
  // u scales linearly with the drive, energies quadratically.
  CHECK(rel_err(r.u_n, 0.5 * 2.1878100000000000e+06) < 1e-12);
  CHECK(rel_err(r.W_el_eV, 0.25 * 1.3607170053741340e+01) < 1e-12);
}
