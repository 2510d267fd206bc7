#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dynq/constants.hpp"
#include "dynq/fields.hpp"
#include "dynq/gravity.hpp"

using namespace dynq;

namespace {

double rel_err(double got, double expected) {
  return std::abs(got - expected) / std::abs(expected);
}

}  // namespace

TEST_CASE("frequency bands validate their endpoints") {
  CHECK_NOTHROW(FrequencyBand(10.0, 10.0));
  CHECK_THROWS_AS(FrequencyBand(10.0, 5.0), std::invalid_argument);
  CHECK_THROWS_AS(FrequencyBand(0.0, 5.0), std::invalid_argument);
  CHECK_THROWS_AS(FrequencyBand(-1.0, 5.0), std::invalid_argument);

  const FrequencyBand band(50.0, 200.0);
  CHECK(band.overlaps(10.0, 50.0));
  CHECK(band.overlaps(200.0, 300.0));
  CHECK(band.overlaps(100.0, 120.0));
  CHECK(band.overlaps(10.0, 1e4));
  CHECK_FALSE(band.overlaps(10.0, 49.0));
  CHECK_FALSE(band.overlaps(201.0, 300.0));
}

TEST_CASE("ratio bounds reproduce the frozen references") {
  const ConstantsTable c = load_constants();
  const FreqRatioBounds b = freq_ratio_bounds(c, c.M_p);
  CHECK(rel_err(b.eta_lo, 8.8049289204736292e-15) < 1e-13);
  CHECK(rel_err(b.eps0_G, 5.9095505718971042e-22) < 1e-14);
  CHECK(rel_err(b.sqrt_eps0_G, 2.4309567194619290e-11) < 1e-14);
  CHECK(rel_err(b.eta_hi, 1e-11) < 1e-14);
  CHECK(b.eta_lo < b.eta_hi);
}

TEST_CASE("upper ratio bound keeps one-decade resolution") {
  const ConstantsTable c = load_constants();
  const FreqRatioBounds b = freq_ratio_bounds(c, c.M_p);
  const double decade = std::round(std::log10(b.sqrt_eps0_G));
  CHECK(rel_err(b.eta_hi, std::pow(10.0, decade)) < 1e-14);
  CHECK(b.eta_hi > 5e-12);
  CHECK(b.eta_hi < 2e-11);
}

TEST_CASE("lower ratio bound scales with coupling and mass") {
  const ConstantsTable c = load_constants();
  const double base = freq_ratio_bounds(c, c.M_p).eta_lo;
  CHECK(rel_err(freq_ratio_bounds(c, c.M_p, 4.0).eta_lo, 2.0 * base) < 1e-15);
  CHECK(rel_err(freq_ratio_bounds(c, 2.0 * c.M_p).eta_lo,
                std::numbers::sqrt2 * base) < 1e-14);
  CHECK(freq_ratio_bounds(c, c.M_e).eta_lo < base);
  CHECK_THROWS_AS(freq_ratio_bounds(c, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(freq_ratio_bounds(c, c.M_p, 0.0), std::invalid_argument);
}

TEST_CASE("scaled band lands in the detector window") {
  const ConstantsTable c = load_constants();
  const FreqRatioBounds b = freq_ratio_bounds(c, c.M_p);
  const FrequencyBand band = gravity_band(c.nu_H, b);
  CHECK(rel_err(band.lo_Hz, 5.7848383007511742e+01) < 1e-13);
  CHECK(rel_err(band.hi_Hz, 6.5700000000000000e+04) < 1e-13);
  CHECK(band.overlaps(10.0, 1e4));
  CHECK_THROWS_AS(gravity_band(0.0, b), std::invalid_argument);
}

TEST_CASE("scenario construction validates geometry") {
  CHECK_THROWS_AS(GravityScenario(5.9722e24, 1.496e11, 6.371e6, 3.156e7,
                                  6.02214076e23, 2.99792458e8, 1.0546e-34),
                  std::invalid_argument);
  CHECK_THROWS_AS(GravityScenario(0.0, 6.371e6, 1.496e11, 3.156e7,
                                  6.02214076e23, 2.99792458e8, 1.0546e-34),
                  std::invalid_argument);
  CHECK_THROWS_AS(GravityScenario(5.9722e24, 6.371e6, 1.496e11, 3.156e7,
                                  6.02214076e23, 2.99792458e8, 0.0),
                  std::invalid_argument);
}

TEST_CASE("solar field estimate reproduces the frozen references") {
  const GravityScenario s = GravityScenario::from_constants(load_constants());
  CHECK(rel_err(earth_density(s), 5.5134433755193877e+03) < 1e-13);
  CHECK(rel_err(centripetal_accel(s), 5.9294900027588148e-03) < 1e-13);
  CHECK(rel_err(solar_field(s), 3.2691907375919023e+01) < 1e-13);

  const GravityFlux flux = gravity_flux(s);
  CHECK(rel_err(flux.phi_G, 3.5687700279724322e-34) < 1e-13);
  CHECK(rel_err(flux.J_G * 1e3, 6.4430302175514811e+01) < 1e-13);
  CHECK(flux.J_G * 1e3 > 55.0);
  CHECK(flux.J_G * 1e3 < 85.0);
}

TEST_CASE("flux density agrees with the field-state evaluation") {
  const GravityScenario s = GravityScenario::from_constants(load_constants());
  const double via_fields = radiation_density({solar_field(s), 0.0, 0.0}, {},
                                              s.hbar_natural, s.c);
  CHECK(rel_err(gravity_flux(s).phi_G, via_fields) < 1e-14);
}

TEST_CASE("flux scales quadratically with mass and linearly with the coupling") {
  const ConstantsTable c = load_constants();
  const GravityScenario base = GravityScenario::from_constants(c);
  const GravityFlux f0 = gravity_flux(base);

  GravityScenario heavier = base;
  heavier.M_earth *= 2.0;
  const GravityFlux f2 = gravity_flux(heavier);
  CHECK(rel_err(f2.phi_G, 4.0 * f0.phi_G) < 1e-13);
  CHECK(rel_err(f2.J_G, 4.0 * f0.J_G) < 1e-13);

  GravityScenario stiffer = base;
  stiffer.hbar_natural *= 2.0;
  const GravityFlux fh = gravity_flux(stiffer);
  CHECK(rel_err(fh.phi_G, 2.0 * f0.phi_G) < 1e-15);
  CHECK(rel_err(fh.J_G, 2.0 * f0.J_G) < 1e-15);
}

TEST_CASE("report assembles both estimates") {
  const ConstantsTable c = load_constants();
  const GravityReport r = gravity_report(c);
  CHECK(rel_err(r.eta_lo, 8.8049289204736292e-15) < 1e-13);
  CHECK(rel_err(r.eta_hi, 1e-11) < 1e-14);
  CHECK(rel_err(r.band_lo_Hz, 5.7848383007511742e+01) < 1e-13);
  CHECK(rel_err(r.band_hi_Hz, 6.5700000000000000e+04) < 1e-13);
  CHECK(rel_err(r.rho_E, 5.5134433755193877e+03) < 1e-13);
  CHECK(rel_err(r.a_C, 5.9294900027588148e-03) < 1e-13);
  CHECK(rel_err(r.G_S, 3.2691907375919023e+01) < 1e-13);
  CHECK(rel_err(r.phi_G, 3.5687700279724322e-34) < 1e-13);
  CHECK(rel_err(r.J_G_mW_per_m2, 6.4430302175514811e+01) < 1e-13);

  const GravityReport r4 = gravity_report(c, 4.0);
  CHECK(rel_err(r4.eta_lo, 2.0 * r.eta_lo) < 1e-15);
  CHECK(rel_err(r4.band_lo_Hz, 2.0 * r.band_lo_Hz) < 1e-15);
  CHECK(r4.eta_hi == r.eta_hi);
  CHECK(r4.J_G_mW_per_m2 == r.J_G_mW_per_m2);
}
