#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dynq/constants.hpp"

using namespace dynq;

TEST_CASE("default table carries the reference values") {
  const ConstantsTable t = load_constants();
  CHECK(t.M_e == 9.1093837015e-31);
  CHECK(t.M_p == 1.67262192369e-27);
  CHECK(t.h == 6.62607015e-34);
  CHECK(t.e_charge == 1.602176634e-19);
  CHECK(t.eps0 == 8.8541878128e-12);
  CHECK(t.G == 6.67430e-11);
  CHECK(t.N_A == 6.02214076e23);
  CHECK(t.c == 2.99792458e8);
  CHECK(t.M_earth == 5.9722e24);
  CHECK(t.R_E == 6.371e6);
  CHECK(t.R_O == 1.496e11);
  CHECK(t.tau_E == 3.156e7);
  CHECK(t.nu_H == 6.57e15);
  CHECK(t.hbar_natural == 1.0546e-34);
  for (const std::string& key : constant_keys())
    CHECK(t.provenance.at(key) == Provenance::Default);
}

TEST_CASE("hbar_si is h over two pi to machine precision") {
  const ConstantsTable t = load_constants();
  const double expected = t.h / (2.0 * std::numbers::pi);
  CHECK(std::abs(t.hbar_si - expected) <= 1e-12 * expected);
  CHECK(std::abs(t.hbar_si - 1.054571817e-34) <= 1e-9 * 1.054571817e-34);
}

TEST_CASE("drive frequency reproduces the ionization quantum") {
  const ConstantsTable t = load_constants();
  const double eV = t.h * t.nu_H / t.e_charge;
  CHECK(eV == doctest::Approx(27.2).epsilon(5e-3));
}

TEST_CASE("key listing matches lookup") {
  const ConstantsTable t = load_constants();
  CHECK(constant_keys().size() == 15);
  CHECK(get_constant(t, "M_e") == t.M_e);
  CHECK(get_constant(t, "M_E") == t.M_earth);
  CHECK(get_constant(t, "hbar_natural") == t.hbar_natural);
  CHECK_THROWS_AS(get_constant(t, "alpha"), std::out_of_range);
}

TEST_CASE("loading is deterministic") {
  CHECK(load_constants() == load_constants());
  CHECK(load_constants("nu_H = 1e15") == load_constants("nu_H = 1e15"));
}

TEST_CASE("overrides replace values and mark provenance") {
  const ConstantsTable t = load_constants(
      "# model variant\n"
      "nu_H = 1.0e15\n"
      "\n"
      "R_E=6.4e6   # trailing comment\n");
  CHECK(t.nu_H == 1.0e15);
  CHECK(t.R_E == 6.4e6);
  CHECK(t.provenance.at("nu_H") == Provenance::Overridden);
  CHECK(t.provenance.at("R_E") == Provenance::Overridden);
  CHECK(t.provenance.at("M_e") == Provenance::Default);
  CHECK(t.M_e == load_constants().M_e);
}

TEST_CASE("overriding h alone recomputes hbar_si") {
  const ConstantsTable t = load_constants("h = 6.0e-34");
  CHECK(t.h == 6.0e-34);
  CHECK(t.hbar_si == t.h / (2.0 * std::numbers::pi));
  CHECK(t.provenance.at("h") == Provenance::Overridden);
}

TEST_CASE("consistent explicit hbar_si override is accepted") {
  const double h = 6.0e-34;
  const double hbar = h / (2.0 * std::numbers::pi);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "h = %.17g\nhbar_si = %.17g\n", h, hbar);
  const ConstantsTable t = load_constants(buf);
  CHECK(t.hbar_si == hbar);
}

TEST_CASE("contradictory hbar_si override is rejected") {
  CHECK_THROWS_AS(load_constants("hbar_si = 2.0e-34"), ConstantsError);
  CHECK_THROWS_AS(load_constants("h = 6.0e-34\nhbar_si = 1.0545718e-34"),
                  ConstantsError);
}

TEST_CASE("parse failures name the offending line") {
  const auto line_of = [](const char* text) {
    try {
      load_constants(text);
    } catch (const ConstantsError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("garbage") == 1);
  CHECK(line_of("nu_H = 1e15\nalpha = 7e-3") == 2);
  CHECK(line_of("\n\nnu_H = fast") == 3);
  CHECK(line_of("nu_H = 1e15 trailing") == 1);
  CHECK(line_of("nu_H =") == 1);
}

TEST_CASE("non-finite and non-positive values are rejected") {
  CHECK_THROWS_AS(load_constants("nu_H = 0"), ConstantsError);
  CHECK_THROWS_AS(load_constants("nu_H = -3e15"), ConstantsError);
  CHECK_THROWS_AS(load_constants("nu_H = inf"), ConstantsError);
  CHECK_THROWS_AS(load_constants("nu_H = nan"), ConstantsError);
}

TEST_CASE("comments and blank lines are ignored") {
  const ConstantsTable t = load_constants(
      "# a\n"
      "   \n"
      "# b = 3\n");
  CHECK(t == load_constants());
}
