// dynq: dynamic-charge model calculator.
//
// Subcommands report the hydrogen energy ledger and coupling, the gravity
// band and flux estimates, dimensional-consistency checks of the model's
// force laws, oscillator time series, and a finite-difference cross-check
// of the exterior field. Exit codes: 0 success, 2 usage error, 3
// computation failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dynq/constants.hpp"
#include "dynq/gravity.hpp"
#include "dynq/hydrogen.hpp"
#include "dynq/numerics.hpp"
#include "dynq/oscillator.hpp"
#include "dynq/poisson_verify.hpp"
#include "dynq/units.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string constants_path;
  std::string format = "text";
  std::string out_path;
};

std::string g4(double v) {
  char b[48];
  std::snprintf(b, sizeof b, "%.4g", v);
  return b;
}

std::string full(double v) {
  char b[48];
  std::snprintf(b, sizeof b, "%.16e", v);
  return b;
}

std::string line(const char* label, const std::string& value,
                 const char* unit = "") {
  char b[160];
  std::snprintf(b, sizeof b, "  %-22s %s%s%s\n", label, value.c_str(),
                *unit ? " " : "", unit);
  return b;
}

dynq::ConstantsTable load_table(const RunConfig& cfg) {
  if (cfg.constants_path.empty()) return dynq::load_constants();
  std::ifstream in(cfg.constants_path);
  if (!in)
    throw UsageError("cannot open constants file '" + cfg.constants_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return dynq::load_constants(buf.str());
  } catch (const dynq::ConstantsError& e) {
    throw UsageError("constants file '" + cfg.constants_path + "': " + e.what());
  }
}

void emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out)
    throw std::runtime_error("cannot write output file '" + cfg.out_path + "'");
  out << payload;
}

ordered_json make_meta(const char* command, const RunConfig& cfg,
                       ordered_json params) {
  return ordered_json{
      {"command", command}, {"format", cfg.format}, {"params", std::move(params)}};
}

void reject_csv(const RunConfig& cfg, const char* command) {
  if (cfg.format == "csv")
    throw UsageError(std::string("csv output is not available for ") + command);
}

// ---------------------------------------------------------------- constants

int cmd_constants(const RunConfig& cfg) {
  const dynq::ConstantsTable table = load_table(cfg);
  const auto& keys = dynq::constant_keys();
  auto provenance = [&](const std::string& key) {
    return table.provenance.at(key) == dynq::Provenance::Overridden
               ? "overridden"
               : "default";
  };

  std::string payload;
  if (cfg.format == "json") {
    ordered_json values, prov;
    for (const auto& key : keys) {
      values[key] = dynq::get_constant(table, key);
      prov[key] = provenance(key);
    }
    ordered_json j{{"constants", values},
                   {"provenance", prov},
                   {"meta", make_meta("constants", cfg, ordered_json::object())}};
    payload = j.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    payload = "key,value,provenance\n";
    for (const auto& key : keys)
      payload += key + "," + full(dynq::get_constant(table, key)) + "," +
                 provenance(key) + "\n";
  } else {
    payload = "constants (SI)\n";
    for (const auto& key : keys) {
      char b[160];
      std::snprintf(b, sizeof b, "  %-14s %-14s %s\n", key.c_str(),
                    g4(dynq::get_constant(table, key)).c_str(), provenance(key));
      payload += b;
    }
  }
  emit(cfg, payload);
  return 0;
}

// -------------------------------------------------------------- units-check

int cmd_units_check(const RunConfig& cfg, const std::string& equation) {
  reject_csv(cfg, "units-check");

  std::vector<std::string> names;
  if (equation.empty() || equation == "all") {
    for (const auto& eq : dynq::builtin_equations()) names.push_back(eq.name);
  } else {
    bool known = false;
    for (const auto& eq : dynq::builtin_equations()) known |= eq.name == equation;
    if (!known) {
      std::string listing;
      for (const auto& eq : dynq::builtin_equations())
        listing += (listing.empty() ? "" : ", ") + eq.name;
      throw UsageError("unknown equation '" + equation + "' (choose from: " +
                       listing + ", all)");
    }
    names.push_back(equation);
  }

  bool all_match = true;
  std::string text;
  ordered_json checks = ordered_json::array();
  for (const auto& name : names) {
    const dynq::BuiltinCheckResult result = dynq::run_builtin_check(name);
    all_match = all_match && result.matches_expectation;

    text += name + ": target [" + result.report.target.str() + "]\n";
    ordered_json terms = ordered_json::array();
    for (std::size_t i = 0; i < result.report.terms.size(); ++i) {
      const auto& term = result.report.terms[i];
      const auto& [label, expr] = result.equation.term_exprs[i];
      char b[240];
      std::snprintf(b, sizeof b, "  %-28s %-14s [%s]%s\n", label.c_str(),
                    expr.c_str(), term.dim.str().c_str(),
                    term.consistent
                        ? ""
                        : (" INCONSISTENT, off by [" + term.ratio.str() + "]").c_str());
      text += b;
      terms.push_back(ordered_json{{"label", label},
                                   {"expr", expr},
                                   {"dim", term.dim.str()},
                                   {"ratio", term.ratio.str()},
                                   {"consistent", term.consistent}});
    }
    text += std::string("  verdict: ") +
            (result.report.consistent ? "consistent" : "inconsistent") +
            " (expected " +
            (result.equation.expect_consistent ? "consistent" : "inconsistent") +
            ")" + (result.matches_expectation ? "" : "  MISMATCH") + "\n";
    checks.push_back(ordered_json{
        {"name", name},
        {"target", result.report.target.str()},
        {"consistent", result.report.consistent},
        {"expected_consistent", result.equation.expect_consistent},
        {"matches_expectation", result.matches_expectation},
        {"terms", terms}});
  }

  std::string payload;
  if (cfg.format == "json") {
    ordered_json j{{"checks", checks},
                   {"all_match", all_match},
                   {"meta", make_meta("units-check", cfg,
                                      ordered_json{{"equation",
                                                    equation.empty() ? "all"
                                                                     : equation}})}};
    payload = j.dump(2) + "\n";
  } else {
    payload = text;
    payload += all_match ? "all verdicts match expectations\n"
                         : "verdict mismatch detected\n";
  }
  emit(cfg, payload);
  return all_match ? 0 : 3;
}

// --------------------------------------------------------------- oscillator

struct OscillatorArgs {
  double rp_fm = 1.4;
  double d_over_rp = 4.6e-6;
  double nu = 6.57e15;
  int samples = 64;
  double r_over_rp = 1.0;
};

dynq::ProtonOscillation make_oscillation(const OscillatorArgs& a,
                                         const dynq::ConstantsTable& table) {
  if (!(a.rp_fm >= 0.1 && a.rp_fm <= 10.0))
    throw UsageError("--rp-fm must lie in [0.1, 10] fm");
  if (!(a.d_over_rp > 0.0 && a.d_over_rp < 1.0 / 3.0))
    throw UsageError("--d-over-rp must lie in (0, 1/3)");
  if (!(a.nu > 0.0 && a.nu <= 1e20))
    throw UsageError("--nu must lie in (0, 1e20] Hz");
  const double R_p = a.rp_fm * 1e-15;
  return {R_p, a.d_over_rp * R_p, 2.0 * std::numbers::pi * a.nu, table.M_p};
}

int cmd_oscillator(const RunConfig& cfg, const OscillatorArgs& args) {
  if (args.samples < 2 || args.samples > 1'000'000)
    throw UsageError("--samples must lie in [2, 1000000]");
  if (!(args.r_over_rp >= 1.0 && args.r_over_rp <= 1e6))
    throw UsageError("--r-over-rp must lie in [1, 1e6]");
  const dynq::ConstantsTable table = load_table(cfg);
  const dynq::ProtonOscillation p = make_oscillation(args, table);
  if (p.first_order_strained())
    std::cerr << "warning: strain x = " << g4(p.x())
              << " exceeds the first-order validity range x <= 0.1\n";

  const double r_probe = args.r_over_rp * p.R_p;
  std::string payload;
  if (cfg.format == "json") {
    ordered_json t = ordered_json::array(), q = ordered_json::array(),
                 E = ordered_json::array();
    const double T = p.period();
    for (int j = 0; j < args.samples; ++j) {
      const double tj = T * j / (args.samples - 1);
      t.push_back(tj);
      q.push_back(dynq::dynamic_charge(p, tj));
      E.push_back(dynq::exterior_field(p, r_probe, tj));
    }
    ordered_json j{{"t_s", t},
                   {"q_D", q},
                   {"E_at_r", E},
                   {"meta", make_meta("oscillator", cfg,
                                      ordered_json{{"rp_fm", args.rp_fm},
                                                   {"d_over_rp", args.d_over_rp},
                                                   {"nu", args.nu},
                                                   {"samples", args.samples},
                                                   {"r_over_rp", args.r_over_rp}})}};
    payload = j.dump(2) + "\n";
  } else {
    // text and csv both emit the time series; csv is the full-precision form
    std::ostringstream out;
    dynq::write_timeseries_csv(p, r_probe, args.samples, out);
    if (cfg.format == "csv") {
      payload = out.str();
    } else {
      payload = "oscillator time series (one period)\n";
      payload += line("R_p", g4(p.R_p), "m");
      payload += line("x", g4(p.x()));
      payload += line("probe radius", g4(r_probe), "m");
      char b[160];
      std::snprintf(b, sizeof b, "  %-14s %-14s %s\n", "t_s", "q_D", "E_at_r");
      payload += b;
      const double T = p.period();
      for (int j = 0; j < args.samples; ++j) {
        const double tj = T * j / (args.samples - 1);
        std::snprintf(b, sizeof b, "  %-14s %-14s %s\n", g4(tj).c_str(),
                      g4(dynq::dynamic_charge(p, tj)).c_str(),
                      g4(dynq::exterior_field(p, r_probe, tj)).c_str());
        payload += b;
      }
    }
  }
  emit(cfg, payload);
  return 0;
}

// ----------------------------------------------------------------- hydrogen

struct HydrogenArgs {
  int n = 1;
  std::string rp_fm = "1.4";
  double rh = dynq::kDefaultAtomRadius;
  double ws_rhalf = 1.07;
  double ws_skin = 0.55;
};

double resolve_rp_fm(const HydrogenArgs& a, bool* from_profile = nullptr) {
  if (a.rp_fm == "from-woods-saxon") {
    if (from_profile) *from_profile = true;
    if (!(a.ws_rhalf > 0.0) || !(a.ws_skin > 0.0))
      throw UsageError("--ws-rhalf and --ws-skin must be positive");
    return dynq::efold_radius(dynq::WoodsSaxonProfile{a.ws_rhalf, a.ws_skin});
  }
  if (from_profile) *from_profile = false;
  char* end = nullptr;
  const double v = std::strtod(a.rp_fm.c_str(), &end);
  if (a.rp_fm.empty() || end != a.rp_fm.c_str() + a.rp_fm.size())
    throw UsageError("--rp-fm must be a number in fm or 'from-woods-saxon'");
  if (!(v >= 0.1 && v <= 10.0))
    throw UsageError("--rp-fm must lie in [0.1, 10] fm");
  return v;
}

int cmd_hydrogen(const RunConfig& cfg, const HydrogenArgs& args) {
  reject_csv(cfg, "hydrogen");
  if (args.n < 1 || args.n > 1'000'000)
    throw UsageError("--n must lie in [1, 1000000]");
  if (!(args.rh >= 1e-11 && args.rh <= 1e-7))
    throw UsageError("--rh must lie in [1e-11, 1e-7] m");
  bool from_profile = false;
  const double rp_fm = resolve_rp_fm(args, &from_profile);
  const double R_p = rp_fm * 1e-15;
  if (!(R_p / args.rh < 1e-3))
    throw UsageError("--rp-fm / --rh must stay below 1e-3");

  const dynq::ConstantsTable table = load_table(cfg);
  const dynq::HydrogenModel model =
      dynq::HydrogenModel::from_constants(table, args.n, R_p, args.rh);
  const dynq::HydrogenReport report = dynq::hydrogen_report(model, table);

  ordered_json params{{"n", args.n},
                      {"rp_fm", rp_fm},
                      {"rp_from_profile", from_profile},
                      {"rh_m", args.rh}};

  std::string payload;
  if (cfg.format == "json") {
    ordered_json j{{"n", report.n},
                   {"u_n", report.u_n},
                   {"rho0", report.rho0},
                   {"x", report.x},
                   {"W_el_eV", report.W_el_eV},
                   {"W_free_eV", report.W_free_eV},
                   {"Delta_W_eV", report.Delta_W_eV},
                   {"W_Rad_eV", report.W_Rad_eV},
                   {"eta_coupling", report.eta_coupling},
                   {"eta_times_Rp", report.eta_times_Rp},
                   {"four_pi_over_eta", report.four_pi_over_eta},
                   {"hbar_reference", report.hbar_reference},
                   {"rel_dev", report.rel_dev},
                   {"meta", make_meta("hydrogen", cfg, params)}};
    payload = j.dump(2) + "\n";
  } else {
    char head[160];
    std::snprintf(head, sizeof head,
                  "hydrogen state n=%d  (R_p = %s m%s, R_H = %s m)\n", report.n,
                  g4(R_p).c_str(),
                  from_profile ? ", e-fold radius of the density profile" : "",
                  g4(args.rh).c_str());
    payload = head;
    payload += line("u_n", g4(report.u_n), "m/s");
    payload += line("rho0", g4(report.rho0), "kg/m");
    payload += line("x", g4(report.x));
    payload += line("W_el", g4(report.W_el_eV), "eV");
    payload += line("W_free", g4(report.W_free_eV), "eV");
    payload += line("Delta_W", g4(report.Delta_W_eV), "eV");
    payload += line("W_Rad", g4(report.W_Rad_eV), "eV");
    payload += line("eta", g4(report.eta_coupling), "N/m^4");
    payload += line("eta * R_p", g4(report.eta_times_Rp));
    payload += line("4 pi / eta", g4(report.four_pi_over_eta), "N^-1 m^4");
    payload += line("reference hbar", g4(report.hbar_reference), "N^-1 m^4");
    payload += line("rel deviation", g4(report.rel_dev));

    // Numerical cross-checks, shown in the human-readable report only.
    const dynq::EnergyLedger ledger = dynq::electron_energy(model);
    const double quad = dynq::electron_energy_quadrature(model);
    const double closed =
        dynq::radiation_energy_closed_form(model, report.eta_coupling);
    const double rad_quad =
        dynq::radiation_energy_quadrature(model, report.eta_coupling);
    payload += "checks\n";
    payload += line("shell quadrature / W_el", g4(quad / ledger.W_el),
                    "(density split counts the field share twice)");
    payload += line("radiation quad rel diff",
                    g4((rad_quad - closed) / closed));
  }
  emit(cfg, payload);
  return 0;
}

// ------------------------------------------------------------------ gravity

int cmd_gravity(const RunConfig& cfg, double k_u) {
  reject_csv(cfg, "gravity");
  if (!(k_u > 0.0 && k_u <= 1e6))
    throw UsageError("--ku must lie in (0, 1e6]");
  const dynq::ConstantsTable table = load_table(cfg);
  const dynq::GravityReport report = dynq::gravity_report(table, k_u);

  std::string payload;
  if (cfg.format == "json") {
    ordered_json j{{"eta_lo", report.eta_lo},
                   {"eta_hi", report.eta_hi},
                   {"band_lo_Hz", report.band_lo_Hz},
                   {"band_hi_Hz", report.band_hi_Hz},
                   {"rho_E", report.rho_E},
                   {"a_C", report.a_C},
                   {"G_S", report.G_S},
                   {"phi_G", report.phi_G},
                   {"J_G_mW_per_m2", report.J_G_mW_per_m2},
                   {"meta", make_meta("gravity", cfg, ordered_json{{"ku", k_u}})}};
    payload = j.dump(2) + "\n";
  } else {
    const dynq::FreqRatioBounds bounds =
        dynq::freq_ratio_bounds(table, table.M_p, k_u);
    char head[96];
    std::snprintf(head, sizeof head, "frequency ratio bounds (k_u = %s)\n",
                  g4(k_u).c_str());
    payload = head;
    payload += line("eta_lo", g4(report.eta_lo));
    payload += line("eta_hi", g4(report.eta_hi),
                    ("(sqrt(eps0 G) = " + g4(bounds.sqrt_eps0_G) +
                     " kept to one decade)")
                        .c_str());
    payload += line("band", g4(report.band_lo_Hz) + " .. " +
                                g4(report.band_hi_Hz),
                    "Hz");
    payload += "solar field estimate\n";
    payload += line("rho_E", g4(report.rho_E), "kg/m^3");
    payload += line("a_C", g4(report.a_C), "m/s^2");
    payload += line("G_S", g4(report.G_S));
    payload += line("phi_G", g4(report.phi_G));
    payload += line("J_G", g4(report.J_G_mW_per_m2), "mW/m^2");
  }
  emit(cfg, payload);
  return 0;
}

// ----------------------------------------------------------- poisson-verify

int cmd_poisson_verify(const RunConfig& cfg, int grid_points) {
  if (grid_points < 64 || grid_points > 16384)
    throw UsageError("--grid-points must lie in [64, 16384]");
  const dynq::ConstantsTable table = load_table(cfg);
  const dynq::ProtonOscillation p = make_oscillation(OscillatorArgs{}, table);

  if (cfg.format == "csv") {
    std::ostringstream out;
    dynq::write_radial_csv(dynq::poisson_check_solution(p, grid_points), out);
    emit(cfg, out.str());
    return 0;
  }

  const dynq::PoissonCheck check = dynq::run_poisson_check(p, grid_points);
  const dynq::PoissonConvergence conv = dynq::run_poisson_convergence(p);

  std::string payload;
  if (cfg.format == "json") {
    ordered_json j{
        {"grid_points", check.n_points},
        {"slope", check.slope},
        {"calibration", check.calibration},
        {"ext_const_dev", check.ext_const_dev},
        {"max_rel_err", check.max_rel_err},
        {"convergence",
         ordered_json{{"grid_points", conv.n_points},
                      {"max_rel_err", conv.max_rel_err},
                      {"ratio", conv.ratio}}},
        {"meta", make_meta("poisson-verify", cfg,
                           ordered_json{{"grid_points", grid_points}})}};
    payload = j.dump(2) + "\n";
  } else {
    char head[96];
    std::snprintf(head, sizeof head,
                  "exterior field cross-check (grid_points = %d)\n",
                  check.n_points);
    payload = head;
    payload += line("log-log slope", g4(check.slope), "(expected -2)");
    payload += line("calibration E r^2 / q_D", g4(check.calibration),
                    "(1/(4 pi) = 0.07958 for a monopole)");
    payload += line("E r^2 spread", g4(check.ext_const_dev));
    payload += line("max rel err vs monopole", g4(check.max_rel_err));
    payload += "convergence (grids 256, 512, 1024)\n";
    payload += line("max rel err",
                    g4(conv.max_rel_err[0]) + ", " + g4(conv.max_rel_err[1]) +
                        ", " + g4(conv.max_rel_err[2]));
    payload += line("error ratios", g4(conv.ratio[0]) + ", " + g4(conv.ratio[1]),
                    "(second order: about 4)");
  }
  emit(cfg, payload);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamic-charge model calculator"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--constants", cfg.constants_path,
                 "key=value override file for physical constants");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out_path, "write the report to a file");

  CLI::App* c_constants =
      app.add_subcommand("constants", "print the constants table");

  std::string equation;
  CLI::App* c_units =
      app.add_subcommand("units-check", "dimensional consistency of the force laws");
  c_units->add_option("equation", equation,
                      "equation to check (default: all built-in checks)");

  OscillatorArgs osc;
  CLI::App* c_osc = app.add_subcommand("oscillator", "dynamic charge over one period");
  c_osc->add_option("--rp-fm", osc.rp_fm, "proton radius, fm")
      ->capture_default_str();
  c_osc->add_option("--d-over-rp", osc.d_over_rp, "surface amplitude over R_p")
      ->capture_default_str();
  c_osc->add_option("--nu", osc.nu, "drive frequency, Hz")->capture_default_str();
  c_osc->add_option("--samples", osc.samples, "rows over one period")
      ->capture_default_str();
  c_osc->add_option("--r-over-rp", osc.r_over_rp, "probe radius over R_p")
      ->capture_default_str();

  HydrogenArgs hyd;
  CLI::App* c_hyd =
      app.add_subcommand("hydrogen", "energy ledger and coupling for one state");
  c_hyd->add_option("--n", hyd.n, "principal state index")->capture_default_str();
  c_hyd->add_option("--rp-fm", hyd.rp_fm,
                    "proton radius in fm, or 'from-woods-saxon'")
      ->capture_default_str();
  c_hyd->add_option("--rh", hyd.rh, "atom radius, m")->capture_default_str();
  c_hyd->add_option("--ws-rhalf", hyd.ws_rhalf,
                    "density profile half radius, fm")
      ->capture_default_str();
  c_hyd->add_option("--ws-skin", hyd.ws_skin, "density profile skin depth, fm")
      ->capture_default_str();

  double k_u = 1.0;
  CLI::App* c_grav =
      app.add_subcommand("gravity", "frequency band and solar flux estimate");
  c_grav->add_option("--ku", k_u, "dimensional bookkeeping factor")
      ->capture_default_str();

  int grid_points = 256;
  CLI::App* c_poisson = app.add_subcommand(
      "poisson-verify", "finite-difference check of the exterior field");
  c_poisson->add_option("--grid-points", grid_points, "radial grid nodes")
      ->capture_default_str();

  for (CLI::App* sub : {c_constants, c_units, c_osc, c_hyd, c_grav, c_poisson})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_constants->parsed()) return cmd_constants(cfg);
    if (c_units->parsed()) return cmd_units_check(cfg, equation);
    if (c_osc->parsed()) return cmd_oscillator(cfg, osc);
    if (c_hyd->parsed()) return cmd_hydrogen(cfg, hyd);
    if (c_grav->parsed()) return cmd_gravity(cfg, k_u);
    if (c_poisson->parsed()) return cmd_poisson_verify(cfg, grid_points);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
