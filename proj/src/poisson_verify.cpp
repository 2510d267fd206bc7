#include "dynq/poisson_verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace dynq {

namespace {

// Exterior comparison window: clear of the source edge and of the outer
// Dirichlet boundary.
struct Window {
  double lo;
  double hi;
};

Window comparison_window(const ProtonOscillation& p, const RadialGrid& grid) {
  return {2.0 * p.R_p, std::min(6.0 * p.R_p, 0.9 * grid.r_max)};
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

RadialGrid make_aligned_grid(const ProtonOscillation& p, int n_points) {
  const int cells_inside = std::max(32, (n_points - 1) / 8);
  const double h = p.R_p / (cells_inside + 0.5);
  return {0.0, (n_points - 1) * h, n_points};
}

RadialSolution poisson_check_solution(const ProtonOscillation& p,
                                      int n_points) {
  const RadialGrid grid = make_aligned_grid(p, n_points);
  const double t_peak = 0.25 * p.period();
  return solve_radial_poisson(
      [&](double r) { return poisson_source_at(p, r, t_peak); }, grid,
      dynamic_charge(p, t_peak));
}

PoissonCheck run_poisson_check(const ProtonOscillation& p, int n_points) {
  const RadialSolution sol = poisson_check_solution(p, n_points);
  const double t_peak = 0.25 * p.period();
  const double q = dynamic_charge(p, t_peak);
  const Window win = comparison_window(p, sol.grid);

  std::vector<double> log_r, log_E, scaled;
  double max_rel_err = 0.0;
  for (int i = 0; i < sol.grid.n_points; ++i) {
    const double r = sol.grid.r(i);
    if (r < win.lo || r > win.hi) continue;
    log_r.push_back(std::log(r));
    log_E.push_back(std::log(sol.E[i]));
    scaled.push_back(sol.E[i] * r * r / q);
    const double exact = q / (4.0 * std::numbers::pi * r * r);
    max_rel_err = std::max(max_rel_err, std::abs(sol.E[i] - exact) / exact);
  }

  const std::size_t m = log_r.size();
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mean_x += log_r[i];
    mean_y += log_E[i];
  }
  mean_x /= m;
  mean_y /= m;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxy += (log_r[i] - mean_x) * (log_E[i] - mean_y);
    sxx += (log_r[i] - mean_x) * (log_r[i] - mean_x);
  }

  const auto [min_it, max_it] = std::minmax_element(scaled.begin(), scaled.end());
  PoissonCheck check;
  check.n_points = n_points;
  check.slope = sxy / sxx;
  check.calibration = median(scaled);
  check.ext_const_dev = (*max_it - *min_it) / check.calibration;
  check.max_rel_err = max_rel_err;
  return check;
}

PoissonConvergence run_poisson_convergence(const ProtonOscillation& p) {
  PoissonConvergence conv{{256, 512, 1024}, {}, {}};
  for (int i = 0; i < 3; ++i)
    conv.max_rel_err[i] = run_poisson_check(p, conv.n_points[i]).max_rel_err;
  conv.ratio[0] = conv.max_rel_err[0] / conv.max_rel_err[1];
  conv.ratio[1] = conv.max_rel_err[1] / conv.max_rel_err[2];
  return conv;
}

}  // namespace dynq
