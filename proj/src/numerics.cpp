#include "dynq/numerics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

namespace dynq {

namespace {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1], positive half.
// Nodes 1, 3, 5, 7 are the Gauss abscissae (7 is the centre).
constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double kronrod;
  double gauss;
  double err;
  double resabs;  // Kronrod estimate of the integral of |f|
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kronrod = 0.0;
  double gauss = 0.0;
  double resabs = 0.0;
  for (int j = 0; j < 8; ++j) {
    double fsum, fabs_sum;
    if (j == 7) {
      fsum = f(mid);
      fabs_sum = std::abs(fsum);
    } else {
      const double flo = f(mid - half * kNodes[j]);
      const double fhi = f(mid + half * kNodes[j]);
      fsum = flo + fhi;
      fabs_sum = std::abs(flo) + std::abs(fhi);
    }
    if (!std::isfinite(fsum))
      throw std::invalid_argument(
          "integrate_1d: integrand returned a non-finite value");
    kronrod += kKronrodWeights[j] * fsum;
    resabs += kKronrodWeights[j] * fabs_sum;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  resabs *= half;
  return {kronrod, gauss, std::abs(kronrod - gauss), resabs};
}

struct AdaptState {
  const std::function<double(double)>& f;
  long long evals = 0;
  bool converged = true;
};

constexpr int kMaxDepth = 48;
constexpr long long kMaxEvals = 4'000'000;

// A panel whose error estimate sits at the rounding floor of its own |f|
// integral cannot be improved by splitting; per-panel floors sum to about
// 1e-14 of the integral of |f|, the attainable limit of the rel_tol range.
double noise_floor(const Panel& panel) {
  return 50.0 * 2.220446049250313e-16 * panel.resabs;
}

double refine(AdaptState& state, double a, double b, double tol_abs, int depth) {
  const Panel panel = gk15(state.f, a, b);
  state.evals += 15;
  if (panel.err <= tol_abs || panel.err <= noise_floor(panel))
    return panel.kronrod;
  if (depth >= kMaxDepth || state.evals > kMaxEvals) {
    state.converged = false;
    return panel.kronrod;
  }
  const double mid = 0.5 * (a + b);
  return refine(state, a, mid, 0.5 * tol_abs, depth + 1) +
         refine(state, mid, b, 0.5 * tol_abs, depth + 1);
}

}  // namespace

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    double rel_tol) {
  if (!(a < b)) throw std::invalid_argument("integrate_1d: requires a < b");
  if (!(rel_tol >= 1e-14 && rel_tol <= 1e-2))
    throw std::invalid_argument(
        "integrate_1d: rel_tol must lie in [1e-14, 1e-2]");

  const double mid = 0.5 * (a + b);

  // The relative budget needs the integral's magnitude, and a single
  // whole-interval panel can misjudge it badly when the integrand is steep.
  // A loose scouting pass fixes the scale before the strict pass runs.
  AdaptState scout{f};
  const Panel whole = gk15(f, a, b);
  scout.evals = 15;
  double scale = std::max(std::abs(whole.kronrod), 1e-300);
  if (whole.err > 1e-3 * scale) {
    const double coarse = refine(scout, a, mid, 0.5e-3 * scale, 1) +
                          refine(scout, mid, b, 0.5e-3 * scale, 1);
    scale = std::max(std::abs(coarse), 1e-300);
  } else if (whole.err <= rel_tol * scale) {
    return whole.kronrod;
  }

  AdaptState state{f};
  const double tol_abs = rel_tol * scale;
  const double result = refine(state, a, mid, 0.5 * tol_abs, 1) +
                        refine(state, mid, b, 0.5 * tol_abs, 1);
  if (!state.converged)
    throw QuadratureError(
        "integrate_1d: tolerance not reached within refinement budget",
        result);
  return result;
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("find_root: requires tol > 0");
  if (!(lo < hi)) throw std::invalid_argument("find_root: requires lo < hi");
  double flo = f(lo);
  if (flo == 0.0) return lo;
  double fhi = f(hi);
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0))
    throw std::invalid_argument("find_root: no sign change on [lo, hi]");

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket below representable width
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

RadialGrid::RadialGrid(double r_min_, double r_max_, int n_points_)
    : r_min(r_min_), r_max(r_max_), n_points(n_points_) {
  if (!(r_min >= 0.0) || !(r_min < r_max))
    throw std::invalid_argument("RadialGrid: requires 0 <= r_min < r_max");
  if (n_points < 16)
    throw std::invalid_argument("RadialGrid: requires n_points >= 16");
}

RadialSolution solve_radial_poisson(const std::function<double(double)>& source,
                                    const RadialGrid& grid,
                                    double total_charge) {
  const int n = grid.n_points;
  const double h = grid.spacing();

  // Face radius between nodes i and i+1, and the face coefficient r_f^2 / h.
  auto r_face = [&](int i) { return grid.r_min + (i + 0.5) * h; };
  auto face_coef = [&](int i) {
    const double rf = r_face(i);
    return rf * rf / h;
  };
  // Source integrated over cell i: s(r_i) * (r_hi^3 - r_lo^3) / 3.
  auto cell_source = [&](int i) {
    const double lo = i == 0 ? grid.r_min : r_face(i - 1);
    const double hi = r_face(i);
    return source(grid.r(i)) * (hi * hi * hi - lo * lo * lo) / 3.0;
  };

  std::vector<double> sub(n, 0.0), diag(n, 0.0), sup(n, 0.0), rhs(n, 0.0);
  diag[0] = -face_coef(0);
  sup[0] = face_coef(0);
  rhs[0] = -cell_source(0);
  for (int i = 1; i < n - 1; ++i) {
    sub[i] = face_coef(i - 1);
    diag[i] = -(face_coef(i - 1) + face_coef(i));
    sup[i] = face_coef(i);
    rhs[i] = -cell_source(i);
  }
  diag[n - 1] = 1.0;
  rhs[n - 1] = total_charge / (4.0 * std::numbers::pi * grid.r_max);

  // Thomas algorithm.
  std::vector<double> cp(n, 0.0), dp(n, 0.0);
  double pivot = diag[0];
  if (pivot == 0.0)
    throw std::invalid_argument("solve_radial_poisson: singular system");
  cp[0] = sup[0] / pivot;
  dp[0] = rhs[0] / pivot;
  for (int i = 1; i < n; ++i) {
    pivot = diag[i] - sub[i] * cp[i - 1];
    if (pivot == 0.0)
      throw std::invalid_argument("solve_radial_poisson: singular system");
    cp[i] = sup[i] / pivot;
    dp[i] = (rhs[i] - sub[i] * dp[i - 1]) / pivot;
  }

  RadialSolution sol{grid, std::vector<double>(n), std::vector<double>(n)};
  sol.phi[n - 1] = dp[n - 1];
  for (int i = n - 2; i >= 0; --i) sol.phi[i] = dp[i] - cp[i] * sol.phi[i + 1];

  for (int i = 1; i < n - 1; ++i)
    sol.E[i] = -(sol.phi[i + 1] - sol.phi[i - 1]) / (2.0 * h);
  sol.E[0] = -(-3.0 * sol.phi[0] + 4.0 * sol.phi[1] - sol.phi[2]) / (2.0 * h);
  sol.E[n - 1] =
      -(3.0 * sol.phi[n - 1] - 4.0 * sol.phi[n - 2] + sol.phi[n - 3]) / (2.0 * h);
  return sol;
}

void write_radial_csv(const RadialSolution& sol, std::ostream& out) {
  out << "r_m,phi,E\n";
  char row[128];
  for (int i = 0; i < sol.grid.n_points; ++i) {
    std::snprintf(row, sizeof(row), "%.16e,%.16e,%.16e\n", sol.grid.r(i),
                  sol.phi[i], sol.E[i]);
    out << row;
  }
}

}  // namespace dynq
