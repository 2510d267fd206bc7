#pragma once

#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace dynq {

/// Thrown when adaptive quadrature fails to reach the requested tolerance
/// within its depth and evaluation budgets. Carries the best estimate
/// accumulated so far.
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string& what, double best_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate) {}

  double best_estimate() const { return best_estimate_; }

private:
  double best_estimate_;
};

/// Adaptive Gauss-Kronrod (G7, K15) quadrature of f over [a, b].
///
/// The absolute error budget rel_tol * |I| is split in half at every
/// bisection, so the per-panel Kronrod-minus-Gauss estimates sum below it.
/// Evaluation order is a fixed depth-first recursion with no state beyond
/// the call stack, so results are bit-identical across runs and platforms
/// with the same floating-point semantics.
///
/// Requires a < b and 1e-14 <= rel_tol <= 1e-2 (std::invalid_argument
/// otherwise; a non-finite sample of f also raises std::invalid_argument).
/// Non-convergence raises QuadratureError. Panels whose error estimate sits
/// at the rounding floor are accepted as converged, so the attainable
/// accuracy bottoms out near 1e-14 of the integral of |f|; integrals that
/// vanish by cancellation have no relative scale and will not converge.
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    double rel_tol);

/// Bisection root finding on [lo, hi]. Requires tol > 0 and a sign change,
/// f(lo) * f(hi) <= 0 (std::invalid_argument otherwise). Returns the bracket
/// midpoint once the bracket is narrower than tol, so the result is within
/// tol of a sign change of f.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol);

/// Uniform radial grid of n_points nodes spanning [r_min, r_max].
/// Requires 0 <= r_min < r_max and n_points >= 16.
struct RadialGrid {
  double r_min = 0.0;
  double r_max = 1.0;
  int n_points = 16;

  RadialGrid(double r_min, double r_max, int n_points);

  double spacing() const { return (r_max - r_min) / (n_points - 1); }
  double r(int i) const { return r_min + i * spacing(); }
};

/// Potential and radial field sampled on a RadialGrid.
struct RadialSolution {
  RadialGrid grid;
  std::vector<double> phi;
  std::vector<double> E;  // -dphi/dr
};

/// Solve (1/r^2) d/dr (r^2 dphi/dr) = -source(r) on the grid.
///
/// Conservative finite-volume discretization: fluxes r^2 dphi/dr live on the
/// faces midway between nodes, each interior node balances its two face
/// fluxes against the source integrated over its cell (midpoint rule), and
/// the tridiagonal system is solved by the Thomas algorithm. Boundary
/// conditions: zero flux through the inner face (regularity at the origin)
/// and phi(r_max) = total_charge / (4*pi*r_max), the monopole far field.
/// The field E = -dphi/dr is recovered by central differences, one-sided
/// second-order at the endpoints.
///
/// The discrete flux balance makes the enclosed-charge law exact at faces:
/// outside the support of the source, r_f^2 * (phi[i+1]-phi[i])/h equals
/// -(integrated source)/(4*pi) * 4*pi regardless of resolution, so exterior
/// field errors come only from the O(h^2) node-centred differencing.
///
/// Throws std::invalid_argument if the assembled system is singular.
RadialSolution solve_radial_poisson(const std::function<double(double)>& source,
                                    const RadialGrid& grid,
                                    double total_charge);

/// CSV emitter for a radial solution: header "r_m,phi,E", one row per node,
/// full round-trip precision.
void write_radial_csv(const RadialSolution& sol, std::ostream& out);

}  // namespace dynq
