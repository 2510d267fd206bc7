#include "dynq/fields.hpp"

#include <numbers>
#include <stdexcept>

namespace dynq {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;

bool finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}
}  // namespace

FieldState::FieldState(const Vec3& E_, const Vec3& B_, const Vec3& u_,
                       double q_, const Vec3& r_)
    : E(E_), B(B_), u(u_), q(q_), r(r_) {
  if (!finite(E) || !finite(B) || !finite(u) || !finite(r) ||
      !std::isfinite(q))
    throw std::invalid_argument("FieldState: components must be finite");
}

Vec3 lorentz_force(const FieldState& s, double hbar_natural) {
  if (!(hbar_natural > 0.0))
    throw std::invalid_argument("lorentz_force: requires hbar > 0");
  const Vec3 drive = (1.0 / kFourPi) * (s.E + cross(s.u, s.B));
  return hbar_natural * s.q * drive;
}

Vec3 angular_momentum(const FieldState& s, double hbar_natural) {
  return cross(s.r, lorentz_force(s, hbar_natural));
}

double radiation_density(const Vec3& E, const Vec3& B, double hbar_natural,
                         double c) {
  if (!(hbar_natural > 0.0) || !(c > 0.0))
    throw std::invalid_argument("radiation_density: requires hbar > 0, c > 0");
  const Vec3 e = (1.0 / kFourPi) * E;
  const Vec3 b = (1.0 / kFourPi) * B;
  return 0.5 * hbar_natural * (dot(e, e) + c * c * dot(b, b));
}

double radiation_density_from_coupling(const Vec3& E, const Vec3& B,
                                       double eta, double c) {
  if (!(eta > 0.0) || !(c > 0.0))
    throw std::invalid_argument(
        "radiation_density_from_coupling: requires eta > 0, c > 0");
  return (dot(E, E) + c * c * dot(B, B)) / (8.0 * std::numbers::pi * eta);
}

}  // namespace dynq
