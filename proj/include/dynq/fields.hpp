#pragma once

#include <cmath>

namespace dynq {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec3 operator*(double s, const Vec3& v) {
    return {s * v.x, s * v.y, s * v.z};
  }
  friend Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }
};

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// Electromagnetic state of a point of charge q at lever arm r: field
/// vectors E, B and velocity u. Construction rejects non-finite components
/// (std::invalid_argument). The velocity is not clamped; superluminal()
/// flags |u| >= c for the caller.
struct FieldState {
  Vec3 E;
  Vec3 B;
  Vec3 u;
  double q = 0.0;
  Vec3 r;

  FieldState(const Vec3& E, const Vec3& B, const Vec3& u, double q,
             const Vec3& r = {});

  bool superluminal(double c) const { return norm(u) >= c; }
};

/// Force on the state in the natural unit system, where the coupling enters
/// through the inverse coupling hbar (N^-1 m^4):
/// F = hbar * q * (E/(4 pi) + u x B/(4 pi)). Linear in q and E, and the
/// magnetic part flips sign under u -> -u. Requires hbar > 0.
Vec3 lorentz_force(const FieldState& s, double hbar_natural);

/// L = r x F with F from lorentz_force. Zero whenever r is parallel to the
/// net force.
Vec3 angular_momentum(const FieldState& s, double hbar_natural);

/// Radiation energy density (hbar/2) [ (E/(4 pi))^2 + c^2 (B/(4 pi))^2 ].
/// Non-negative, zero only for vanishing fields. Requires hbar > 0, c > 0.
double radiation_density(const Vec3& E, const Vec3& B, double hbar_natural,
                         double c);

/// The same density written through the coupling eta = 4 pi / hbar:
/// (1/(8 pi eta)) (E^2 + c^2 B^2). Kept as an independent evaluation route;
/// the two expressions agree identically when eta * hbar = 4 pi.
double radiation_density_from_coupling(const Vec3& E, const Vec3& B,
                                       double eta, double c);

}  // namespace dynq
