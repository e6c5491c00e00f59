#pragma once

// The even subalgebra of Cl(3,0) -- spanned by {1, e23, e31, e12} -- as a
// standalone quaternion type, together with rotor exponentials and the
// sandwich action on vectors.
//
// Bivector products follow the Clifford relations: e23^2 = e31^2 = e12^2 = -1,
// e31 e23 = e12, e23 e12 = e31, e12 e31 = e23.

#include <array>
#include <cmath>
#include <stdexcept>

#include "qsg/multivector.hpp"

namespace qsg {

struct Quaternion {
  double w = 0.0;  // scalar part
  double x = 0.0;  // e23
  double y = 0.0;  // e31
  double z = 0.0;  // e12

  bool operator==(const Quaternion&) const = default;

  Quaternion operator+(const Quaternion& o) const {
    return {w + o.w, x + o.x, y + o.y, z + o.z};
  }

  Quaternion operator-() const { return {-w, -x, -y, -z}; }

  Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }

  // Product induced by the geometric product on the even subalgebra.
  Quaternion operator*(const Quaternion& o) const {
    return {
        w * o.w - x * o.x - y * o.y - z * o.z,
        w * o.x + x * o.w - y * o.z + z * o.y,
        w * o.y + y * o.w - z * o.x + x * o.z,
        w * o.z + z * o.w - x * o.y + y * o.x,
    };
  }

  // Reversion restricted to the even subalgebra.
  Quaternion conjugate() const { return {w, -x, -y, -z}; }

  double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }

  bool is_unit(double tol = kDefaultTol) const {
    return std::abs(norm() - 1.0) <= tol;
  }

  Multivector to_multivector() const {
    Multivector m;
    m.c[kScalar] = w;
    m.c[kE23] = x;
    m.c[kE31] = y;
    m.c[kE12] = z;
    return m;
  }
};

// Extracts the coefficients over {1, e23, e31, e12}.
inline Quaternion even_part(const Multivector& a) {
  return {a.c[kScalar], a.c[kE23], a.c[kE31], a.c[kE12]};
}

struct AxisAngle {
  double theta = 0.0;              // radians, in [-pi, +pi]
  std::array<double, 3> axis{};    // unit Euclidean norm

  double axis_norm() const {
    return std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] +
                     axis[2] * axis[2]);
  }

  void validate(double tol = kDefaultTol) const {
    if (std::abs(axis_norm() - 1.0) > tol)
      throw std::domain_error("AxisAngle: axis must have unit norm");
  }
};

// exp(I r theta) = cos(theta) + sin(theta) I r, where I is the pseudoscalar;
// I maps the vector r onto the bivector r1 e23 + r2 e31 + r3 e12.
inline Quaternion rotor_exp(const AxisAngle& p, double tol = kDefaultTol) {
  p.validate(tol);
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  return {c, s * p.axis[0], s * p.axis[1], s * p.axis[2]};
}

// Rotation of v by angle theta about the unit axis r, realised as the
// sandwich q v ~q with q = exp(-I r theta/2).
inline std::array<double, 3> rotor_rotate(const AxisAngle& p,
                                          const std::array<double, 3>& v,
                                          double tol = kDefaultTol) {
  p.validate(tol);
  const Quaternion q = rotor_exp({-0.5 * p.theta, p.axis}, tol);
  const Multivector qm = q.to_multivector();
  const Multivector vm = Multivector::vector(v[0], v[1], v[2]);
  const Multivector out = qm * vm * reversion(qm);
  return {out.c[kE1], out.c[kE2], out.c[kE3]};
}

}  // namespace qsg
