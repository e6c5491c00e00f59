#pragma once

// Qubits as unit vectors of C^2 carrying a group structure, and the two
// identifications of rotations with SU(2): one through unit quaternions,
// one through qubits.
//
// The quaternion map comes in two coefficient pairings that differ by
// swapping which bivector component multiplies sigma1 versus sigma2:
//   crossed: U = w Id + i y sigma1 + i x sigma2 + i z sigma3   (default)
//   direct:  U = w Id + i x sigma1 + i y sigma2 + i z sigma3
// Whether either pairing composes as a homomorphism or an anti-homomorphism
// is measured by quaternion_composition_check, never assumed.

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qsg/mat2.hpp"
#include "qsg/rotor.hpp"

namespace qsg {

struct Qubit {
  cplx c0, c1;

  bool operator==(const Qubit&) const = default;

  double norm_sq() const { return std::norm(c0) + std::norm(c1); }
  double norm() const { return std::sqrt(norm_sq()); }

  bool is_unit(double tol = kDefaultTol) const {
    return std::abs(norm() - 1.0) <= tol;
  }

  void validate(double tol = kDefaultTol) const {
    if (!is_unit(tol)) throw std::domain_error("Qubit: norm must be 1");
  }
};

inline double max_abs_diff(const Qubit& a, const Qubit& b) {
  return std::max(std::abs(a.c0 - b.c0), std::abs(a.c1 - b.c1));
}

enum class QuatPairing {
  crossed,  // y with sigma1, x with sigma2
  direct,   // x with sigma1, y with sigma2
};

// Unit quaternion -> SU(2).
inline Mat2 su2_from_quaternion(const Quaternion& q,
                                QuatPairing pairing = QuatPairing::crossed,
                                double tol = kDefaultTol) {
  if (!q.is_unit(tol))
    throw std::domain_error("su2_from_quaternion: quaternion must be unit");
  const double a = (pairing == QuatPairing::crossed) ? q.x : q.y;
  const double b = (pairing == QuatPairing::crossed) ? q.y : q.x;
  // [[ w + i z,  a + i b ],
  //  [-a + i b,  w - i z ]]
  return {cplx(q.w, q.z), cplx(a, b), cplx(-a, b), cplx(q.w, -q.z)};
}

enum class CompositionLaw { homomorphism, anti_homomorphism, both, neither };

inline const char* to_string(CompositionLaw law) {
  switch (law) {
    case CompositionLaw::homomorphism:
      return "homomorphism";
    case CompositionLaw::anti_homomorphism:
      return "anti-homomorphism";
    case CompositionLaw::both:
      return "both";
    default:
      return "neither";
  }
}

struct CompositionVerdict {
  CompositionLaw law;
  double residual_direct;    // max |F(pq) - F(p)F(q)|
  double residual_reversed;  // max |F(pq) - F(q)F(p)|
};

inline CompositionLaw classify_composition(double residual_direct,
                                           double residual_reversed,
                                           double tol) {
  const bool h = residual_direct <= tol;
  const bool a = residual_reversed <= tol;
  if (h && a) return CompositionLaw::both;
  if (h) return CompositionLaw::homomorphism;
  if (a) return CompositionLaw::anti_homomorphism;
  return CompositionLaw::neither;
}

// Measures how the quaternion map composes on one pair: with the product
// image equal to the images multiplied in the same order (homomorphism) or
// in reversed order (anti-homomorphism).
inline CompositionVerdict quaternion_composition_check(
    const Quaternion& p, const Quaternion& q,
    QuatPairing pairing = QuatPairing::crossed, double tol = kDefaultTol) {
  const Mat2 fp = su2_from_quaternion(p, pairing, tol);
  const Mat2 fq = su2_from_quaternion(q, pairing, tol);
  const Mat2 fpq = su2_from_quaternion(p * q, pairing, tol);
  const double rd = max_abs_diff(fpq, fp * fq);
  const double rr = max_abs_diff(fpq, fq * fp);
  return {classify_composition(rd, rr, tol), rd, rr};
}

// Axis-angle -> qubit, in the full-angle form
//   c0 = cos(theta) - i r3 sin(theta),  c1 = (r1 + i r2) sin(theta).
inline Qubit qubit_from_axis_angle(const AxisAngle& p,
                                   double tol = kDefaultTol) {
  p.validate(tol);
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  return {cplx(c, -p.axis[2] * s), cplx(p.axis[0] * s, p.axis[1] * s)};
}

// Qubit -> SU(2):  [[c0, -conj(c1)], [c1, conj(c0)]].
inline Mat2 su2_from_qubit(const Qubit& c, double tol = kDefaultTol) {
  c.validate(tol);
  return {c.c0, -std::conj(c.c1), c.c1, std::conj(c.c0)};
}

// Inverse of su2_from_qubit: the first column determines the element, and the
// second column is forced.
inline Qubit qubit_from_su2(const Mat2& m, double tol = kDefaultTol) {
  if (!m.is_su2(tol))
    throw std::domain_error("qubit_from_su2: matrix must lie in SU(2)");
  return {m.m00, m.m10};
}

// Group operation on qubits transported from SU(2):
// (a, b) -> (a0 b0 - conj(a1) b1,  a1 b0 + conj(a0) b1),
// the first column of su2_from_qubit(a) * su2_from_qubit(b).
inline Qubit qubit_mul(const Qubit& a, const Qubit& b,
                       double tol = kDefaultTol) {
  a.validate(tol);
  b.validate(tol);
  return {a.c0 * b.c0 - std::conj(a.c1) * b.c1,
          a.c1 * b.c0 + std::conj(a.c0) * b.c1};
}

// Group inverse: first column of the adjoint of su2_from_qubit(a).
inline Qubit qubit_inverse(const Qubit& a, double tol = kDefaultTol) {
  a.validate(tol);
  return {std::conj(a.c0), -a.c1};
}

}  // namespace qsg
