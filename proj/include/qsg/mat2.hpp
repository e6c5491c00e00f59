#pragma once

// Complex 2x2 matrices, the Pauli matrices, and SU(2) membership checks.

#include <complex>
#include <stdexcept>

#include "qsg/defaults.hpp"

namespace qsg {

using cplx = std::complex<double>;

struct Mat2 {
  cplx m00, m01, m10, m11;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  bool operator==(const Mat2&) const = default;

  Mat2 operator+(const Mat2& o) const {
    return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
  }

  Mat2 operator-(const Mat2& o) const {
    return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11};
  }

  Mat2 operator*(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
  }

  Mat2 operator*(cplx s) const { return {m00 * s, m01 * s, m10 * s, m11 * s}; }

  Mat2 adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }

  cplx det() const { return m00 * m11 - m01 * m10; }

  cplx trace() const { return m00 + m11; }

  double max_abs() const {
    double m = std::abs(m00);
    m = std::max(m, std::abs(m01));
    m = std::max(m, std::abs(m10));
    return std::max(m, std::abs(m11));
  }

  // max-entry distance from the identity of U adj(U), plus det offset
  double su2_defect() const {
    const Mat2 g = (*this) * adjoint() - identity();
    return std::max(g.max_abs(), std::abs(det() - 1.0));
  }

  bool is_su2(double tol) const { return su2_defect() <= tol; }
};

inline double max_abs_diff(const Mat2& a, const Mat2& b) {
  return (a - b).max_abs();
}

inline Mat2 pauli(int k) {
  switch (k) {
    case 1:
      return {0.0, 1.0, 1.0, 0.0};
    case 2:
      return {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0};
    case 3:
      return {1.0, 0.0, 0.0, -1.0};
    default:
      throw std::invalid_argument("pauli: k must be 1, 2 or 3");
  }
}

}  // namespace qsg
