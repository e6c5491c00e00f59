#pragma once

// Dense square complex matrices for elements of GL(2^n, C), row-major.

#include <complex>
#include <stdexcept>
#include <vector>

#include "qsg/mat2.hpp"

namespace qsg {

struct ComplexMatrix {
  int dim = 0;
  std::vector<cplx> a;  // row-major, dim*dim entries

  ComplexMatrix() = default;
  explicit ComplexMatrix(int d) : dim(d), a(static_cast<std::size_t>(d) * d) {
    if (d <= 0) throw std::invalid_argument("ComplexMatrix: dim must be > 0");
  }

  static ComplexMatrix identity(int d) {
    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix from(const Mat2& b) {
    ComplexMatrix m(2);
    m.at(0, 0) = b.m00;
    m.at(0, 1) = b.m01;
    m.at(1, 0) = b.m10;
    m.at(1, 1) = b.m11;
    return m;
  }

  cplx& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
  const cplx& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * dim + j];
  }

  bool operator==(const ComplexMatrix&) const = default;

  ComplexMatrix operator+(const ComplexMatrix& o) const {
    check_same_dim(o);
    ComplexMatrix r(dim);
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] + o.a[k];
    return r;
  }

  ComplexMatrix operator-(const ComplexMatrix& o) const {
    check_same_dim(o);
    ComplexMatrix r(dim);
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] - o.a[k];
    return r;
  }

  ComplexMatrix operator*(cplx s) const {
    ComplexMatrix r(dim);
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] * s;
    return r;
  }

  ComplexMatrix operator*(const ComplexMatrix& o) const {
    check_same_dim(o);
    ComplexMatrix r(dim);
    for (int i = 0; i < dim; ++i) {
      for (int k = 0; k < dim; ++k) {
        const cplx v = at(i, k);
        if (v == cplx{}) continue;
        for (int j = 0; j < dim; ++j) r.at(i, j) += v * o.at(k, j);
      }
    }
    return r;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim; ++i) t += at(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& v : a) m = std::max(m, std::abs(v));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const cplx& v : a) s += std::norm(v);
    return std::sqrt(s);
  }

  double max_abs_diff_identity() const {
    double m = 0.0;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        m = std::max(m, std::abs(at(i, j) - (i == j ? cplx{1.0} : cplx{})));
    return m;
  }

 private:
  void check_same_dim(const ComplexMatrix& o) const {
    if (dim != o.dim)
      throw std::invalid_argument("ComplexMatrix: dimension mismatch");
  }
};

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_abs();
}

// Block Kronecker product: (A (x) B)[i0*db+i1][j0*db+j1] = A[i0][j0] B[i1][j1].
inline ComplexMatrix kron(const ComplexMatrix& A, const ComplexMatrix& B) {
  ComplexMatrix r(A.dim * B.dim);
  for (int i0 = 0; i0 < A.dim; ++i0) {
    for (int j0 = 0; j0 < A.dim; ++j0) {
      const cplx v = A.at(i0, j0);
      if (v == cplx{}) continue;
      for (int i1 = 0; i1 < B.dim; ++i1)
        for (int j1 = 0; j1 < B.dim; ++j1)
          r.at(i0 * B.dim + i1, j0 * B.dim + j1) = v * B.at(i1, j1);
    }
  }
  return r;
}

}  // namespace qsg
