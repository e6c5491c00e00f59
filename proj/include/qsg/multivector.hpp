#pragma once

// Dense multivectors of the Clifford algebra Cl(3,0), i.e. R^3 with the
// Euclidean quadratic form, where basis vectors square to +1.
//
// Coefficient order is fixed as
//   [ 1, e1, e2, e3, e23, e31, e12, e123 ]
// with the bivectors in cyclic order (e23 = e2 e3, e31 = e3 e1, e12 = e1 e2)
// and e123 the pseudoscalar.  The 8x8 blade product table is generated at
// compile time from the defining relations e_i^2 = 1, e_i e_j = -e_j e_i.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "qsg/defaults.hpp"

namespace qsg {

enum BladeIndex : std::size_t {
  kScalar = 0,
  kE1 = 1,
  kE2 = 2,
  kE3 = 3,
  kE23 = 4,
  kE31 = 5,
  kE12 = 6,
  kE123 = 7,
};

namespace detail {

// Blade i of the coefficient basis, expressed as a canonical bit set over
// {e1, e2, e3} plus the sign relating it to the sorted product.  Only e31
// carries a sign: e31 = e3 e1 = -e1 e3.
inline constexpr std::array<unsigned, 8> kBladeBits = {0u, 1u, 2u, 4u,
                                                       6u, 5u, 3u, 7u};
inline constexpr std::array<int, 8> kBladeOrientation = {1, 1, 1, 1,
                                                         1, -1, 1, 1};

// Sign from sorting the concatenation of two canonical bit sets: counts the
// transpositions needed to interleave, one per (i in a, j in b, i > j) pair.
constexpr int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned shifted = a >> 1; shifted != 0; shifted >>= 1) {
    unsigned common = shifted & b;
    while (common != 0) {
      swaps += 1;
      common &= common - 1;
    }
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

constexpr std::size_t position_of_bits(unsigned bits) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    if (kBladeBits[i] == bits) pos = i;
  }
  return pos;
}

struct BladeProduct {
  std::size_t index;
  int sign;
};

constexpr std::array<std::array<BladeProduct, 8>, 8> make_blade_table() {
  std::array<std::array<BladeProduct, 8>, 8> table{};
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const unsigned bits = kBladeBits[i] ^ kBladeBits[j];
      const std::size_t k = position_of_bits(bits);
      // Repeated generators contract with e_i^2 = +1, so only the reordering
      // sign and the basis orientations contribute.
      const int sign = kBladeOrientation[i] * kBladeOrientation[j] *
                       reorder_sign(kBladeBits[i], kBladeBits[j]) *
                       kBladeOrientation[k];
      table[i][j] = BladeProduct{k, sign};
    }
  }
  return table;
}

inline constexpr auto kBladeTable = make_blade_table();

// grade of blade i: number of generators in its bit set
inline constexpr std::array<int, 8> kBladeGrade = {0, 1, 1, 1, 2, 2, 2, 3};

}  // namespace detail

struct Multivector {
  std::array<double, 8> c{};

  static Multivector scalar(double s) {
    Multivector m;
    m.c[kScalar] = s;
    return m;
  }

  static Multivector vector(double x, double y, double z) {
    Multivector m;
    m.c[kE1] = x;
    m.c[kE2] = y;
    m.c[kE3] = z;
    return m;
  }

  static Multivector basis(std::size_t i) {
    if (i >= 8) throw std::invalid_argument("Multivector::basis: index > 7");
    Multivector m;
    m.c[i] = 1.0;
    return m;
  }

  double operator[](std::size_t i) const { return c[i]; }
  double& operator[](std::size_t i) { return c[i]; }

  bool operator==(const Multivector&) const = default;

  Multivector operator+(const Multivector& o) const {
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }

  Multivector operator-(const Multivector& o) const {
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }

  Multivector operator-() const {
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = -c[i];
    return r;
  }

  Multivector operator*(double s) const {
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = c[i] * s;
    return r;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
  }
};

inline Multivector operator*(double s, const Multivector& a) { return a * s; }

inline Multivector geometric_product(const Multivector& a,
                                     const Multivector& b) {
  Multivector r;
  for (std::size_t i = 0; i < 8; ++i) {
    if (a.c[i] == 0.0) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      const auto& p = detail::kBladeTable[i][j];
      r.c[p.index] += p.sign * a.c[i] * b.c[j];
    }
  }
  return r;
}

inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

// Zeroes every coefficient outside grade k.
inline Multivector grade_projection(const Multivector& a, int k) {
  if (k < 0 || k > 3)
    throw std::invalid_argument("grade_projection: grade must be 0..3");
  Multivector r;
  for (std::size_t i = 0; i < 8; ++i) {
    if (detail::kBladeGrade[i] == k) r.c[i] = a.c[i];
  }
  return r;
}

inline bool is_vector(const Multivector& a, double tol = kDefaultTol) {
  for (std::size_t i = 0; i < 8; ++i) {
    if (detail::kBladeGrade[i] != 1 && std::abs(a.c[i]) > tol) return false;
  }
  return true;
}

// <x,y> = scalar part of (xy + yx)/2, defined for pure vectors only.
inline double inner_product(const Multivector& x, const Multivector& y,
                            double tol = kDefaultTol) {
  if (!is_vector(x, tol) || !is_vector(y, tol))
    throw std::domain_error("inner_product: arguments must be pure vectors");
  const Multivector s = geometric_product(x, y) + geometric_product(y, x);
  return 0.5 * s.c[kScalar];
}

// x ^ y = (xy - yx)/2, defined for pure vectors only; the result is a
// bivector.
inline Multivector outer_product(const Multivector& x, const Multivector& y,
                                 double tol = kDefaultTol) {
  if (!is_vector(x, tol) || !is_vector(y, tol))
    throw std::domain_error("outer_product: arguments must be pure vectors");
  return (geometric_product(x, y) - geometric_product(y, x)) * 0.5;
}

// Reverses the factor order of every blade: grades 0 and 1 are fixed,
// grades 2 and 3 flip sign.
inline Multivector reversion(const Multivector& a) {
  Multivector r = a;
  for (std::size_t i = 0; i < 8; ++i) {
    if (detail::kBladeGrade[i] >= 2) r.c[i] = -r.c[i];
  }
  return r;
}

}  // namespace qsg
