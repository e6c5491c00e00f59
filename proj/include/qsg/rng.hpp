#pragma once

// Deterministic sampling streams.  Each consumer derives an independent
// stream from (seed, label), so suites can run in any order, or alone, and
// still see identical draws.  Unit-sphere points come from normalised
// independent standard normals per coordinate.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

#include "qsg/mat2.hpp"
#include "qsg/multivector.hpp"
#include "qsg/qubit.hpp"
#include "qsg/quregister.hpp"
#include "qsg/rotor.hpp"

namespace qsg {

inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ull;

namespace detail {
constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}
}  // namespace detail

class Stream {
 public:
  Stream(std::uint64_t seed, std::string_view label) {
    const std::uint64_t h = detail::fnv1a64(label);
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    gen_.seed(seq);
  }

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform_in(double lo, double hi) {
    return lo + (hi - lo) * uniform();
  }

  // uniform integer in [lo, hi]
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform() * (hi - lo + 1));
  }

  // standard normal via Box-Muller
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  cplx complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

  std::array<double, 3> unit_vec3() {
    while (true) {
      std::array<double, 3> v{normal(), normal(), normal()};
      const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      if (n > 1e-12) return {v[0] / n, v[1] / n, v[2] / n};
    }
  }

  std::array<double, 3> vec3(double scale = 1.0) {
    return {scale * normal(), scale * normal(), scale * normal()};
  }

  AxisAngle axis_angle() { return {uniform_in(-M_PI, M_PI), unit_vec3()}; }

  Quaternion unit_quaternion() {
    while (true) {
      Quaternion q{normal(), normal(), normal(), normal()};
      const double n = q.norm();
      if (n > 1e-12) return q * (1.0 / n);
    }
  }

  Qubit qubit() {
    while (true) {
      Qubit c{complex_normal(), complex_normal()};
      const double n = c.norm();
      if (n > 1e-12) return {c.c0 / n, c.c1 / n};
    }
  }

  Mat2 su2() { return su2_from_qubit(qubit(), 1e-6); }

  Quregister quregister(int n) {
    while (true) {
      Quregister x(n);
      double s = 0.0;
      for (cplx& a : x.amps) {
        a = complex_normal();
        s += std::norm(a);
      }
      const double nrm = std::sqrt(s);
      if (nrm > 1e-12) {
        for (cplx& a : x.amps) a /= nrm;
        return x;
      }
    }
  }

  Multivector multivector(double scale = 1.0) {
    Multivector m;
    for (double& v : m.c) v = scale * normal();
    return m;
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qsg
