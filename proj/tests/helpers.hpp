#pragma once

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>

#include "qsg/qsg.hpp"

namespace qtest {

inline bool close(double a, double b, double tol = 1e-12) {
  return std::abs(a - b) <= tol;
}

inline bool close(qsg::cplx a, qsg::cplx b, double tol = 1e-12) {
  return std::abs(a - b) <= tol;
}

inline bool close(const qsg::Mat2& a, const qsg::Mat2& b, double tol = 1e-12) {
  return qsg::max_abs_diff(a, b) <= tol;
}

inline bool close(const qsg::Multivector& a, const qsg::Multivector& b,
                  double tol = 1e-12) {
  return (a - b).max_abs() <= tol;
}

inline bool close(const qsg::Quaternion& a, const qsg::Quaternion& b,
                  double tol = 1e-12) {
  return std::abs(a.w - b.w) <= tol && std::abs(a.x - b.x) <= tol &&
         std::abs(a.y - b.y) <= tol && std::abs(a.z - b.z) <= tol;
}

inline bool close(const qsg::Qubit& a, const qsg::Qubit& b,
                  double tol = 1e-12) {
  return qsg::max_abs_diff(a, b) <= tol;
}

inline bool close(const qsg::ComplexMatrix& a, const qsg::ComplexMatrix& b,
                  double tol = 1e-12) {
  return qsg::max_abs_diff(a, b) <= tol;
}

inline bool close(const qsg::Quregister& a, const qsg::Quregister& b,
                  double tol = 1e-12) {
  return qsg::max_abs_diff(a, b) <= tol;
}

}  // namespace qtest
