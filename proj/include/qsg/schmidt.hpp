#pragma once

// Schmidt-rank separability measures, computed from singular values.
//
// For an operator on n qubits and a cut after the first `cut` qubits, the
// realigned matrix pairs the row/column indices of each side:
//   R[(i,k)][(j,l)] = M[(i,j)][(k,l)],  i,k over the first 2^cut labels.
// rank(R) = 1 exactly when M is a Kronecker product across the cut.

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsg/complex_matrix.hpp"
#include "qsg/quregister.hpp"

namespace qsg {

// Relative cutoff below which singular values are treated as zero.
inline constexpr double kRankThreshold = 1e-8;

inline std::vector<double> singular_values(
    const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

inline int rank_from_singular_values(const std::vector<double>& sv,
                                     double rel_threshold = kRankThreshold) {
  if (sv.empty()) return 0;
  const double cutoff = rel_threshold * sv.front();
  int r = 0;
  for (double s : sv) {
    if (s > cutoff && s > 0.0) ++r;
  }
  return r;
}

struct SchmidtResult {
  int rank = 0;
  std::vector<double> values;  // singular values, descending
};

namespace detail {
inline int qubit_count_of_dim(int dim, const char* who) {
  int n = 0;
  int d = dim;
  while (d > 1 && d % 2 == 0) {
    d /= 2;
    ++n;
  }
  if (d != 1 || n < 1)
    throw std::invalid_argument(std::string(who) + ": dim must be a power of 2");
  return n;
}
}  // namespace detail

// Largest singular value.
inline double operator_norm(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.dim, m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) e(i, j) = m.at(i, j);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
  return svd.singularValues()(0);
}

inline SchmidtResult operator_schmidt(const ComplexMatrix& m, int cut) {
  const int n = detail::qubit_count_of_dim(m.dim, "operator_schmidt");
  if (cut < 1 || cut > n - 1)
    throw std::invalid_argument("operator_schmidt: cut must be in [1, n-1]");
  const int da = 1 << cut;        // first side
  const int db = 1 << (n - cut);  // second side
  Eigen::MatrixXcd r(da * da, db * db);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < da; ++k)
      for (int j = 0; j < db; ++j)
        for (int l = 0; l < db; ++l)
          r(i * da + k, j * db + l) = m.at(i * db + j, k * db + l);
  SchmidtResult out;
  out.values = singular_values(r);
  out.rank = rank_from_singular_values(out.values);
  return out;
}

inline SchmidtResult vector_schmidt(const Quregister& x, int cut) {
  if (cut < 1 || cut > x.n - 1)
    throw std::invalid_argument("vector_schmidt: cut must be in [1, n-1]");
  const int rows = 1 << cut;
  const int cols = 1 << (x.n - cut);
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = x.amps[i * cols + j];
  SchmidtResult out;
  out.values = singular_values(m);
  out.rank = rank_from_singular_values(out.values);
  return out;
}

// Matrix rank through the same singular-value cutoff.
inline int matrix_rank(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.dim, m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) e(i, j) = m.at(i, j);
  return rank_from_singular_values(singular_values(e));
}

}  // namespace qsg
