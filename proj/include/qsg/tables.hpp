#pragma once

// Index/sign table pairs driving the quregister -> matrix embedding, with
// the unit root rho_n = exp(i pi / 2^{n-1}).
//
// Two sources exist and are never silently interchanged:
//   literal   - checked-in transcriptions of the n = 1, 2, 3 displays;
//   generated - the inferred closed-form rule
//                 I(i,j) = i XOR j,  Sigma(i,j) = (-1)^popcount(j AND NOT i),
//               which reproduces the literal I tables and Sigma_1, Sigma_2;
//               its relation to Sigma_3 is measured by compare_tables.

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsg/mat2.hpp"

namespace qsg {

struct PsiTables {
  enum class Source { literal, generated };

  int n = 0;
  std::vector<std::vector<int>> index;  // 2^n x 2^n, entries in [0, 2^n)
  std::vector<std::vector<int>> sign;   // 2^n x 2^n, entries +1 / -1
  cplx rho;                             // exp(i pi / 2^{n-1})
  Source source = Source::literal;

  int dim() const { return 1 << n; }
};

// exp(i pi / 2^{n-1}), exact for the n = 1, 2 roots -1 and i.
inline cplx psi_root(int n) {
  if (n < 1) throw std::invalid_argument("psi_root: n must be >= 1");
  if (n == 1) return {-1.0, 0.0};
  if (n == 2) return {0.0, 1.0};
  const double ang = M_PI / std::ldexp(1.0, n - 1);
  return {std::cos(ang), std::sin(ang)};
}

// Powers rho^0 .. rho^{2^n - 1} by successive multiplication.
inline std::vector<cplx> psi_root_powers(const PsiTables& t) {
  std::vector<cplx> p(static_cast<std::size_t>(t.dim()));
  p[0] = 1.0;
  for (std::size_t j = 1; j < p.size(); ++j) p[j] = p[j - 1] * t.rho;
  return p;
}

namespace detail {

inline constexpr int kLiteralI1[2][2] = {{0, 1}, {1, 0}};
inline constexpr int kLiteralS1[2][2] = {{1, -1}, {1, 1}};

inline constexpr int kLiteralI2[4][4] = {
    {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
inline constexpr int kLiteralS2[4][4] = {{1, -1, -1, 1},
                                         {1, 1, -1, -1},
                                         {1, -1, 1, -1},
                                         {1, 1, 1, 1}};

inline constexpr int kLiteralI3[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5}, {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3}, {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1}, {7, 6, 5, 4, 3, 2, 1, 0}};
inline constexpr int kLiteralS3[8][8] = {
    {1, -1, -1, 1, -1, 1, 1, -1}, {1, 1, -1, -1, -1, -1, 1, 1},
    {1, -1, 1, -1, -1, 1, -1, 1}, {1, 1, 1, 1, -1, -1, -1, -1},
    {1, -1, -1, 1, 1, 1, -1, -1}, {1, 1, -1, -1, 1, -1, -1, -1},
    {1, -1, 1, -1, 1, -1, 1, -1}, {1, 1, 1, 1, 1, 1, 1, 1}};

template <int D>
std::vector<std::vector<int>> to_rows(const int (&m)[D][D]) {
  std::vector<std::vector<int>> rows(D, std::vector<int>(D));
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) rows[i][j] = m[i][j];
  return rows;
}

}  // namespace detail

// Raises std::invalid_argument when a table violates its structural
// invariants: every row and column of I a permutation of 0..2^n-1, signs
// in {-1, +1}, |rho| = 1 and rho^{2^n} = 1 within tolerance.
inline void check_table_invariants(const PsiTables& t,
                                   double tol = kDefaultTol) {
  const int d = t.dim();
  if (static_cast<int>(t.index.size()) != d ||
      static_cast<int>(t.sign.size()) != d)
    throw std::invalid_argument("PsiTables: wrong row count");
  std::vector<char> seen;
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(t.index[i].size()) != d ||
        static_cast<int>(t.sign[i].size()) != d)
      throw std::invalid_argument("PsiTables: wrong column count");
    seen.assign(static_cast<std::size_t>(d), 0);
    for (int j = 0; j < d; ++j) {
      const int v = t.index[i][j];
      if (v < 0 || v >= d || seen[v])
        throw std::invalid_argument("PsiTables: row is not a permutation");
      seen[v] = 1;
      if (t.sign[i][j] != 1 && t.sign[i][j] != -1)
        throw std::invalid_argument("PsiTables: sign entry not +1/-1");
    }
  }
  for (int j = 0; j < d; ++j) {
    seen.assign(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i) {
      const int v = t.index[i][j];
      if (seen[v])
        throw std::invalid_argument("PsiTables: column is not a permutation");
      seen[v] = 1;
    }
  }
  if (std::abs(std::abs(t.rho) - 1.0) > tol)
    throw std::invalid_argument("PsiTables: |rho| != 1");
  cplx p = 1.0;
  for (int k = 0; k < d; ++k) p *= t.rho;
  if (std::abs(p - cplx{1.0}) > 1e-12)
    throw std::invalid_argument("PsiTables: rho^(2^n) != 1");
}

// Exact transcription of the displayed n = 1, 2, 3 table pairs.
inline PsiTables literal_tables(int n) {
  PsiTables t;
  t.n = n;
  t.source = PsiTables::Source::literal;
  switch (n) {
    case 1:
      t.index = detail::to_rows(detail::kLiteralI1);
      t.sign = detail::to_rows(detail::kLiteralS1);
      break;
    case 2:
      t.index = detail::to_rows(detail::kLiteralI2);
      t.sign = detail::to_rows(detail::kLiteralS2);
      break;
    case 3:
      t.index = detail::to_rows(detail::kLiteralI3);
      t.sign = detail::to_rows(detail::kLiteralS3);
      break;
    default:
      throw std::invalid_argument("literal_tables: n must be 1, 2 or 3");
  }
  t.rho = psi_root(n);
  return t;
}

// Tables from the inferred rule, any n >= 1 (dense output, bounded at n = 8).
inline PsiTables generated_tables(int n) {
  if (n < 1) throw std::invalid_argument("generated_tables: n must be >= 1");
  if (n > 8)
    throw std::length_error("generated_tables: dense tables bounded at n = 8");
  PsiTables t;
  t.n = n;
  t.rho = psi_root(n);
  t.source = PsiTables::Source::generated;
  const int d = t.dim();
  t.index.assign(d, std::vector<int>(d));
  t.sign.assign(d, std::vector<int>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      t.index[i][j] = i ^ j;
      const unsigned bits = static_cast<unsigned>(j) & ~static_cast<unsigned>(i);
      t.sign[i][j] = (std::popcount(bits & static_cast<unsigned>(d - 1)) % 2)
                         ? -1
                         : 1;
    }
  }
  check_table_invariants(t);
  return t;
}

struct TableMismatch {
  char table;  // 'I' or 'S'
  int i = 0;
  int j = 0;
  int lhs = 0;
  int rhs = 0;

  bool operator==(const TableMismatch&) const = default;
};

// Exhaustive entrywise comparison; empty result means identical tables.
// Scans I first, then Sigma, row-major.
inline std::vector<TableMismatch> compare_tables(const PsiTables& a,
                                                 const PsiTables& b) {
  if (a.n != b.n)
    throw std::invalid_argument("compare_tables: tables of different n");
  std::vector<TableMismatch> out;
  const int d = a.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (a.index[i][j] != b.index[i][j])
        out.push_back({'I', i, j, a.index[i][j], b.index[i][j]});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (a.sign[i][j] != b.sign[i][j])
        out.push_back({'S', i, j, a.sign[i][j], b.sign[i][j]});
  return out;
}

}  // namespace qsg
