#pragma once

// Kronecker generators of the tensor-power group and the word calculus on
// them.  A generator is an ordered list of n SU(2) factors; a word is a
// product of generators raised to +1 or -1 (inverse = conjugate transpose,
// the factors being unitary).
//
// The mixed-product identity ((x)g_i)((x)h_i) = (x)(g_i h_i) and
// ((x)g_i)^{-1} = (x)(g_i^{-1}) let every word collapse factor-slot by
// factor-slot, so reduction always lands on a word of length at most one.

#include <span>
#include <stdexcept>
#include <vector>

#include "qsg/complex_matrix.hpp"
#include "qsg/mat2.hpp"

namespace qsg {

struct WordFactor {
  std::vector<Mat2> gens;  // n SU(2) factors, leftmost = high index bits
  int exponent = 1;        // -1 or +1
};

struct GroupWord {
  int n = 0;  // qubit count; every factor must carry exactly n generators
  std::vector<WordFactor> factors;
};

// Kronecker product of n SU(2) factors as a 2^n x 2^n matrix.
inline ComplexMatrix group_generator(std::span<const Mat2> gs,
                                     double tol = kDefaultTol) {
  if (gs.empty())
    throw std::invalid_argument("group_generator: empty factor list");
  for (const Mat2& g : gs) {
    if (!g.is_su2(tol))
      throw std::domain_error("group_generator: factor not in SU(2)");
  }
  ComplexMatrix m = ComplexMatrix::from(gs[0]);
  for (std::size_t i = 1; i < gs.size(); ++i)
    m = kron(m, ComplexMatrix::from(gs[i]));
  return m;
}

inline void validate_word(const GroupWord& w) {
  if (w.n < 1) throw std::invalid_argument("GroupWord: n must be >= 1");
  for (const WordFactor& f : w.factors) {
    if (static_cast<int>(f.gens.size()) != w.n)
      throw std::invalid_argument("GroupWord: factor arity mismatch");
    if (f.exponent != 1 && f.exponent != -1)
      throw std::invalid_argument("GroupWord: exponent must be +1 or -1");
  }
}

inline ComplexMatrix word_evaluate(const GroupWord& w,
                                   double tol = kDefaultTol) {
  validate_word(w);
  ComplexMatrix m = ComplexMatrix::identity(1 << w.n);
  for (const WordFactor& f : w.factors) {
    ComplexMatrix g = group_generator(f.gens, tol);
    if (f.exponent == -1) g = g.adjoint();
    m = m * g;
  }
  return m;
}

// Collapses a word to length <= 1 with the same evaluation: factor slots
// multiply independently, and a product that lands on the identity in every
// slot reduces to the empty word.
inline GroupWord word_reduce(const GroupWord& w, double tol = kDefaultTol) {
  validate_word(w);
  if (w.factors.empty()) return {w.n, {}};
  std::vector<Mat2> acc(static_cast<std::size_t>(w.n), Mat2::identity());
  for (const WordFactor& f : w.factors) {
    for (int i = 0; i < w.n; ++i) {
      if (!f.gens[i].is_su2(tol))
        throw std::domain_error("word_reduce: factor not in SU(2)");
      const Mat2 g = (f.exponent == -1) ? f.gens[i].adjoint() : f.gens[i];
      acc[i] = acc[i] * g;
    }
  }
  bool all_identity = true;
  for (const Mat2& g : acc) {
    if (max_abs_diff(g, Mat2::identity()) > tol) all_identity = false;
  }
  if (all_identity) return {w.n, {}};
  return {w.n, {WordFactor{std::move(acc), 1}}};
}

}  // namespace qsg
