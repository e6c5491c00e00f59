#pragma once

// The table-driven embedding of 2^n-amplitude registers into 2^n x 2^n
// matrices, entry by entry:
//
//   M[i][j] = Sigma(i,j) * rho^j * x[I(i,j)]
//
// applied literally -- no entry is conjugated.  The measurement operations
// below quantify, rather than assume, the properties claimed of this map:
// unitarity of images, agreement with the factor-wise operator product on
// separable inputs, and the character of Bell-state images.  They always
// return report-only verdicts.

#include <string>
#include <vector>

#include "qsg/complex_matrix.hpp"
#include "qsg/mat2.hpp"
#include "qsg/qubit.hpp"
#include "qsg/quregister.hpp"
#include "qsg/rng.hpp"
#include "qsg/schmidt.hpp"
#include "qsg/tables.hpp"
#include "qsg/verdict.hpp"

namespace qsg {

// Entrywise table embedding.  Defined for any amplitude vector of matching
// size; the formula is linear in x.
inline ComplexMatrix embedding_matrix(const Quregister& x,
                                      const PsiTables& t) {
  if (x.n != t.n)
    throw std::invalid_argument("embedding_matrix: register/table size mismatch");
  const int d = t.dim();
  const std::vector<cplx> pow = psi_root_powers(t);
  ComplexMatrix m(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const cplx v = pow[j] * x.amps[t.index[i][j]];
      m.at(i, j) = (t.sign[i][j] < 0) ? -v : v;
    }
  }
  return m;
}

// Measures max over random unit registers of || M(x)^dag M(x) - Id || in the
// operator norm.  Report-only; deterministic for a fixed seed.
inline ClaimVerdict verify_unitarity(const PsiTables& t, long samples,
                                     double tol,
                                     std::uint64_t seed = kDefaultSeed) {
  Stream rng(seed, "verify_unitarity");
  const ComplexMatrix id = ComplexMatrix::identity(t.dim());
  double worst = 0.0;
  for (long s = 0; s < samples; ++s) {
    const Quregister x = rng.quregister(t.n);
    const ComplexMatrix m = embedding_matrix(x, t);
    const double r = operator_norm(m.adjoint() * m - id);
    if (r > worst) worst = r;
  }
  ClaimVerdict v;
  v.claim_id = "unitarity";
  v.status = ClaimStatus::report_only;
  v.max_residual = worst;
  v.samples = samples;
  v.details = "max ||M(x)+ M(x) - Id||_op over unit x: " + format_sci(worst) +
              (worst <= tol ? " (holds within tol)" : " (exceeds tol)");
  return v;
}

// Residual of the embedding against the factor-wise operator product on one
// separable input:  || M(c_1 (x) ... (x) c_n) - U(c_1) (x) ... (x) U(c_n) ||.
inline ClaimVerdict verify_separable_consistency(const std::vector<Qubit>& cs,
                                                 const PsiTables& t,
                                                 double tol) {
  if (static_cast<int>(cs.size()) != t.n)
    throw std::invalid_argument(
        "verify_separable_consistency: qubit count must equal table n");
  Quregister x{1, {cs[0].c0, cs[0].c1}};
  ComplexMatrix prod = ComplexMatrix::from(su2_from_qubit(cs[0], tol));
  for (std::size_t k = 1; k < cs.size(); ++k) {
    x = kron(x, Quregister{1, {cs[k].c0, cs[k].c1}});
    prod = kron(prod, ComplexMatrix::from(su2_from_qubit(cs[k], tol)));
  }
  const ComplexMatrix m = embedding_matrix(x, t);
  const double op = operator_norm(m - prod);
  const double entry = max_abs_diff(m, prod);
  ClaimVerdict v;
  v.claim_id = "separable-consistency";
  v.status = ClaimStatus::report_only;
  v.max_residual = op;
  v.samples = 1;
  v.details = "||M(x) - tensor product||_op = " + format_sci(op) +
              ", max-entry = " + format_sci(entry) +
              (op <= tol ? " (coincides within tol)" : " (differs)");
  return v;
}

struct BellImage {
  std::string label;    // bitstring of the Bell basis element
  ComplexMatrix image;  // its embedding
  ClaimVerdict verdict;
};

// Embeds every Bell basis element of n qubits and records the measured
// properties of each image: unitarity residual, matrix rank, and operator
// Schmidt rank per cut.
inline std::vector<BellImage> bell_images(int n, const PsiTables& t,
                                          double tol = kDefaultTol) {
  if (n < 2 || n > 3)
    throw std::invalid_argument("bell_images: n must be 2 or 3");
  if (t.n != n)
    throw std::invalid_argument("bell_images: table size mismatch");
  std::vector<BellImage> out;
  const ComplexMatrix id = ComplexMatrix::identity(t.dim());
  for (int e = 0; e < (1 << n); ++e) {
    std::string label(static_cast<std::size_t>(n), '0');
    for (int b = 0; b < n; ++b) {
      if ((e >> (n - 1 - b)) & 1) label[static_cast<std::size_t>(b)] = '1';
    }
    BellImage bi;
    bi.label = label;
    bi.image = embedding_matrix(bell_state(label), t);
    const double unres = operator_norm(bi.image.adjoint() * bi.image - id);
    const int rank = matrix_rank(bi.image);
    std::string schmidt;
    for (int cut = 1; cut <= n - 1; ++cut) {
      const SchmidtResult sr = operator_schmidt(bi.image, cut);
      schmidt += " cut" + std::to_string(cut) + "=" + std::to_string(sr.rank);
    }
    bi.verdict.claim_id = "bell-image-" + label;
    bi.verdict.status = ClaimStatus::report_only;
    bi.verdict.max_residual = unres;
    bi.verdict.samples = 1;
    bi.verdict.details = "unitarity residual " + format_sci(unres) +
                         ", matrix rank " + std::to_string(rank) +
                         ", operator Schmidt rank:" + schmidt +
                         (unres <= tol ? " (unitary within tol)"
                                       : " (not unitary)");
    out.push_back(std::move(bi));
  }
  return out;
}

}  // namespace qsg
