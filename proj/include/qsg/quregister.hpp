#pragma once

// n-qubit state vectors and the canonical / Bell bases.
//
// Amplitude index order is big-endian over the bitstring e_{n-1}...e_1 e_0:
// the leftmost bit of a ket label is the most significant bit of the index,
// and the leftmost tensor factor of a product occupies the high bits.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qsg/complex_matrix.hpp"
#include "qsg/mat2.hpp"

namespace qsg {

struct Quregister {
  int n = 0;               // qubit count
  std::vector<cplx> amps;  // 2^n amplitudes

  Quregister() = default;
  explicit Quregister(int qubits)
      : n(qubits), amps(static_cast<std::size_t>(1) << check_count(qubits)) {}
  Quregister(int qubits, std::vector<cplx> a) : n(qubits), amps(std::move(a)) {
    if (amps.size() != (static_cast<std::size_t>(1) << check_count(qubits)))
      throw std::invalid_argument("Quregister: amplitude count mismatch");
  }

  int dim() const { return 1 << n; }

  bool operator==(const Quregister&) const = default;

  double norm_sq() const {
    double s = 0.0;
    for (const cplx& v : amps) s += std::norm(v);
    return s;
  }
  double norm() const { return std::sqrt(norm_sq()); }

  bool is_unit(double tol = kDefaultTol) const {
    return std::abs(norm() - 1.0) <= tol;
  }

 private:
  static int check_count(int qubits) {
    if (qubits < 1 || qubits > 24)
      throw std::invalid_argument("Quregister: qubit count out of range");
    return qubits;
  }
};

inline double max_abs_diff(const Quregister& a, const Quregister& b) {
  if (a.n != b.n) throw std::invalid_argument("max_abs_diff: size mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.amps.size(); ++k)
    m = std::max(m, std::abs(a.amps[k] - b.amps[k]));
  return m;
}

inline cplx inner(const Quregister& a, const Quregister& b) {
  if (a.n != b.n) throw std::invalid_argument("inner: size mismatch");
  cplx s = 0.0;
  for (std::size_t k = 0; k < a.amps.size(); ++k)
    s += std::conj(a.amps[k]) * b.amps[k];
  return s;
}

// Kronecker product of state vectors; x occupies the high index bits.
inline Quregister kron(const Quregister& x, const Quregister& y) {
  Quregister r(x.n + y.n);
  const int dy = y.dim();
  for (int i = 0; i < x.dim(); ++i) {
    if (x.amps[i] == cplx{}) continue;
    for (int j = 0; j < dy; ++j) r.amps[i * dy + j] = x.amps[i] * y.amps[j];
  }
  return r;
}

inline Quregister apply(const ComplexMatrix& m, const Quregister& x) {
  if (m.dim != x.dim()) throw std::invalid_argument("apply: size mismatch");
  Quregister r(x.n);
  for (int i = 0; i < m.dim; ++i) {
    cplx s = 0.0;
    for (int j = 0; j < m.dim; ++j) s += m.at(i, j) * x.amps[j];
    r.amps[i] = s;
  }
  return r;
}

namespace detail {
inline unsigned parse_bits(std::string_view bits) {
  unsigned v = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("bitstring must contain only 0 and 1");
    v = (v << 1) | static_cast<unsigned>(ch - '0');
  }
  return v;
}
}  // namespace detail

// |e> for a classical bitstring e, e.g. canonical_ket("10") -> index 2.
inline Quregister canonical_ket(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("canonical_ket: empty label");
  Quregister r(static_cast<int>(bits.size()));
  r.amps[detail::parse_bits(bits)] = 1.0;
  return r;
}

// Bell basis element for a label of n >= 2 bits:
//   b_e = (|0 e_{n-2}..e_0> + (-1)^{e_{n-1}} |1 ~e_{n-2}..~e_0>) / sqrt(2)
// where ~ complements each of the low n-1 bits.
inline Quregister bell_state(std::string_view bits) {
  const int n = static_cast<int>(bits.size());
  if (n < 2) throw std::invalid_argument("bell_state: need at least 2 bits");
  const unsigned e = detail::parse_bits(bits);
  const unsigned lowmask = (1u << (n - 1)) - 1u;
  const unsigned low = e & lowmask;
  const bool top = (e >> (n - 1)) & 1u;
  Quregister r(n);
  const double s = 1.0 / std::sqrt(2.0);
  r.amps[low] = s;
  r.amps[(1u << (n - 1)) | (~low & lowmask)] = top ? -s : s;
  return r;
}

// Partial trace over the last n-1 qubits of |x><x|.
inline Mat2 reduced_density_first_qubit(const Quregister& x) {
  if (x.n < 2)
    throw std::invalid_argument(
        "reduced_density_first_qubit: need at least 2 qubits");
  const int half = 1 << (x.n - 1);
  cplx r00 = 0.0, r01 = 0.0, r11 = 0.0;
  for (int j = 0; j < half; ++j) {
    const cplx hi = x.amps[half + j];
    const cplx lo = x.amps[j];
    r00 += lo * std::conj(lo);
    r01 += lo * std::conj(hi);
    r11 += hi * std::conj(hi);
  }
  return {r00, r01, std::conj(r01), r11};
}

}  // namespace qsg
