#include "helpers.hpp"

using namespace qsg;
using qtest::close;

namespace {
const cplx kI{0.0, 1.0};
}

TEST_CASE("spinor: pauli matrices") {
  CHECK(pauli(1) == Mat2{0.0, 1.0, 1.0, 0.0});
  CHECK(pauli(2) == Mat2{0.0, -kI, kI, 0.0});
  CHECK(pauli(3) == Mat2{1.0, 0.0, 0.0, -1.0});
  CHECK(pauli(1) * pauli(2) * pauli(3) == Mat2::identity() * kI);
  CHECK_THROWS_AS(pauli(0), std::invalid_argument);
  CHECK_THROWS_AS(pauli(4), std::invalid_argument);
}

TEST_CASE("spinor: quaternion map on basis elements") {
  CHECK(su2_from_quaternion({1, 0, 0, 0}) == Mat2::identity());
  // the e12 component lands on i sigma3
  CHECK(su2_from_quaternion({0, 0, 0, 1}) == pauli(3) * kI);
  // the displayed pairing: second row/column carry the crossed components
  CHECK(su2_from_quaternion({0, 1, 0, 0}) == Mat2{0.0, 1.0, -1.0, 0.0});
  CHECK(su2_from_quaternion({0, 0, 1, 0}) == pauli(1) * kI);
  CHECK_THROWS_AS(su2_from_quaternion({1, 1, 0, 0}), std::domain_error);
}

TEST_CASE("spinor: quaternion map lands in SU(2)") {
  Stream rng(53, "phi-su2");
  double worst = 0.0;
  for (int s = 0; s < 2000; ++s) {
    const Mat2 u = su2_from_quaternion(rng.unit_quaternion());
    worst = std::max(worst, std::abs(u.det() - cplx{1.0}));
    worst = std::max(worst, u.su2_defect());
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("spinor: composition law of the two pairings") {
  const Quaternion t1{0, 1, 0, 0}, t2{0, 0, 1, 0}, t3{0, 0, 0, 1};

  // t2 t1 = t3: the image product only matches in reversed order
  CHECK(close(su2_from_quaternion(t2 * t1),
              su2_from_quaternion(t1) * su2_from_quaternion(t2)));
  CHECK(max_abs_diff(su2_from_quaternion(t2 * t1),
                     su2_from_quaternion(t2) * su2_from_quaternion(t1)) > 1.0);

  const auto verdict = quaternion_composition_check(t2, t1);
  CHECK(verdict.law == CompositionLaw::anti_homomorphism);

  // aggregated over every basis pair and random pairs, the crossed pairing
  // is consistently an anti-homomorphism
  Stream rng(59, "phi-law");
  double rd = 0.0, rr = 0.0, rd_direct = 0.0, rr_direct = 0.0;
  const Quaternion basis[4] = {{1, 0, 0, 0}, t1, t2, t3};
  for (const auto& p : basis) {
    for (const auto& q : basis) {
      const auto c = quaternion_composition_check(p, q);
      rd = std::max(rd, c.residual_direct);
      rr = std::max(rr, c.residual_reversed);
      const auto d = quaternion_composition_check(p, q, QuatPairing::direct);
      rd_direct = std::max(rd_direct, d.residual_direct);
      rr_direct = std::max(rr_direct, d.residual_reversed);
    }
  }
  for (int s = 0; s < 500; ++s) {
    const auto c = quaternion_composition_check(rng.unit_quaternion(),
                                                rng.unit_quaternion());
    rd = std::max(rd, c.residual_direct);
    rr = std::max(rr, c.residual_reversed);
  }
  CHECK(classify_composition(rd, rr, 1e-12) ==
        CompositionLaw::anti_homomorphism);
  // the swapped pairing composes covariantly instead
  CHECK(classify_composition(rd_direct, rr_direct, 1e-12) ==
        CompositionLaw::homomorphism);
}

TEST_CASE("spinor: axis-angle to qubit") {
  CHECK(qubit_from_axis_angle({0.0, {0.0, 0.0, 1.0}}) == Qubit{1.0, 0.0});
  const Qubit c = qubit_from_axis_angle({M_PI / 2.0, {1.0, 0.0, 0.0}});
  CHECK(close(c, Qubit{0.0, 1.0}));

  Stream rng(61, "psi0-norm");
  double worst = 0.0;
  for (int s = 0; s < 2000; ++s)
    worst = std::max(
        worst, std::abs(qubit_from_axis_angle(rng.axis_angle()).norm() - 1.0));
  CHECK(worst <= 1e-12);

  CHECK_THROWS_AS(qubit_from_axis_angle({1.0, {2.0, 0.0, 0.0}}),
                  std::domain_error);
}

TEST_CASE("spinor: qubit to SU(2) and back") {
  CHECK(su2_from_qubit({1.0, 0.0}) == Mat2::identity());
  CHECK(su2_from_qubit({0.0, 1.0}) == Mat2{0.0, -1.0, 1.0, 0.0});
  CHECK(qubit_from_su2(Mat2::identity()) == Qubit{1.0, 0.0});
  CHECK(qubit_from_su2(Mat2{0.0, -1.0, 1.0, 0.0}) == Qubit{0.0, 1.0});

  Stream rng(67, "psi1");
  for (int s = 0; s < 500; ++s) {
    const Qubit c = rng.qubit();
    const Mat2 u = su2_from_qubit(c);
    CHECK(u.su2_defect() <= 1e-12);
    CHECK(qubit_from_su2(u) == c);  // column extraction, bit-exact
  }

  CHECK_THROWS_AS(su2_from_qubit({1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(qubit_from_su2(Mat2{2.0, 0.0, 0.0, 0.5}),
                  std::domain_error);
  CHECK_THROWS_AS(qubit_from_su2(pauli(1)), std::domain_error);  // det = -1
}

TEST_CASE("spinor: qubit group operation") {
  Stream rng(71, "star");
  const Qubit e{1.0, 0.0};
  for (int s = 0; s < 500; ++s) {
    const Qubit a = rng.qubit();
    const Qubit b = rng.qubit();
    CHECK(qubit_mul(e, b) == b);
    CHECK(qubit_mul(a, e) == a);
    // the product is the first column of the matrix product
    const Mat2 prod = su2_from_qubit(a) * su2_from_qubit(b);
    CHECK(close(qubit_mul(a, b), Qubit{prod.m00, prod.m10}));
  }
  CHECK(close(qubit_mul({0.0, 1.0}, {0.0, 1.0}), Qubit{-1.0, 0.0}));

  CHECK_THROWS_AS(qubit_mul({2.0, 0.0}, e), std::domain_error);
  CHECK_THROWS_AS(qubit_mul(e, {0.5, 0.5}), std::domain_error);
}

TEST_CASE("spinor: qubit inverses") {
  CHECK(qubit_inverse({1.0, 0.0}) == Qubit{1.0, 0.0});
  CHECK(qubit_inverse({0.0, 1.0}) == Qubit{0.0, -1.0});

  Stream rng(73, "inverse");
  const Qubit e{1.0, 0.0};
  double worst = 0.0;
  for (int s = 0; s < 500; ++s) {
    const Qubit a = rng.qubit();
    const Qubit inv = qubit_inverse(a);
    CHECK(qubit_inverse(inv) == a);
    worst = std::max(worst, max_abs_diff(qubit_mul(a, inv), e));
    worst = std::max(worst, max_abs_diff(qubit_mul(inv, a), e));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("spinor: transport of the group product is an isomorphism") {
  Stream rng(79, "iso");
  double worst = 0.0, assoc = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const Qubit a = rng.qubit();
    const Qubit b = rng.qubit();
    const Qubit c = rng.qubit();
    worst = std::max(worst,
                     max_abs_diff(su2_from_qubit(qubit_mul(a, b)),
                                  su2_from_qubit(a) * su2_from_qubit(b)));
    assoc = std::max(assoc, max_abs_diff(qubit_mul(qubit_mul(a, b), c),
                                         qubit_mul(a, qubit_mul(b, c))));
  }
  CHECK(worst <= 1e-12);
  CHECK(assoc <= 1e-12);
}
