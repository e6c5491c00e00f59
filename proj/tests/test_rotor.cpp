#include "helpers.hpp"

using namespace qsg;
using qtest::close;

namespace {

// test-local Rodrigues rotation, right-handed axes
std::array<double, 3> rodrigues_ref(double theta, std::array<double, 3> r,
                                    std::array<double, 3> v) {
  const double c = std::cos(theta), s = std::sin(theta);
  const std::array<double, 3> cr{r[1] * v[2] - r[2] * v[1],
                                 r[2] * v[0] - r[0] * v[2],
                                 r[0] * v[1] - r[1] * v[0]};
  const double d = r[0] * v[0] + r[1] * v[1] + r[2] * v[2];
  return {v[0] * c + cr[0] * s + r[0] * d * (1 - c),
          v[1] * c + cr[1] * s + r[1] * d * (1 - c),
          v[2] * c + cr[2] * s + r[2] * d * (1 - c)};
}

double diff3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]),
                   std::abs(a[2] - b[2])});
}

}  // namespace

TEST_CASE("rotor: exponential of zero angle is one") {
  const Quaternion q = rotor_exp({0.0, {0.0, 0.0, 1.0}});
  CHECK(q == Quaternion{1.0, 0.0, 0.0, 0.0});
}

TEST_CASE("rotor: quarter turn about z gives the e12 blade") {
  const Quaternion q = rotor_exp({M_PI / 2.0, {0.0, 0.0, 1.0}});
  CHECK(close(q, Quaternion{0.0, 0.0, 0.0, 1.0}));
}

TEST_CASE("rotor: exponentials are unit quaternions") {
  Stream rng(31, "rotor-norm");
  double worst = 0.0;
  for (int s = 0; s < 2000; ++s)
    worst = std::max(worst,
                     std::abs(rotor_exp(rng.axis_angle()).norm() - 1.0));
  CHECK(worst <= 1e-12);
}

TEST_CASE("rotor: non-unit axis is rejected") {
  CHECK_THROWS_AS(rotor_exp({1.0, {1.0, 1.0, 0.0}}), std::domain_error);
  CHECK_THROWS_AS(rotor_rotate({1.0, {0.0, 0.0, 0.0}}, {1.0, 0.0, 0.0}),
                  std::domain_error);
}

TEST_CASE("rotor: zero angle and full turn act as the identity") {
  Stream rng(37, "rotor-id");
  const auto v = rng.vec3();
  const std::array<double, 3> axis = rng.unit_vec3();
  CHECK(diff3(rotor_rotate({0.0, axis}, v), v) <= 1e-15);
  CHECK(diff3(rotor_rotate({2.0 * M_PI, axis}, v), v) <= 1e-10);
}

TEST_CASE("rotor: quarter turn about z sends e1 to e2") {
  const auto out = rotor_rotate({M_PI / 2.0, {0.0, 0.0, 1.0}}, {1.0, 0.0, 0.0});
  CHECK(diff3(out, {0.0, 1.0, 0.0}) <= 1e-12);
  // orientation agrees with the right-handed Rodrigues reference
  const auto ref =
      rodrigues_ref(M_PI / 2.0, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0});
  CHECK(diff3(out, ref) <= 1e-12);
}

TEST_CASE("rotor: sandwich matches the Rodrigues oracle") {
  Stream rng(41, "rotor-oracle");
  double worst = 0.0;
  for (int s = 0; s < 2000; ++s) {
    const AxisAngle p = rng.axis_angle();
    const auto v = rng.vec3();
    worst = std::max(
        worst, diff3(rotor_rotate(p, v), rodrigues_ref(p.theta, p.axis, v)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("rotor: rotations preserve norms and inner products") {
  Stream rng(43, "rotor-iso");
  double worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const AxisAngle p = rng.axis_angle();
    const auto v = rng.vec3();
    const auto w = rng.vec3();
    const auto rv = rotor_rotate(p, v);
    const auto rw = rotor_rotate(p, w);
    const auto dot = [](const std::array<double, 3>& a,
                        const std::array<double, 3>& b) {
      return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    worst = std::max(worst, std::abs(dot(rv, rv) - dot(v, v)));
    worst = std::max(worst, std::abs(dot(rv, rw) - dot(v, w)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("rotor: both rotor preimages induce the same rotation") {
  Stream rng(47, "rotor-cover");
  double worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const AxisAngle p = rng.axis_angle();
    const auto v = rng.vec3();
    // shifting the angle by a full turn negates the rotor
    const Quaternion q = rotor_exp({-0.5 * p.theta, p.axis});
    const Quaternion q2 = rotor_exp({-0.5 * (p.theta - 2.0 * M_PI), p.axis});
    CHECK(close(q2, -q, 1e-12));
    worst = std::max(worst, diff3(rotor_rotate(p, v),
                                  rotor_rotate({p.theta - 2.0 * M_PI, p.axis}, v)));
  }
  CHECK(worst <= 1e-10);
}
