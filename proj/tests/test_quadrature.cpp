// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "quadrature.hpp"
#include "rng.hpp"

using namespace slicespace;

namespace {

// independent oracle: int_0^1 (1-s)^beta s^k ds = B(k+1, beta+1)
double beta_moment(int k, double beta) {
  return std::exp(std::lgamma(k + 1.0) + std::lgamma(beta + 1.0) - std::lgamma(beta + k + 2.0));
}

}  // namespace

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("gauss-jacobi moments") {
  for (const double beta : {-0.5, 0.0, 0.3, 1.0, 2.5}) {
    for (const int n : {1, 2, 8, 32, 64}) {
      const RadialRule rule = gauss_jacobi01(n, beta);
      REQUIRE(rule.s.size() == static_cast<std::size_t>(n));
      for (int k = 0; k < 2 * n && k <= 12; ++k) {
        double got = 0.0;
        for (int a = 0; a < n; ++a) got += rule.w[a] * std::pow(rule.s[a], k);
        CHECK(got == doctest::Approx(beta_moment(k, beta)).epsilon(1e-13));
      }
      for (int a = 0; a < n; ++a) {
        CHECK(rule.w[a] > 0.0);
        CHECK(rule.s[a] > 0.0);
        CHECK(rule.s[a] < 1.0);
      }
    }
  }
}

TEST_CASE("gauss-legendre nodes are the classical ones") {
  // 3-point rule on [0,1]: nodes (1 -+ sqrt(3/5))/2 and 1/2
  const RadialRule r = gauss_jacobi01(3, 0.0);
  CHECK(r.s[0] == doctest::Approx((1.0 - std::sqrt(0.6)) / 2.0).epsilon(1e-14));
  CHECK(r.s[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r.s[2] == doctest::Approx((1.0 + std::sqrt(0.6)) / 2.0).epsilon(1e-14));
  CHECK(r.w[1] == doctest::Approx(8.0 / 18.0).epsilon(1e-14));
}

TEST_CASE("disk measure masses") {
  const DiskRule rule;
  CHECK(integrate_disk_real([](Complex) { return 1.0; }, rule, Measure::area()) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(integrate_disk_real([](Complex) { return 1.0; }, rule, Measure::plain_area()) ==
        doctest::Approx(std::numbers::pi).epsilon(1e-14));
  // int |z|^2 dA = 1/2 (2 int_0^1 r^3 dr)
  CHECK(integrate_disk_real([](Complex z) { return std::norm(z); }, rule, Measure::area()) ==
        doctest::Approx(0.5).epsilon(1e-14));
  for (const double alpha : {-0.5, 0.0, 1.0, 2.5}) {
    // int (1-|z|^2)^alpha dA_i = 1/(alpha+1), i.e. dA_alpha has unit mass
    const double mass =
        integrate_disk_real([](Complex) { return 1.0; }, rule, Measure::weighted_area(alpha));
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("monomial orthogonality") {
  const DiskRule rule;
  for (int n = 0; n <= 10; ++n) {
    for (int m = 0; m <= 10; ++m) {
      const Quaternion v = integrate_disk(
          [n, m](Complex z) {
            const Complex t = std::pow(z, n) * std::pow(std::conj(z), m);
            return Quaternion{t.real(), t.imag(), 0, 0};
          },
          rule, Measure::area());
      const double expected = n == m ? 1.0 / (n + 1.0) : 0.0;
      CHECK(std::abs(v.w - expected) < 1e-12);
      CHECK(std::abs(v.x) < 1e-12);
    }
  }
}

TEST_CASE("lambda integrals") {
  const DiskRule rule;
  // int (1-|z|^2)^w dlambda = 1/(w-1)
  CHECK(integrate_lambda_decay([](Complex) { return 1.0; }, 3.0, rule) ==
        doctest::Approx(0.5).epsilon(1e-13));
  CHECK(integrate_lambda_decay([](Complex) { return 1.0; }, 1.5, rule) ==
        doctest::Approx(2.0).epsilon(1e-13));
  // clipped plain-lambda route agrees on integrands with built-in decay
  const auto g = [](Complex z) { return std::pow(1.0 - std::norm(z), 3.0); };
  const double clipped = integrate_disk_real(g, rule, Measure::lambda());
  CHECK(clipped == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("non-finite integrands are reported with the node") {
  const DiskRule rule{8, 8, 1.0 - 1e-6};
  CHECK_THROWS_WITH_AS(
      integrate_disk_real([](Complex z) { return 1.0 / (std::abs(z) - std::abs(z)); }, rule,
                          Measure::area()),
      doctest::Contains("non-finite"), std::runtime_error);
}

TEST_CASE("convergence guard: doubling changes little") {
  const DiskRule rule{32, 64, 1.0 - 1e-6};
  const auto g = [](Complex z) { return std::exp(z.real()) * (1.0 + std::norm(z)); };
  const double a = integrate_disk_real(g, rule, Measure::weighted_area(0.7));
  const double b = integrate_disk_real(g, rule.doubled(), Measure::weighted_area(0.7));
  CHECK(std::abs(a - b) < 1e-9 * std::abs(b));
}

TEST_CASE("sup estimation") {
  const SupConfig cfg;
  CHECK(sup_disk([](Complex z) { return 1.0 - std::norm(z); }, cfg).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sup_disk([](Complex z) { return std::abs(z); }, cfg).value >= 1.0 - 1e-6 - 1e-12);
  // (1-|z|^2) |2z| peaks at 4 sqrt(3)/9
  const SupResult r = sup_disk(
      [](Complex z) { return (1.0 - std::norm(z)) * 2.0 * std::abs(z); }, cfg);
  CHECK(r.value == doctest::Approx(4.0 * std::sqrt(3.0) / 9.0).epsilon(1e-9));
  // one-sided: never above the true sup
  CHECK(r.value <= 4.0 * std::sqrt(3.0) / 9.0 + 1e-12);
}

TEST_CASE("sphere sup") {
  CHECK(sup_sphere([](const Axis&) { return 2.5; }, 16).value == 2.5);
  const SphereSupResult r = sup_sphere([](const Axis& a) { return a.q().x; }, 1);
  CHECK(r.value == 1.0);  // M=1 samples exactly e1
  // deterministic reduction independent of thread count
  const auto h = [](const Axis& a) { return a.q().x + 0.1 * a.q().y; };
  const double serial = sup_sphere(h, 64, 1).value;
  const double parallel = sup_sphere(h, 64, 4).value;
  CHECK(serial == parallel);
}

TEST_SUITE_END();
