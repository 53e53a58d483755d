// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "kernels.hpp"

using namespace slicespace;

namespace {
const DiskRule kRule{64, 128, 1.0 - 1e-6};

PowerSeries random_series(Rng& rng, int degree) {
  std::vector<Quaternion> c(degree + 1);
  for (auto& q : c) q = rng.quaternion();
  return PowerSeries(std::move(c));
}
}  // namespace

TEST_SUITE_BEGIN("kernels");

TEST_CASE("kernel values") {
  const Axis i = Axis::e1();
  // w = 0 collapses the kernel to 1 for every q
  Rng rng(3);
  for (int k = 0; k < 10; ++k) {
    const Quaternion q = embed(rng.axis(), rng.in_disk(0.9));
    CHECK((bergman_kernel(q, Complex{0, 0}, i, 1.3) - Quaternion::one()).norm() < 1e-14);
  }
  // on a common slice the kernel is the complex formula
  const Complex z{0.4, -0.3}, w{0.2, 0.6};
  const Quaternion got = bergman_kernel(embed(i, z), w, i, 0.0);
  const Complex expected = std::pow(1.0 - z * std::conj(w), -2.0);
  CHECK((got - embed(i, expected)).norm() < 1e-13);
  // conjugate symmetry on the slice
  const Quaternion swapped = bergman_kernel(embed(i, w), z, i, 0.0);
  CHECK((swapped - got.conj()).norm() < 1e-13);
  // principal branch is safe: 1 - z conj(w) keeps positive real part
  for (int k = 0; k < 500; ++k) {
    const Complex a = rng.in_disk(0.9999), b = rng.in_disk(0.9999);
    CHECK((1.0 - a * std::conj(b)).real() > 0.0);
  }
}

TEST_CASE("kernel extensions agree with the two-variable series") {
  Rng rng(11);
  const Axis i = Axis::e2();
  for (const double alpha : {0.0, 1.0}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Complex z = rng.in_disk(0.55);
      const Complex wz = rng.in_disk(0.55);
      const Axis target = rng.axis();
      const Quaternion w_off = embed(target, wz);

      // oracle: K_alpha(z, w) = sum_n c_n z^n conj(w)^n with the binomial
      // coefficients of (1-x)^-(2+alpha)
      Quaternion series{};
      const Quaternion zq = embed(i, z);
      Quaternion zpow = Quaternion::one();
      Quaternion wpow = Quaternion::one();
      double cn = 1.0;
      for (int n = 0; n <= 90; ++n) {
        series += cn * zpow * wpow;
        zpow = zpow * zq;
        wpow = wpow * w_off.conj();
        cn *= (2.0 + alpha + n) / (n + 1.0);
      }
      const Quaternion via_wbar = bergman_kernel_wbar_extension(z, w_off, i, alpha);
      CHECK((via_wbar - series).norm() < 1e-10);

      // the z-extension agrees with the same series for off-slice q, on-slice w
      const Quaternion q_off = embed(target, z);
      Quaternion series_z{};
      zpow = Quaternion::one();
      wpow = Quaternion::one();
      cn = 1.0;
      for (int n = 0; n <= 90; ++n) {
        series_z += cn * zpow * wpow;
        zpow = zpow * q_off;
        wpow = wpow * embed(i, std::conj(wz));
        cn *= (2.0 + alpha + n) / (n + 1.0);
      }
      const Quaternion via_z = bergman_kernel(q_off, wz, i, alpha);
      CHECK((via_z - series_z).norm() < 1e-10);
    }
  }
}

TEST_CASE("projection worked examples") {
  const Axis i = Axis::e1();
  Rng rng(17);
  // h == 1 reproduces the constant
  const SliceFunction p1 =
      bergman_project([](Complex) { return Quaternion::one(); }, 0.0, i, kRule);
  for (int k = 0; k < 5; ++k)
    CHECK((p1.on_slice_value(rng.in_disk(0.8)) - Quaternion::one()).norm() < 1e-10);

  // anti-holomorphic inputs are annihilated
  const SliceFunction pbar =
      bergman_project([&i](Complex w) { return embed(i, std::conj(w)); }, 0.0, i, kRule);
  for (int k = 0; k < 5; ++k) CHECK(pbar.on_slice_value(rng.in_disk(0.8)).norm() < 1e-10);

  // holomorphic polynomials reproduce
  const SliceFunction pz2 =
      bergman_project([&i](Complex w) { return embed(i, w * w); }, 0.0, i, kRule);
  for (int k = 0; k < 5; ++k) {
    const Complex z = rng.in_disk(0.8);
    CHECK((pz2.on_slice_value(z) - embed(i, z * z)).norm() < 1e-9);
  }

  // non-finite integrands are rejected with the node location
  CHECK_THROWS_AS(bergman_project(
                      [](Complex w) {
                        return Quaternion::real(1.0 / (std::abs(w) - std::abs(w)));
                      },
                      0.0, i, kRule),
                  std::runtime_error);
}

TEST_CASE("reproducing property for series with quaternionic coefficients") {
  Rng rng(23);
  for (const double alpha : {0.0, 1.0}) {
    const PowerSeries f = random_series(rng, 4);
    const CheckResult res = reproducing_check(f, alpha, Axis::e1(), kRule, rng, 30);
    CHECK(res.pass);
    CHECK(res.lhs < 1e-8);
  }
  // degree cap is enforced
  Rng rng2(5);
  CHECK_THROWS_AS(reproducing_check(random_series(rng2, 20), 0.0, Axis::e1(), kRule, rng2, 10),
                  std::invalid_argument);
}

TEST_CASE("atomic synthesis") {
  const Axis i = Axis::e1();
  // single atom at 0 with b = 1 synthesizes the constant
  const SliceFunction one = atomic_synthesis({Complex{0, 0}}, {Quaternion::one()}, 1.0, i);
  CHECK((one.value(Quaternion{0.3, 0.2, 0.1, 0}) - Quaternion::one()).norm() < 1e-13);
  // empty atom list synthesizes zero
  const SliceFunction zero = atomic_synthesis({}, {}, 1.0, i);
  CHECK(zero.value(Quaternion{0.1, 0, 0.2, 0}).norm() == 0.0);
  // atoms outside the disk are rejected
  CHECK_THROWS_AS(atomic_synthesis({Complex{1.5, 0}}, {Quaternion::one()}, 1.0, i),
                  std::invalid_argument);

  // two atoms at +-1/2, b = 1: the synthesized function has finite rho_{2,i}
  Rng rng(31);
  const SliceFunction f = atomic_synthesis({Complex{0.5, 0}, Complex{-0.5, 0}},
                                           {rng.quaternion(), rng.quaternion()}, 1.0, i);
  const double rho = besov_seminorm(SliceRegular(f), 2.0, i, kRule);
  CHECK(std::isfinite(rho));
  CHECK(rho > 0.0);
}

TEST_CASE("embedding operator") {
  const Axis i = Axis::e1();
  const DiskRule rule{32, 64, 1.0 - 1e-6};
  // zero maps to zero
  const auto t0 = embedding_operator([](Complex) { return Quaternion{}; }, 0.0, 2.0, i, rule);
  CHECK(t0(Complex{0.4, 0.2}).norm() < 1e-15);
  // T[1](0) = int (1-|w|^2)^alpha dA = 1/(alpha+1)
  for (const double alpha : {0.0, 0.5, 2.0}) {
    const auto t1 =
        embedding_operator([](Complex) { return Quaternion::one(); }, alpha, 2.0, i, rule);
    CHECK((t1(Complex{0, 0}) - Quaternion::real(1.0 / (alpha + 1.0))).norm() < 1e-10);
  }
  // norm probe rejects parameters outside p >= 1, pt > 1
  CHECK_THROWS_AS(
      embedding_norm_probe([](Complex) { return Quaternion::one(); }, 0.5, 0.0, 2.0, i, rule),
      std::invalid_argument);
  CHECK_THROWS_AS(
      embedding_norm_probe([](Complex) { return Quaternion::one(); }, 1.0, 0.0, 0.5, i, rule),
      std::invalid_argument);
  const double probe = embedding_norm_probe(
      [](Complex w) { return Quaternion::real(w.real()); }, 2.0, 0.0, 2.0, i, rule);
  CHECK(std::isfinite(probe));
}

TEST_SUITE_END();
