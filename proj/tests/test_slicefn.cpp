// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "rng.hpp"
#include "slicefn.hpp"

using namespace slicespace;

namespace {
PowerSeries random_series(Rng& rng, int degree) {
  std::vector<Quaternion> c(degree + 1);
  for (auto& q : c) q = rng.quaternion();
  return PowerSeries(std::move(c));
}
}  // namespace

TEST_SUITE_BEGIN("slicefn");

TEST_CASE("series-backed function reproduces the series everywhere") {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const PowerSeries f = random_series(rng, 10);
    const Axis i = rng.axis();
    const SliceFunction fn = SliceFunction::from_series(f, i);
    const double scale = std::max(1.0, f.max_coeff_norm());
    for (int k = 0; k < 20; ++k) {
      const Quaternion q = embed(rng.axis(), rng.in_disk(0.95));
      CHECK((fn.value(q) - f.eval(q)).norm() < 1e-12 * scale);
      CHECK((fn.derivative(q) - f.derivative().eval(q)).norm() < 1e-12 * scale);
      CHECK((fn.derivative(q, 2) - f.derivative(2).eval(q)).norm() < 1e-11 * scale);
    }
  }
}

TEST_CASE("evaluation outside the ball is rejected") {
  const SliceFunction fn = SliceFunction::from_series(PowerSeries::identity(), Axis::e1());
  CHECK_THROWS_AS(fn.value(Quaternion{1.5, 0, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(fn.value(Quaternion{0, 1, 0, 0}), std::domain_error);
}

TEST_CASE("moebius basics") {
  const Quaternion a{0.3, 0.4, 0, 0};
  const MoebiusMap t(a);
  CHECK(t.axis() == Axis::e1());
  // T_a(0) = a and T_a(a) = 0
  CHECK((t.value(Quaternion{1e-300, 0, 0, 0}) - a).norm() < 1e-14);
  CHECK(std::abs(t.map(Complex{0.3, 0.4})) < 1e-15);
  CHECK(std::abs(t.map(Complex{0, 0}) - Complex{0.3, 0.4}) < 1e-15);
  // involution on the slice
  Rng rng(31);
  for (int k = 0; k < 50; ++k) {
    const Complex z = rng.in_disk(0.999);
    CHECK(std::abs(t.map(t.map(z)) - z) < 1e-13);
  }
  // real a needs an explicit axis
  CHECK_THROWS_AS(MoebiusMap(Quaternion::real(0.5)), std::invalid_argument);
  CHECK_NOTHROW(MoebiusMap(Quaternion::real(0.5), Axis::e3()));
  CHECK_THROWS_AS(MoebiusMap(Quaternion{1.2, 0.4, 0, 0}), std::invalid_argument);
  // axis consistency for nonreal a
  CHECK_THROWS_AS(MoebiusMap(a, Axis::e2()), std::invalid_argument);
}

TEST_CASE("moebius jets match the closed derivative formulas") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Complex a = rng.in_disk(0.8);
    const MoebiusMap t(a, Axis::e1());
    const Complex z = rng.in_disk(0.9);
    const auto jet = t.jet(z, 3);
    const Complex d = 1.0 - std::conj(a) * z;
    const double m = std::norm(a) - 1.0;
    CHECK(std::abs(jet[0] - (a - z) / d) < 1e-14);
    CHECK(std::abs(jet[1] - m / (d * d)) < 1e-13);
    CHECK(std::abs(jet[2] - 2.0 * std::conj(a) * m / (d * d * d)) < 1e-13);
    CHECK(std::abs(jet[3] - 6.0 * std::conj(a) * std::conj(a) * m / (d * d * d * d)) < 1e-12);
    CHECK(std::abs(t.map_derivative(z) - jet[1]) < 1e-14);
  }
}

TEST_CASE("composition equals substitution on the slice") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const PowerSeries f = random_series(rng, 8);
    const Axis i = rng.axis();
    const Complex a = rng.in_disk(0.8);
    const MoebiusMap t(a, i);
    const SliceFunction comp = compose(f, t);
    const double scale = std::max(1.0, f.max_coeff_norm());
    for (int k = 0; k < 25; ++k) {
      const Complex z = rng.in_disk(0.95);
      const Quaternion got = comp.on_slice_value(z);
      const Quaternion expected = f.eval(embed(i, t.map(z)));
      CHECK((got - expected).norm() <= 1e-12 * scale);
    }
  }
}

TEST_CASE("composition endpoint values") {
  Rng rng(19);
  const PowerSeries f = random_series(rng, 6);
  const Axis i = Axis::e2();
  const Complex a{0.2, 0.5};
  const MoebiusMap t(a, i);
  const SliceFunction comp = compose(f, t);
  // (f o T_a)(a) = f(0), (f o T_a)(0) = f(a)
  CHECK((comp.on_slice_value(a) - f.at(0)).norm() < 1e-12);
  CHECK((comp.on_slice_value(Complex{0, 0}) - f.eval(embed(i, a))).norm() < 1e-12);

  // f constant composes to itself; T_0 composes even functions to themselves
  const SliceFunction cc = compose(PowerSeries::constant(Quaternion{1, 2, 3, 4}), t);
  CHECK((cc.value(Quaternion{0.1, 0.2, 0, 0}) - Quaternion{1, 2, 3, 4}).norm() < 1e-13);

  const PowerSeries even = PowerSeries::monomial(2, Quaternion::one());
  const MoebiusMap t0(Complex{0, 0}, i);
  const SliceFunction comp0 = compose(even, t0);
  const Quaternion q{0.3, 0.1, -0.2, 0.4};
  CHECK((comp0.value(q) - even.eval(q)).norm() < 1e-13);
}

TEST_CASE("composition jets follow the exact chain rule") {
  Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const PowerSeries f = random_series(rng, 7);
    const Axis i = rng.axis();
    const Complex a = rng.in_disk(0.7);
    const MoebiusMap t(a, i);
    const SliceFunction comp = compose(f, t);
    const SliceFunction fs = SliceFunction::from_series(f, i);
    const Complex z = rng.in_disk(0.9);
    const SliceJet jc = comp.jet(z, 1);
    const Complex w = t.map(z);
    const Complex tp = t.map_derivative(z);
    const SliceJet jf = fs.jet(w, 1);
    CHECK(std::abs(jc.f1[1] - jf.f1[1] * tp) < 1e-11);
    CHECK(std::abs(jc.f2[1] - jf.f2[1] * tp) < 1e-11);
  }
}

TEST_CASE("higher composition jets against a symbolic oracle") {
  // f = q^2 with a real coefficient: (T(z))^2 has derivatives
  // 2TT', 2(T'^2 + TT''), 2(3T'T'' + TT''')
  Rng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex a = rng.in_disk(0.8);
    const MoebiusMap t(a, Axis::e1());
    const SliceFunction comp = compose(PowerSeries::monomial(2, Quaternion::one()), t);
    const Complex z = rng.in_disk(0.9);
    const auto jt = t.jet(z, 3);
    const SliceJet jc = comp.jet(z, 3);
    const Complex expected1 = 2.0 * jt[0] * jt[1];
    const Complex expected2 = 2.0 * (jt[1] * jt[1] + jt[0] * jt[2]);
    const Complex expected3 = 2.0 * (3.0 * jt[1] * jt[2] + jt[0] * jt[3]);
    CHECK(std::abs(jc.f1[1] - expected1) < 1e-12);
    CHECK(std::abs(jc.f1[2] - expected2) < 1e-11);
    CHECK(std::abs(jc.f1[3] - expected3) < 1e-10);
    CHECK(std::abs(jc.f2[1]) < 1e-14);
  }
}

TEST_CASE("slice extension worked examples") {
  const Axis i = Axis::e1();
  // g == 1 extends to the constant 1
  const SliceFunction one =
      slice_extension(i, scalar_jet_fn([](Complex, int r) { return r == 0 ? Complex{1, 0} : Complex{}; }));
  CHECK((one.value(Quaternion{0.2, 0.1, 0.3, 0}) - Quaternion::one()).norm() < 1e-14);

  // g(z) = z extends to the identity
  const SliceFunction ident = slice_extension(i, scalar_jet_fn([](Complex z, int r) {
                                                return r == 0 ? z : (r == 1 ? Complex{1, 0} : Complex{});
                                              }));
  const Quaternion q{0.1, 0.2, -0.3, 0.25};
  CHECK((ident.value(q) - q).norm() < 1e-14);

  // g(z) = z^2 on slice e1 evaluated at e2/2 gives -1/4
  const SliceFunction sq = slice_extension(i, scalar_jet_fn([](Complex z, int r) {
                                             if (r == 0) return z * z;
                                             if (r == 1) return 2.0 * z;
                                             if (r == 2) return Complex{2, 0};
                                             return Complex{};
                                           }));
  CHECK((sq.value(Quaternion{0, 0, 0.5, 0}) - Quaternion::real(-0.25)).norm() < 1e-14);
}

TEST_CASE("reslice agrees with re-splitting a series") {
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const PowerSeries f = random_series(rng, 8);
    const Axis i = rng.axis();
    const Axis j = rng.axis();
    const SliceFunction on_i = SliceFunction::from_series(f, i);
    const SliceFunction moved = on_i.reslice(j);
    const SliceFunction direct = SliceFunction::from_series(f, j);
    for (int k = 0; k < 10; ++k) {
      const Complex z = rng.in_disk(0.95);
      const SliceJet a = moved.jet(z, 2);
      const SliceJet b = direct.jet(z, 2);
      for (int r = 0; r <= 2; ++r) {
        CHECK(std::abs(a.f1[r] - b.f1[r]) < 1e-11);
        CHECK(std::abs(a.f2[r] - b.f2[r]) < 1e-11);
      }
    }
  }
}

TEST_CASE("quaternion and complex moebius constructors agree") {
  Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const Axis i = rng.axis();
    Complex ac = rng.in_disk(0.8);  // either sign of Im
    const Quaternion aq = embed(i, ac);
    if (decompose(aq).is_real) continue;
    const MoebiusMap from_quat(aq);
    const MoebiusMap from_complex(ac, i);
    for (int k = 0; k < 10; ++k) {
      const Quaternion q = embed(rng.axis(), rng.in_disk(0.9));
      CHECK((from_quat.value(q) - from_complex.value(q)).norm() < 1e-13);
    }
  }
}

TEST_CASE("right multiplication acts pointwise") {
  Rng rng(47);
  const PowerSeries f = random_series(rng, 6);
  const Quaternion lambda = rng.quaternion();
  const Axis i = rng.axis();
  const SliceFunction fn = SliceFunction::from_series(f, i).right_multiplied(lambda);
  for (int k = 0; k < 20; ++k) {
    const Quaternion q = embed(rng.axis(), rng.in_disk(0.9));
    CHECK((fn.value(q) - f.eval(q) * lambda).norm() < 1e-12 * std::max(1.0, lambda.norm()));
  }
}

TEST_SUITE_END();
