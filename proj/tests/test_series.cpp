// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "rng.hpp"
#include "series.hpp"

using namespace slicespace;

namespace {
const Quaternion e1{0, 1, 0, 0};
const Quaternion e2{0, 0, 1, 0};
const Quaternion e3{0, 0, 0, 1};

PowerSeries random_series(Rng& rng, int degree) {
  std::vector<Quaternion> c(degree + 1);
  for (auto& q : c) q = rng.quaternion();
  return PowerSeries(std::move(c));
}
}  // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("evaluation respects right coefficients") {
  const PowerSeries f({Quaternion::one(), e2});
  CHECK(f.eval(e1) == Quaternion::one() + e3);  // 1 + e1 e2 = 1 + e3
  CHECK(f.eval(Quaternion{}) == Quaternion::one());

  const PowerSeries sq({Quaternion{}, Quaternion{}, Quaternion::one()});
  CHECK((sq.eval(Quaternion{1, 1, 0, 0}) - Quaternion{0, 2, 0, 0}).norm() < 1e-15);
}

TEST_CASE("derivative") {
  const PowerSeries cube = PowerSeries::monomial(3, Quaternion::one());
  const PowerSeries d = cube.derivative();
  REQUIRE(d.size() == 3);
  CHECK(d.at(2) == Quaternion::real(3));
  CHECK(PowerSeries::constant(e2).derivative().is_zero());
  const PowerSeries f({Quaternion::one(), e1, e2});
  const PowerSeries df = f.derivative();
  CHECK(df.at(0) == e1);
  CHECK(df.at(1) == e2 * 2.0);
}

TEST_CASE("star product") {
  const PowerSeries a({Quaternion::one(), e1});
  const PowerSeries b({Quaternion::one(), e2});
  const PowerSeries c = star(a, b);
  REQUIRE(c.size() == 3);
  CHECK(c.at(0) == Quaternion::one());
  CHECK(c.at(1) == e1 + e2);
  CHECK(c.at(2) == e3);

  Rng rng(2);
  const PowerSeries f = random_series(rng, 6);
  const PowerSeries unit = PowerSeries::constant(Quaternion::one());
  CHECK(star(f, unit).coeffs() == f.coeffs());

  const PowerSeries q = PowerSeries::identity();
  const PowerSeries q2 = star(q, q);
  CHECK(q2.size() == 3);
  CHECK(q2.at(2) == Quaternion::one());
}

TEST_CASE("star product of slice-preserving factors is pointwise on the slice") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Axis i = rng.axis();
    // coefficients inside C(i)
    auto make = [&](int deg) {
      std::vector<Quaternion> c(deg + 1);
      for (auto& q : c) q = embed(i, Complex{rng.normal(), rng.normal()});
      return PowerSeries(std::move(c));
    };
    const PowerSeries f = make(4), g = make(5);
    const PowerSeries fg = star(f, g);
    const Quaternion z = embed(i, rng.in_disk(0.95));
    const Quaternion lhs = fg.eval(z);
    const Quaternion rhs = f.eval(z) * g.eval(z);
    CHECK((lhs - rhs).norm() < 1e-12 * std::max(1.0, rhs.norm()));
  }
}

TEST_CASE("split worked examples") {
  const Axis i = Axis::e1();
  {
    const SplitSeries s = split(PowerSeries({Quaternion{}, e2}), i);
    CHECK(s.alpha[1] == Complex{0, 0});
    CHECK(s.beta[1] == Complex{1, 0});
  }
  {
    const SplitSeries s = split(PowerSeries({Quaternion{3, 0, 0, 0}, Quaternion{-1, 0, 0, 0}}), i);
    CHECK(s.beta[0] == Complex{0, 0});
    CHECK(s.beta[1] == Complex{0, 0});
  }
  {
    const SplitSeries s = split(PowerSeries({Quaternion{1, 1, 1, 1}}), i);
    CHECK(s.alpha[0] == Complex{1, 1});
    CHECK(s.beta[0] == Complex{1, 1});
  }
}

TEST_CASE("merge worked example and round trip") {
  SplitSeries s;
  s.i = Axis::e1();
  s.j = Axis::e2();
  s.alpha = {Complex{0, 1}};
  s.beta = {Complex{1, 0}};
  CHECK(merge(s).at(0) == e1 + e2);

  Rng rng(17);
  const auto axes = sphere_sample(16);
  for (int trial = 0; trial < 200; ++trial) {
    const PowerSeries f = random_series(rng, trial % 12);
    const double scale = std::max(1.0, f.max_coeff_norm());
    for (const Axis& i : axes) {
      const PowerSeries back = merge(split(f, i));
      REQUIRE(back.size() == f.size());
      double worst = 0.0;
      for (std::size_t n = 0; n < f.size(); ++n)
        worst = std::max(worst, (back.at(n) - f.at(n)).norm());
      CHECK(worst <= 1e-14 * scale);
    }
  }
}

TEST_CASE("splitting modulus identity") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const PowerSeries f = random_series(rng, 8);
    const Axis i = rng.axis();
    const SplitSeries d = split(f.derivative(), i);
    const Complex z = rng.in_disk(0.99);
    const double direct = f.derivative().eval(embed(i, z)).norm_sq();
    const double viasplit = std::norm(d.eval_alpha(z)) + std::norm(d.eval_beta(z));
    CHECK(direct == doctest::Approx(viasplit).epsilon(1e-12));
  }
}

TEST_CASE("representation formula") {
  const Axis i = Axis::e2(), j = Axis::e1();
  const Quaternion val{0.5, 0.25, -0.125, 1.0};
  // target axis equal to the source axis returns f(x + y j) exactly
  CHECK((represent(Quaternion{9, 9, 9, 9}, val, j, j) - val).norm() < 1e-15);

  // f = q^2 on slice e1, reconstructed on axis e2 at 1/2 + e2/2
  const PowerSeries sq = PowerSeries::monomial(2, Quaternion::one());
  const Complex z{0.5, 0.5};
  const Quaternion fm = sq.eval(embed(j, std::conj(z)));
  const Quaternion fp = sq.eval(embed(j, z));
  const Quaternion got = represent(fm, fp, i, j);
  const Quaternion expected = sq.eval(embed(i, z));
  CHECK((got - expected).norm() < 1e-14);
}

TEST_CASE("representation consistency across random slices") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const PowerSeries f = random_series(rng, 16);
    const double scale = std::max(1.0, f.max_coeff_norm());
    const Axis j = rng.axis();
    for (int k = 0; k < 100; ++k) {
      const Complex z = rng.in_disk(0.999);
      const Axis target = rng.axis();
      const Quaternion fm = f.eval(embed(j, std::conj(z)));
      const Quaternion fp = f.eval(embed(j, z));
      const Quaternion got = represent(fm, fp, target, j);
      const Quaternion expected = f.eval(embed(target, z));
      CHECK((got - expected).norm() <= 1e-12 * scale);
    }
  }
}

TEST_CASE("dilation is exact on coefficients") {
  Rng rng(5);
  const PowerSeries f = random_series(rng, 6);
  const PowerSeries fr = f.dilate(0.5);
  for (std::size_t n = 0; n < f.size(); ++n)
    CHECK((fr.at(n) - f.at(n) * std::pow(0.5, static_cast<double>(n))).norm() < 1e-16);
}

TEST_CASE("json round trip and validation") {
  const PowerSeries f({Quaternion{1, 2, 3, 4}, Quaternion{-0.5, 0, 0.25, 0}});
  const PowerSeries back = series_from_json(series_to_json(f));
  CHECK(back.coeffs() == f.coeffs());

  CHECK_THROWS_AS(series_from_json("not json"), std::runtime_error);
  CHECK_THROWS_AS(series_from_json("{\"coeffs\": [[1,2,3]]}"), std::runtime_error);
  CHECK_THROWS_AS(series_from_json("{\"coeffs\": [[1,2,3,\"x\"]]}"), std::runtime_error);
  CHECK_THROWS_AS(series_from_json("{}"), std::runtime_error);

  // trailing zero coefficients are trimmed canonically
  const PowerSeries trimmed = series_from_json("{\"coeffs\": [[1,0,0,0],[0,0,0,0]]}");
  CHECK(trimmed.size() == 1);
}

TEST_SUITE_END();
