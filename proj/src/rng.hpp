// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "quat.hpp"

namespace slicespace {

/// Deterministic random source. Only the raw mt19937_64 stream is taken from
/// the standard library; all value transforms are done here so that output is
/// bit-identical across platforms and library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// uniform in [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// standard normal via Box-Muller
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Quaternion quaternion(double scale = 1.0) {
    return Quaternion{normal() * scale, normal() * scale, normal() * scale, normal() * scale};
  }

  Axis axis() {
    while (true) {
      Quaternion v{0.0, normal(), normal(), normal()};
      if (v.vec_norm() > 1e-6) return Axis::from_vector(v);
    }
  }

  /// uniform w.r.t. area on the disk of radius rmax
  Complex in_disk(double rmax = 1.0) {
    const double r = rmax * std::sqrt(uniform());
    const double t = 2.0 * std::numbers::pi * uniform();
    return Complex{r * std::cos(t), r * std::sin(t)};
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace slicespace
