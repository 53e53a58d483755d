// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "quat.hpp"

namespace slicespace {

/// Nodes/weights of a rule on [0,1] computing integral h(s) (1-s)^beta ds
/// exactly for polynomial h up to degree 2n-1 (Gauss-Jacobi; beta = 0 is
/// Gauss-Legendre). Results are cached per (n, beta).
struct RadialRule {
  std::vector<double> s;
  std::vector<double> w;
};

RadialRule gauss_jacobi01(int n, double beta);

/// Tensor rule on the unit disk: Gauss-Jacobi in s = r^2 times the uniform
/// trapezoid rule in the angle.
struct DiskRule {
  int radial = 64;
  int angular = 128;
  double clip = 1.0 - 1e-6;  // only meaningful for measures singular at the rim

  void validate() const;
  DiskRule doubled() const { return DiskRule{2 * radial, 2 * angular, clip}; }
};

/// The area measures on a slice disk B_i. `NormalizedArea` has total mass 1,
/// WeightedArea is (alpha+1)(1-|z|^2)^alpha times it, PlainArea has mass pi,
/// Lambda is dA_i/(1-|z|^2)^2 (clipped at the rim).
struct Measure {
  enum class Kind { NormalizedArea, WeightedArea, Lambda, PlainArea };
  Kind kind = Kind::NormalizedArea;
  double alpha = 0.0;

  static Measure area() { return {Kind::NormalizedArea, 0.0}; }
  static Measure weighted_area(double alpha);
  static Measure lambda() { return {Kind::Lambda, 0.0}; }
  static Measure plain_area() { return {Kind::PlainArea, 0.0}; }
};

/// Integral of g over the unit disk against the measure. g receives the slice
/// coordinate z as a complex number; non-finite samples abort with the
/// offending node in the message.
Quaternion integrate_disk(const std::function<Quaternion(Complex)>& g, const DiskRule& rule,
                          const Measure& m);
double integrate_disk_real(const std::function<double(Complex)>& g, const DiskRule& rule,
                           const Measure& m);

/// Integral of h(z) (1-|z|^2)^decay dlambda(z) with the full radial weight
/// built into a Gauss-Jacobi rule; requires decay > 1 (net exponent > -1).
double integrate_lambda_decay(const std::function<double(Complex)>& h, double decay,
                              const DiskRule& rule);

struct SupConfig {
  int radial = 256;
  int angular = 256;
  double clip = 1.0 - 1e-6;
};

struct SupResult {
  double value = 0.0;
  Complex argmax;
};

/// Lower estimate of sup over the disk: radial-angular scan (with geometric
/// refinement of the radii toward the rim) plus one golden-section polish
/// around the best node, first in r then in the angle.
SupResult sup_disk(const std::function<double(Complex)>& g, const SupConfig& cfg);

struct SphereSupResult {
  double value = 0.0;
  Axis axis = Axis::e1();
};

/// One bag of numerical knobs, echoed verbatim into reports.
struct QuadConfig {
  DiskRule rule;
  SupConfig sup;
  int sphere_samples = 64;
  int a_grid = 64;   // size of the deterministic a-grid in the small-p Besov seminorm
  int threads = 0;   // 0: SLICESPACE_THREADS env or hardware count
};

/// Max of h over sphere_sample(m); evaluations may run in parallel, the
/// reduction order is fixed.
SphereSupResult sup_sphere(const std::function<double(const Axis&)>& h, int m, int threads = 0);

}  // namespace slicespace
