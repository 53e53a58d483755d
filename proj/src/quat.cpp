// SPDX-License-Identifier: Apache-2.0
#include "quat.hpp"

#include <algorithm>
#include <numbers>

namespace slicespace {

Axis Axis::from_vector(const Quaternion& v) {
  const double n = v.vec_norm();
  if (!(n > 0.0) || !std::isfinite(n))
    throw std::invalid_argument("Axis::from_vector: vector part must be nonzero and finite");
  return Axis(Quaternion{0.0, v.x / n, v.y / n, v.z / n});
}

SliceCoord decompose(const Quaternion& q) {
  const double yv = q.vec_norm();
  if (yv == 0.0) return SliceCoord{q.w, 0.0, Axis::e1(), true};
  return SliceCoord{q.w, yv, Axis::from_vector(q), false};
}

Axis orthogonal_unit(const Axis& i) {
  const Quaternion& u = i.q();
  // project e2 orthogonally to i
  Quaternion p = Quaternion{0, 0, 1, 0} - u * u.y;
  const double n = p.vec_norm();
  if (n < 1e-8) {
    Quaternion p3 = Quaternion{0, 0, 0, 1} - u * u.z;
    return Axis::from_vector(p3);
  }
  return Axis::from_vector(p);
}

std::vector<Axis> sphere_sample(int m) {
  if (m < 1) throw std::invalid_argument("sphere_sample: M must be >= 1");
  std::vector<Axis> out;
  out.reserve(static_cast<std::size_t>(m));
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < m; ++k) {
    const double ct = 1.0 - 2.0 * (k + 0.5) / m;
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    const double phi = golden_angle * k;
    out.push_back(Axis::from_components(st * std::cos(phi), st * std::sin(phi), ct));
  }
  // pin the lattice point nearest to e1 to exactly e1
  std::size_t best = 0;
  double best_dot = -2.0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double d = out[k].q().x;
    if (d > best_dot) {
      best_dot = d;
      best = k;
    }
  }
  out[best] = Axis::e1();
  return out;
}

SplitParts split_quaternion(const Quaternion& a, const Axis& i, const Axis& j) {
  const Quaternion k = i.q() * j.q();
  return SplitParts{Complex{a.w, dot(a, i.q())}, Complex{dot(a, j.q()), dot(a, k)}};
}

Quaternion merge_parts(Complex alpha, Complex beta, const Axis& i, const Axis& j) {
  const Quaternion k = i.q() * j.q();
  return Quaternion::real(alpha.real()) + i.q() * alpha.imag() + j.q() * beta.real() +
         k * beta.imag();
}

}  // namespace slicespace
