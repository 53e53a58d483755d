// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace slicespace {

using Complex = std::complex<double>;

/// Element of the quaternion algebra H over the basis {1, e1, e2, e3},
/// with e1*e2 = e3, e2*e3 = e1, e3*e1 = e2.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion real(double r) { return {r, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }

  constexpr Quaternion operator+(const Quaternion& o) const {
    return {w + o.w, x + o.x, y + o.y, z + o.z};
  }
  constexpr Quaternion operator-(const Quaternion& o) const {
    return {w - o.w, x - o.x, y - o.y, z - o.z};
  }
  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }

  constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
  constexpr Quaternion operator/(double s) const { return {w / s, x / s, y / s, z / s}; }

  // Hamilton product.
  constexpr Quaternion operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }
  /// Norm of the vector part alone.
  double vec_norm() const { return std::sqrt(x * x + y * y + z * z); }

  Quaternion inverse() const {
    const double n2 = norm_sq();
    if (n2 == 0.0) throw std::domain_error("Quaternion::inverse: zero quaternion");
    return conj() / n2;
  }

  constexpr bool operator==(const Quaternion&) const = default;

  bool is_finite() const {
    return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
  bool is_zero() const { return w == 0.0 && x == 0.0 && y == 0.0 && z == 0.0; }
};

inline constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

/// Euclidean inner product of R^4.
inline constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Unit purely imaginary quaternion, i.e. a point of the axis sphere.
/// Squares to -1; selects the complex slice C(i) = span{1, i}.
class Axis {
 public:
  static Axis e1() { return Axis(Quaternion{0, 1, 0, 0}); }
  static Axis e2() { return Axis(Quaternion{0, 0, 1, 0}); }
  static Axis e3() { return Axis(Quaternion{0, 0, 0, 1}); }

  /// Normalizes the vector part of v; the real part must be negligible.
  static Axis from_vector(const Quaternion& v);
  static Axis from_components(double vx, double vy, double vz) {
    return from_vector(Quaternion{0.0, vx, vy, vz});
  }

  const Quaternion& q() const { return u_; }
  bool operator==(const Axis& o) const { return u_ == o.u_; }

 private:
  explicit Axis(Quaternion u) : u_(u) {}
  Quaternion u_;
};

/// Slice coordinates q = x0 + axis*y with y >= 0. Real quaternions get the
/// default axis e1 and is_real set; consumers must branch on the flag.
struct SliceCoord {
  double x0;
  double yv;
  Axis axis;
  bool is_real;
};

SliceCoord decompose(const Quaternion& q);

/// The point x + i*y of the slice C(i), for abstract z = x + iy.
inline Quaternion embed(const Axis& i, Complex zc) {
  const Quaternion& u = i.q();
  const double im = zc.imag();
  return {zc.real(), im * u.x, im * u.y, im * u.z};
}

/// Deterministic unit imaginary orthogonal to i: Gram-Schmidt of e2 against i,
/// falling back to e3 when the projection degenerates.
Axis orthogonal_unit(const Axis& i);

/// M quasi-uniform axes on the sphere of imaginary units (Fibonacci lattice);
/// deterministic for fixed M and always containing e1.
std::vector<Axis> sphere_sample(int m);

/// Coordinates of a in the orthonormal frame {1, i, j, ij}: a = alpha + beta*j
/// with alpha, beta in C(i).
struct SplitParts {
  Complex alpha;
  Complex beta;
};

SplitParts split_quaternion(const Quaternion& a, const Axis& i, const Axis& j);
Quaternion merge_parts(Complex alpha, Complex beta, const Axis& i, const Axis& j);

}  // namespace slicespace
