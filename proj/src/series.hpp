// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "quat.hpp"

namespace slicespace {

/// Truncated power series f(q) = sum_{n<=N} q^n a_n with right quaternionic
/// coefficients; the canonical representation of a slice regular polynomial.
/// Trailing zero coefficients are trimmed on construction.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Quaternion> coeffs);

  static PowerSeries zero() { return PowerSeries(); }
  static PowerSeries constant(const Quaternion& c) { return PowerSeries({c}); }
  static PowerSeries identity() { return PowerSeries({Quaternion{}, Quaternion::one()}); }
  static PowerSeries monomial(std::size_t n, const Quaternion& a);

  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient a_n (zero beyond the truncation degree).
  Quaternion at(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : Quaternion{};
  }

  /// Horner evaluation respecting right coefficients: the accumulator is
  /// multiplied by q on the left.
  Quaternion eval(const Quaternion& q) const;

  PowerSeries derivative() const;
  PowerSeries derivative(int order) const;

  /// Dilation f_r(q) = f(rq), exact on coefficients (r^n a_n).
  PowerSeries dilate(double r) const;

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  /// Right scalar multiple q^n (a_n * lambda).
  PowerSeries right_scaled(const Quaternion& lambda) const;

  double max_coeff_norm() const;

 private:
  std::vector<Quaternion> coeffs_;
};

/// Cauchy convolution c_n = sum_k a_k b_{n-k}, the coefficient form of the
/// slice regular *-product.
PowerSeries star(const PowerSeries& f, const PowerSeries& g);

/// The Splitting-Lemma form of a series on the slice C(i): coefficients
/// a_n = alpha_n + beta_n j with alpha_n, beta_n in C(i) and j = orthogonal_unit(i).
struct SplitSeries {
  Axis i = Axis::e1();
  Axis j = Axis::e2();
  std::vector<Complex> alpha;
  std::vector<Complex> beta;

  Complex eval_alpha(Complex z) const;
  Complex eval_beta(Complex z) const;
  /// Value of the restriction Q_i[f] at z, as a quaternion.
  Quaternion eval(Complex z) const;
};

SplitSeries split(const PowerSeries& f, const Axis& i);
PowerSeries merge(const SplitSeries& s);

/// Representation Formula: value at x + target*y from the two values on the
/// slice C(source) at x -+ source*y.
Quaternion represent(const Quaternion& f_minus, const Quaternion& f_plus, const Axis& target,
                     const Axis& source);

PowerSeries series_from_json(const std::string& text);
std::string series_to_json(const PowerSeries& f);

}  // namespace slicespace
