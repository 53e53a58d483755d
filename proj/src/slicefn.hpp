// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "series.hpp"

namespace slicespace {

/// Derivatives (not Taylor coefficients) of the two Splitting-Lemma
/// components at a point of the defining slice: fk[r] = d^r f_k / dz^r.
struct SliceJet {
  std::vector<Complex> f1;
  std::vector<Complex> f2;

  explicit SliceJet(int order = 0) : f1(order + 1), f2(order + 1) {}
  int order() const { return static_cast<int>(f1.size()) - 1; }
};

/// A slice regular function given by an analytic evaluator on one slice.
/// Off-slice values and derivatives come exclusively from the Representation
/// Formula; on-slice derivatives are analytic jets, never finite differences.
class SliceFunction {
 public:
  using JetFn = std::function<SliceJet(Complex, int)>;

  SliceFunction(const Axis& axis, JetFn fn);

  const Axis& axis() const { return axis_; }
  const Axis& orth() const { return orth_; }

  SliceJet jet(Complex z, int order) const { return fn_(z, order); }
  Quaternion on_slice_value(Complex z) const;
  Quaternion on_slice_derivative(Complex z, int order = 1) const;

  /// Value anywhere in the open unit ball.
  Quaternion value(const Quaternion& q) const;
  /// d^order/dx0^order anywhere in the open unit ball.
  Quaternion derivative(const Quaternion& q, int order = 1) const;

  /// The same function presented on another slice (jets recomputed through
  /// the Representation Formula).
  SliceFunction reslice(const Axis& new_axis) const;

  SliceFunction right_multiplied(const Quaternion& lambda) const;
  SliceFunction operator+(const SliceFunction& o) const;

  static SliceFunction from_series(const PowerSeries& f, const Axis& axis);
  static SliceFunction constant(const Quaternion& c, const Axis& axis);

 private:
  Axis axis_;
  Axis orth_;
  JetFn fn_;
};

/// Slice regular Moebius transformation of the unit ball. On its slice it is
/// the classical map T_a(z) = (a - z)/(1 - conj(a) z).
class MoebiusMap {
 public:
  /// Nonreal a: the axis is vec(a)/|vec(a)|. Throws for real a (supply the
  /// axis explicitly) or |a| >= 1.
  explicit MoebiusMap(const Quaternion& a);
  /// Real-a constructor with a caller-chosen axis (any slice works).
  MoebiusMap(const Quaternion& a, const Axis& axis);
  MoebiusMap(Complex a, const Axis& axis);

  Complex a() const { return a_; }
  const Axis& axis() const { return axis_; }

  Complex map(Complex z) const;
  Complex map_derivative(Complex z) const;  // (|a|^2 - 1)/(1 - conj(a) z)^2
  /// Derivatives of the map at z, orders 0..order.
  std::vector<Complex> jet(Complex z, int order) const;

  Quaternion value(const Quaternion& q) const;
  SliceFunction as_slice_function() const;

 private:
  Complex a_;
  Axis axis_;
};

/// The composition f o_i T_a through the split components on the slice of T.
SliceFunction compose(const PowerSeries& f, const MoebiusMap& t);
/// Same for an evaluator-backed f; the axes must agree.
SliceFunction compose(const SliceFunction& f, const MoebiusMap& t);

/// Slice regular extension P_i[g] of an analytic evaluator with values
/// f1 + f2 j given by its jets on B_i.
SliceFunction slice_extension(const Axis& axis, SliceFunction::JetFn g);

/// Helpers for scalar (C(i)-valued) evaluators: the jet has f2 = 0.
SliceFunction::JetFn scalar_jet_fn(std::function<Complex(Complex, int)> nth_derivative);

}  // namespace slicespace
