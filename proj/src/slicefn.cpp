// SPDX-License-Identifier: Apache-2.0
#include "slicefn.hpp"

#include <cmath>
#include <stdexcept>

namespace slicespace {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0.0;
  for (std::size_t n = c.size(); n-- > 0;) acc = acc * z + c[n];
  return acc;
}

void differentiate_inplace(std::vector<Complex>& c) {
  if (c.empty()) return;
  for (std::size_t n = 1; n < c.size(); ++n) c[n - 1] = c[n] * static_cast<double>(n);
  c.pop_back();
}

std::vector<Complex> truncated_mul(const std::vector<Complex>& a, const std::vector<Complex>& b,
                                   int order) {
  std::vector<Complex> out(order + 1, Complex{});
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

// Derivatives of g o T at z from the derivatives of g at w = T(z) and the
// derivatives of T at z (truncated power series composition).
std::vector<Complex> chain_derivatives(const std::vector<Complex>& outer,
                                       const std::vector<Complex>& inner) {
  const int m = static_cast<int>(outer.size()) - 1;
  std::vector<Complex> u(m + 1, Complex{});
  for (int r = 1; r <= m; ++r) u[r] = inner[r] / factorial(r);
  std::vector<Complex> p(m + 1, Complex{});
  p[0] = outer[m] / factorial(m);
  for (int s = m - 1; s >= 0; --s) {
    p = truncated_mul(p, u, m);
    p[0] += outer[s] / factorial(s);
  }
  std::vector<Complex> result(m + 1);
  for (int r = 0; r <= m; ++r) result[r] = p[r] * factorial(r);
  return result;
}

void check_in_ball(const Quaternion& q) {
  if (!(q.norm_sq() < 1.0))
    throw std::domain_error("SliceFunction: evaluation outside the open unit ball");
}

}  // namespace

SliceFunction::SliceFunction(const Axis& axis, JetFn fn)
    : axis_(axis), orth_(orthogonal_unit(axis)), fn_(std::move(fn)) {}

Quaternion SliceFunction::on_slice_value(Complex z) const {
  const SliceJet j = fn_(z, 0);
  return embed(axis_, j.f1[0]) + embed(axis_, j.f2[0]) * orth_.q();
}

Quaternion SliceFunction::on_slice_derivative(Complex z, int order) const {
  const SliceJet j = fn_(z, order);
  return embed(axis_, j.f1[order]) + embed(axis_, j.f2[order]) * orth_.q();
}

Quaternion SliceFunction::value(const Quaternion& q) const { return derivative(q, 0); }

Quaternion SliceFunction::derivative(const Quaternion& q, int order) const {
  check_in_ball(q);
  const SliceCoord c = decompose(q);
  const Complex z{c.x0, c.yv};
  const SliceJet jm = fn_(std::conj(z), order);
  const SliceJet jp = fn_(z, order);
  const Quaternion vm =
      embed(axis_, jm.f1[order]) + embed(axis_, jm.f2[order]) * orth_.q();
  const Quaternion vp =
      embed(axis_, jp.f1[order]) + embed(axis_, jp.f2[order]) * orth_.q();
  return represent(vm, vp, c.axis, axis_);
}

SliceFunction SliceFunction::reslice(const Axis& new_axis) const {
  if (new_axis == axis_) return *this;
  const Axis a = axis_;
  const Axis o = orth_;
  const Axis na = new_axis;
  const Axis no = orthogonal_unit(new_axis);
  const JetFn fn = fn_;
  return SliceFunction(na, [a, o, na, no, fn](Complex z, int order) {
    const SliceJet jm = fn(std::conj(z), order);
    const SliceJet jp = fn(z, order);
    SliceJet out(order);
    for (int r = 0; r <= order; ++r) {
      const Quaternion vm = embed(a, jm.f1[r]) + embed(a, jm.f2[r]) * o.q();
      const Quaternion vp = embed(a, jp.f1[r]) + embed(a, jp.f2[r]) * o.q();
      const Quaternion qr = represent(vm, vp, na, a);
      const SplitParts parts = split_quaternion(qr, na, no);
      out.f1[r] = parts.alpha;
      out.f2[r] = parts.beta;
    }
    return out;
  });
}

SliceFunction SliceFunction::right_multiplied(const Quaternion& lambda) const {
  const SplitParts l = split_quaternion(lambda, axis_, orth_);
  const JetFn fn = fn_;
  const Complex l1 = l.alpha, l2 = l.beta;
  return SliceFunction(axis_, [fn, l1, l2](Complex z, int order) {
    const SliceJet j = fn(z, order);
    SliceJet out(order);
    for (int r = 0; r <= order; ++r) {
      // (f1 + f2 j)(l1 + l2 j) = (f1 l1 - f2 conj(l2)) + (f1 l2 + f2 conj(l1)) j
      out.f1[r] = j.f1[r] * l1 - j.f2[r] * std::conj(l2);
      out.f2[r] = j.f1[r] * l2 + j.f2[r] * std::conj(l1);
    }
    return out;
  });
}

SliceFunction SliceFunction::operator+(const SliceFunction& o) const {
  if (!(axis_ == o.axis_))
    throw std::invalid_argument("SliceFunction: sum requires matching axes");
  const JetFn f = fn_, g = o.fn_;
  return SliceFunction(axis_, [f, g](Complex z, int order) {
    SliceJet a = f(z, order);
    const SliceJet b = g(z, order);
    for (int r = 0; r <= order; ++r) {
      a.f1[r] += b.f1[r];
      a.f2[r] += b.f2[r];
    }
    return a;
  });
}

SliceFunction SliceFunction::from_series(const PowerSeries& f, const Axis& axis) {
  auto s = std::make_shared<SplitSeries>(split(f, axis));
  return SliceFunction(axis, [s](Complex z, int order) {
    SliceJet out(order);
    std::vector<Complex> da = s->alpha, db = s->beta;
    for (int r = 0; r <= order; ++r) {
      out.f1[r] = horner(da, z);
      out.f2[r] = horner(db, z);
      differentiate_inplace(da);
      differentiate_inplace(db);
    }
    return out;
  });
}

SliceFunction SliceFunction::constant(const Quaternion& c, const Axis& axis) {
  const SplitParts parts = split_quaternion(c, axis, orthogonal_unit(axis));
  return SliceFunction(axis, [parts](Complex, int order) {
    SliceJet out(order);
    out.f1[0] = parts.alpha;
    out.f2[0] = parts.beta;
    return out;
  });
}

MoebiusMap::MoebiusMap(const Quaternion& a) : a_{}, axis_(Axis::e1()) {
  if (!(a.norm_sq() < 1.0)) throw std::invalid_argument("MoebiusMap: |a| must be < 1");
  const SliceCoord c = decompose(a);
  if (c.is_real)
    throw std::invalid_argument("MoebiusMap: real a requires an explicit axis");
  a_ = Complex{c.x0, c.yv};
  axis_ = c.axis;
}

MoebiusMap::MoebiusMap(const Quaternion& a, const Axis& axis) : a_{}, axis_(axis) {
  if (!(a.norm_sq() < 1.0)) throw std::invalid_argument("MoebiusMap: |a| must be < 1");
  const SliceCoord c = decompose(a);
  if (c.is_real) {
    a_ = Complex{c.x0, 0.0};
  } else {
    if ((c.axis.q() - axis.q()).norm() > 1e-12)
      throw std::invalid_argument("MoebiusMap: axis must match vec(a)/|vec(a)|");
    a_ = Complex{c.x0, c.yv};
  }
}

MoebiusMap::MoebiusMap(Complex a, const Axis& axis) : a_(a), axis_(axis) {
  if (!(std::norm(a) < 1.0)) throw std::invalid_argument("MoebiusMap: |a| must be < 1");
}

Complex MoebiusMap::map(Complex z) const { return (a_ - z) / (1.0 - std::conj(a_) * z); }

Complex MoebiusMap::map_derivative(Complex z) const {
  const Complex d = 1.0 - std::conj(a_) * z;
  return (std::norm(a_) - 1.0) / (d * d);
}

std::vector<Complex> MoebiusMap::jet(Complex z, int order) const {
  const Complex d = 1.0 - std::conj(a_) * z;
  const Complex u = std::conj(a_) / d;
  std::vector<Complex> out(order + 1);
  out[0] = (a_ - z) / d;
  Complex upow = 1.0;
  const Complex tprime = (std::norm(a_) - 1.0) / (d * d);
  for (int r = 1; r <= order; ++r) {
    out[r] = factorial(r) * upow * tprime;
    upow *= u;
  }
  return out;
}

Quaternion MoebiusMap::value(const Quaternion& q) const {
  check_in_ball(q);
  const SliceCoord c = decompose(q);
  const Complex z{c.x0, c.yv};
  const Quaternion vm = embed(axis_, map(std::conj(z)));
  const Quaternion vp = embed(axis_, map(z));
  return represent(vm, vp, c.axis, axis_);
}

SliceFunction MoebiusMap::as_slice_function() const {
  const MoebiusMap t = *this;
  return SliceFunction(axis_, [t](Complex z, int order) {
    SliceJet out(order);
    const std::vector<Complex> j = t.jet(z, order);
    for (int r = 0; r <= order; ++r) out.f1[r] = j[r];
    return out;
  });
}

namespace {

SliceFunction compose_with_jets(SliceFunction::JetFn outer, const MoebiusMap& t) {
  const MoebiusMap map = t;
  return SliceFunction(t.axis(), [outer, map](Complex z, int order) {
    const std::vector<Complex> inner = map.jet(z, order);
    const SliceJet fj = outer(inner[0], order);
    SliceJet out(order);
    out.f1 = chain_derivatives(fj.f1, inner);
    out.f2 = chain_derivatives(fj.f2, inner);
    return out;
  });
}

}  // namespace

SliceFunction compose(const PowerSeries& f, const MoebiusMap& t) {
  const SliceFunction fs = SliceFunction::from_series(f, t.axis());
  return compose_with_jets([fs](Complex w, int order) { return fs.jet(w, order); }, t);
}

SliceFunction compose(const SliceFunction& f, const MoebiusMap& t) {
  if (!(f.axis() == t.axis()))
    throw std::invalid_argument("compose: the map and the function must share the slice axis");
  return compose_with_jets([f](Complex w, int order) { return f.jet(w, order); }, t);
}

SliceFunction slice_extension(const Axis& axis, SliceFunction::JetFn g) {
  return SliceFunction(axis, std::move(g));
}

SliceFunction::JetFn scalar_jet_fn(std::function<Complex(Complex, int)> nth_derivative) {
  return [fn = std::move(nth_derivative)](Complex z, int order) {
    SliceJet out(order);
    for (int r = 0; r <= order; ++r) out.f1[r] = fn(z, r);
    return out;
  };
}

}  // namespace slicespace
