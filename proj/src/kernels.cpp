// SPDX-License-Identifier: Apache-2.0
#include "kernels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace slicespace {

namespace {

// d^r/dz^r (1 - z c)^(-b) = (b)_r c^r (1 - z c)^(-b-r), principal branch.
Complex inverse_power_derivative(Complex z, Complex c, double b, int r, Complex base_pow) {
  double rising = 1.0;
  for (int k = 0; k < r; ++k) rising *= (b + k);
  Complex cr = 1.0;
  for (int k = 0; k < r; ++k) cr *= c;
  Complex denom = 1.0;
  const Complex base = 1.0 - z * c;
  for (int k = 0; k < r; ++k) denom *= base;
  return rising * cr * base_pow / denom;
}

void check_disk_point(Complex a, const char* what) {
  if (!(std::norm(a) < 1.0)) {
    std::ostringstream os;
    os << what << ": point (" << a.real() << ", " << a.imag() << ") is outside the unit disk";
    throw std::invalid_argument(os.str());
  }
}

struct ProjectionNode {
  Complex z;
  Complex h1, h2;
  double weight;
};

std::vector<ProjectionNode> projection_nodes(const std::function<Quaternion(Complex)>& h,
                                             double alpha, const Axis& i, const DiskRule& rule) {
  rule.validate();
  const Axis j = orthogonal_unit(i);
  const RadialRule radial = gauss_jacobi01(rule.radial, alpha);
  const int nt = rule.angular;
  std::vector<ProjectionNode> nodes;
  nodes.reserve(static_cast<std::size_t>(rule.radial) * nt);
  for (int k = 0; k < rule.radial; ++k) {
    const double r = std::sqrt(radial.s[k]);
    const double w = radial.w[k] * (alpha + 1.0) / nt;
    for (int t = 0; t < nt; ++t) {
      const double th = 2.0 * std::numbers::pi * t / nt;
      const Complex z{r * std::cos(th), r * std::sin(th)};
      const Quaternion hv = h(z);
      if (!hv.is_finite()) {
        std::ostringstream os;
        os << "bergman_project: non-finite integrand at node z = (" << z.real() << ", "
           << z.imag() << ")";
        throw std::runtime_error(os.str());
      }
      const SplitParts parts = split_quaternion(hv, i, j);
      nodes.push_back(ProjectionNode{z, parts.alpha, parts.beta, w});
    }
  }
  return nodes;
}

}  // namespace

SliceFunction kernel_atom(Complex a, double b, const Axis& i) {
  check_disk_point(a, "kernel_atom");
  if (!(b > 0.0)) throw std::invalid_argument("kernel_atom: exponent b must be positive");
  const Complex c = std::conj(a);
  const double scale = std::pow(1.0 - std::norm(a), b);
  return SliceFunction(i, scalar_jet_fn([c, b, scale](Complex z, int r) {
                         const Complex base_pow = std::pow(1.0 - z * c, -b);
                         return scale * inverse_power_derivative(z, c, b, r, base_pow);
                       }));
}

SliceFunction bergman_kernel_fn(Complex w, double alpha, const Axis& i) {
  check_disk_point(w, "bergman_kernel");
  if (!(alpha > -1.0)) throw std::invalid_argument("bergman_kernel: alpha must be > -1");
  const Complex c = std::conj(w);
  const double b = 2.0 + alpha;
  return SliceFunction(i, scalar_jet_fn([c, b](Complex z, int r) {
                         const Complex base_pow = std::pow(1.0 - z * c, -b);
                         return inverse_power_derivative(z, c, b, r, base_pow);
                       }));
}

Quaternion bergman_kernel(const Quaternion& q, Complex w, const Axis& i, double alpha) {
  return bergman_kernel_fn(w, alpha, i).value(q);
}

Quaternion bergman_kernel_wbar_extension(Complex z, const Quaternion& w_target, const Axis& i,
                                         double alpha) {
  check_disk_point(z, "bergman_kernel_wbar_extension");
  if (!(w_target.norm_sq() < 1.0))
    throw std::domain_error("bergman_kernel_wbar_extension: w outside the unit ball");
  const double b = 2.0 + alpha;
  const SliceCoord c = decompose(w_target);
  const Complex wm{c.x0, -c.yv};  // x - i y on the slice of i
  const Complex wp{c.x0, c.yv};
  // right slice regular extension: g(x + yI) = g(x - yi) (1 + iI)/2 + g(x + yi) (1 - iI)/2
  const Quaternion gm = embed(i, std::pow(1.0 - z * std::conj(wm), -b));
  const Quaternion gp = embed(i, std::pow(1.0 - z * std::conj(wp), -b));
  const Quaternion ii = i.q() * c.axis.q();
  return gm * ((Quaternion::one() + ii) * 0.5) + gp * ((Quaternion::one() - ii) * 0.5);
}

SliceFunction bergman_project(const std::function<Quaternion(Complex)>& h, double alpha,
                              const Axis& i, const DiskRule& rule) {
  if (!(alpha > -1.0)) throw std::invalid_argument("bergman_project: alpha must be > -1");
  auto nodes = std::make_shared<std::vector<ProjectionNode>>(projection_nodes(h, alpha, i, rule));
  const double b = 2.0 + alpha;
  return SliceFunction(i, [nodes, b](Complex z, int order) {
    SliceJet out(order);
    for (const ProjectionNode& n : *nodes) {
      const Complex c = std::conj(n.z);
      const Complex base = 1.0 - z * c;
      Complex kernel = std::pow(base, -b);  // derivative order 0
      double rising = 1.0;
      Complex cpow = 1.0;
      for (int r = 0; r <= order; ++r) {
        const Complex kr = rising * cpow * kernel;
        out.f1[r] += n.weight * kr * n.h1;
        out.f2[r] += n.weight * kr * n.h2;
        rising *= (b + r);
        cpow *= c;
        kernel /= base;
      }
    }
    return out;
  });
}

CheckResult reproducing_check(const PowerSeries& f, double alpha, const Axis& i,
                              const DiskRule& rule, Rng& rng, int npoints, double tol) {
  if (f.size() > 11)
    throw std::invalid_argument("reproducing_check: degree capped at 10 (desk scale)");
  const SliceFunction fi = SliceFunction::from_series(f, i);
  const SliceFunction proj =
      bergman_project([&](Complex w) { return fi.on_slice_value(w); }, alpha, i, rule);

  CheckResult res = CheckResult::ok("reproducing_property", 0.0, 0.0, tol);
  const int half = npoints / 2;
  for (int k = 0; k < npoints; ++k) {
    const Complex z = rng.in_disk(0.8);
    Quaternion expected, got;
    if (k < half) {
      expected = fi.on_slice_value(z);
      got = proj.on_slice_value(z);
    } else {
      const Quaternion q = embed(rng.axis(), z);
      expected = f.eval(q);
      got = proj.value(q);
    }
    const double err = (got - expected).norm();
    res.lhs = std::max(res.lhs, err);
    if (err > tol) {
      res.pass = false;
      res.witness = (k < half ? "on-slice " : "off-slice ") +
                    std::string("z = (") + std::to_string(z.real()) + ", " +
                    std::to_string(z.imag()) + ")";
      break;
    }
  }
  res.rhs = tol;
  return res;
}

SliceFunction atomic_synthesis(const std::vector<Complex>& atoms,
                               const std::vector<Quaternion>& coefficients, double b,
                               const Axis& i) {
  if (atoms.size() != coefficients.size())
    throw std::invalid_argument("atomic_synthesis: one coefficient per atom");
  if (atoms.empty()) return SliceFunction::constant(Quaternion{}, i);
  SliceFunction sum = kernel_atom(atoms[0], b, i).right_multiplied(coefficients[0]);
  for (std::size_t k = 1; k < atoms.size(); ++k)
    sum = sum + kernel_atom(atoms[k], b, i).right_multiplied(coefficients[k]);
  return sum;
}

std::function<Quaternion(Complex)> embedding_operator(
    const std::function<Quaternion(Complex)>& f, double alpha, double t, const Axis& i,
    const DiskRule& rule) {
  if (!(alpha > -1.0)) throw std::invalid_argument("embedding_operator: alpha must be > -1");
  // nodes carry the (1-|w|^2)^alpha weight but not the (alpha+1) normalization
  auto nodes = std::make_shared<std::vector<ProjectionNode>>(projection_nodes(f, alpha, i, rule));
  for (auto& n : *nodes) n.weight /= (alpha + 1.0);
  const double b = 2.0 + t + alpha;
  const Axis axis = i;
  const Axis j = orthogonal_unit(i);
  return [nodes, b, t, axis, j](Complex z) {
    Complex s1 = 0.0, s2 = 0.0;
    for (const ProjectionNode& n : *nodes) {
      const Complex kv = std::pow(1.0 - z * std::conj(n.z), -b);
      s1 += n.weight * kv * n.h1;
      s2 += n.weight * kv * n.h2;
    }
    const double pre = std::pow(1.0 - std::norm(z), t);
    return embed(axis, pre * s1) + embed(axis, pre * s2) * j.q();
  };
}

double embedding_norm_probe(const std::function<Quaternion(Complex)>& f, double p, double alpha,
                            double t, const Axis& i, const DiskRule& rule) {
  if (!(p >= 1.0)) throw std::invalid_argument("embedding_norm_probe: p must be >= 1");
  if (!(p * t > 1.0)) throw std::invalid_argument("embedding_norm_probe: p*t must be > 1");
  // keep the nested quadrature at desk scale
  DiskRule inner = rule;
  inner.radial = std::min(inner.radial, 32);
  inner.angular = std::min(inner.angular, 64);
  const auto tf = embedding_operator(f, alpha, t, i, inner);

  DiskRule outer = rule;
  outer.radial = std::min(outer.radial, 24);
  outer.angular = std::min(outer.angular, 48);
  // |Tf(z)|^p = (1-|z|^2)^(tp) |G(z)|^p with G the inner integral
  const double integral = integrate_lambda_decay(
      [&](Complex z) {
        const double pre = std::pow(1.0 - std::norm(z), t);
        const Quaternion v = tf(z);
        return std::pow(v.norm() / pre, p);
      },
      t * p, outer);
  return std::pow(integral, 1.0 / p);
}

}  // namespace slicespace
