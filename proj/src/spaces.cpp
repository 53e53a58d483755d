// SPDX-License-Identifier: Apache-2.0
#include "spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "parallel.hpp"

namespace slicespace {

namespace {

constexpr double kEps = 1e-15;

std::string witness_point(Complex z) {
  std::ostringstream os;
  os << "z = (" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

// |value|^2 of the (order-th derivative of the) restriction Q_i[f] at z.
// Series get a precomputed split of the derivative series; evaluator-backed
// functions go through their jets.
std::function<double(Complex)> abs2_on_slice(const SliceRegular& f, const Axis& i, int order) {
  if (f.is_series()) {
    auto d = std::make_shared<SplitSeries>(split(f.series().derivative(order), i));
    return [d](Complex z) {
      return std::norm(d->eval_alpha(z)) + std::norm(d->eval_beta(z));
    };
  }
  auto fn = std::make_shared<SliceFunction>(f.on_axis(i));
  return [fn, order](Complex z) {
    const SliceJet j = fn->jet(z, order);
    return std::norm(j.f1[order]) + std::norm(j.f2[order]);
  };
}

double pow_half(double sq, double p) { return std::pow(sq, 0.5 * p); }

}  // namespace

const PowerSeries& SliceRegular::series() const {
  if (!series_) throw std::logic_error("SliceRegular: not a series");
  return *series_;
}

SliceFunction SliceRegular::on_axis(const Axis& i) const {
  if (series_) return SliceFunction::from_series(*series_, i);
  return fn_->reslice(i);
}

Quaternion SliceRegular::at_zero() const {
  if (series_) return series_->at(0);
  return fn_->on_slice_value(Complex{0.0, 0.0});
}

Quaternion SliceRegular::derivative_at_zero(int order) const {
  if (series_) {
    double fact = 1.0;
    for (int k = 2; k <= order; ++k) fact *= k;
    return series_->at(static_cast<std::size_t>(order)) * fact;
  }
  return fn_->on_slice_derivative(Complex{0.0, 0.0}, order);
}

// ---------- Bloch space

double bloch_seminorm_slice(const SliceRegular& f, const Axis& i, const SupConfig& cfg) {
  const auto d2 = abs2_on_slice(f, i, 1);
  return sup_disk([&](Complex z) { return (1.0 - std::norm(z)) * std::sqrt(d2(z)); }, cfg).value;
}

NormReport bloch_norm(const SliceRegular& f, const QuadConfig& cfg) {
  NormReport report;
  report.space = "bloch";
  report.config = cfg;
  const double f0 = f.at_zero().norm();
  const std::vector<Axis> axes = sphere_sample(cfg.sphere_samples);
  report.per_axis.resize(axes.size());
  parallel_for(
      axes.size(),
      [&](std::size_t k) {
        report.per_axis[k] = AxisValue{axes[k], f0 + bloch_seminorm_slice(f, axes[k], cfg.sup)};
      },
      cfg.threads);
  double best = 0.0;
  for (const auto& av : report.per_axis) best = std::max(best, av.value);
  report.value = best;
  return report;
}

CheckResult bloch_equivalence_check(const SliceRegular& f, const QuadConfig& cfg, double tol) {
  const NormReport norm = bloch_norm(f, cfg);
  CheckResult res = CheckResult::ok("bloch_equivalence_sandwich", 0.0, 0.0, tol);
  for (const auto& av : norm.per_axis) {
    const double lo = av.value;
    if (!(lo <= norm.value * (1.0 + tol) + kEps) ||
        !(norm.value <= 2.0 * lo * (1.0 + tol) + kEps)) {
      res.pass = false;
      res.lhs = norm.value;
      res.rhs = 2.0 * lo;
      std::ostringstream os;
      os << "axis (" << av.axis.q().x << ", " << av.axis.q().y << ", " << av.axis.q().z << ")";
      res.witness = os.str();
      return res;
    }
  }
  res.lhs = norm.value;
  res.rhs = norm.value;
  return res;
}

double hinf_slice(const SliceRegular& f, const Axis& i, const SupConfig& cfg) {
  const auto v2 = abs2_on_slice(f, i, 0);
  return sup_disk([&](Complex z) { return std::sqrt(v2(z)); }, cfg).value;
}

NormReport hinf_norm(const SliceRegular& f, const QuadConfig& cfg) {
  NormReport report;
  report.space = "hinf";
  report.config = cfg;
  const std::vector<Axis> axes = sphere_sample(cfg.sphere_samples);
  report.per_axis.resize(axes.size());
  parallel_for(
      axes.size(),
      [&](std::size_t k) {
        report.per_axis[k] = AxisValue{axes[k], hinf_slice(f, axes[k], cfg.sup)};
      },
      cfg.threads);
  double best = 0.0;
  for (const auto& av : report.per_axis) best = std::max(best, av.value);
  report.value = best;
  return report;
}

std::vector<CheckResult> hinf_checks(const SliceRegular& f, const QuadConfig& cfg, double tol) {
  std::vector<CheckResult> out;
  const NormReport inf = hinf_norm(f, cfg);
  CheckResult sandwich = CheckResult::ok("hinf_sandwich", inf.value, inf.value, tol);
  for (const auto& av : inf.per_axis) {
    if (!(av.value <= inf.value * (1.0 + tol) + kEps) ||
        !(inf.value <= 2.0 * av.value * (1.0 + tol) + kEps)) {
      sandwich.pass = false;
      sandwich.lhs = inf.value;
      sandwich.rhs = 2.0 * av.value;
      break;
    }
  }
  out.push_back(sandwich);

  const NormReport bloch = bloch_norm(f, cfg);
  CheckResult four = CheckResult::ok("bloch_leq_4_hinf", bloch.value, 4.0 * inf.value, tol);
  four.pass = bloch.value <= 4.0 * inf.value * (1.0 + tol) + kEps;
  out.push_back(four);
  return out;
}

LittleBlochResult little_bloch_test(const PowerSeries& f, double tol, const QuadConfig& cfg) {
  LittleBlochResult res;
  const std::vector<Axis> axes = sphere_sample(cfg.sphere_samples);
  const PowerSeries df = f.derivative();
  const std::vector<double> radii = {0.9, 0.99, 0.999, cfg.sup.clip};
  for (const double r : radii) {
    double worst = 0.0;
    for (const Axis& i : axes) {
      const SplitSeries d = split(df, i);
      double mx = 0.0;
      for (int j = 0; j < cfg.sup.angular; ++j) {
        const double th = 2.0 * std::numbers::pi * j / cfg.sup.angular;
        const Complex z{r * std::cos(th), r * std::sin(th)};
        mx = std::max(mx, std::sqrt(std::norm(d.eval_alpha(z)) + std::norm(d.eval_beta(z))));
      }
      worst = std::max(worst, (1.0 - r * r) * mx);
    }
    res.boundary_profile.emplace_back(r, worst);
  }
  for (const double r : {0.9, 0.99, 0.999}) {
    const PowerSeries diff = f.dilate(r) - f;
    res.dilation_profile.emplace_back(r, bloch_norm(SliceRegular(diff), cfg).value);
  }
  // ||f_r - f||_B decays linearly in (1-r), so the grid cannot push it below
  // an arbitrary absolute tol; a decade step shrinking the value by 20x is
  // accepted as convergence evidence instead.
  const double scale = std::max(1.0, bloch_norm(SliceRegular(f), cfg).value);
  const double d_first = res.dilation_profile.front().second;
  const double d_last = res.dilation_profile.back().second;
  const bool boundary_ok = res.boundary_profile.back().second < tol * scale;
  const bool dilation_ok =
      d_last <= d_first + kEps && (d_last < tol * scale || d_last <= 0.05 * d_first);
  res.is_little_bloch = boundary_ok && dilation_ok;
  return res;
}

CheckResult derivative_growth_check(const PowerSeries& f, int n, const QuadConfig& cfg,
                                    double tol) {
  if (n < 2) throw std::invalid_argument("derivative_growth_check: n must be >= 2");
  const SliceRegular fr(f);
  const PowerSeries dn = f.derivative(n);
  const auto slice_sup = [&](const Axis& i) {
    const auto d2 = abs2_on_slice(SliceRegular(dn), i, 0);
    return sup_disk(
               [&](Complex z) {
                 return std::pow(1.0 - std::norm(z), n) * std::sqrt(d2(z));
               },
               cfg.sup)
        .value;
  };
  const double lhs = sup_sphere(slice_sup, cfg.sphere_samples, cfg.threads).value;
  double fact = 1.0;
  for (int k = 2; k <= n - 1; ++k) fact *= k;
  const double rhs = std::pow(2.0, 2 * n + 2) * fact * bloch_norm(fr, cfg).value;
  CheckResult res = CheckResult::ok("derivative_growth_n" + std::to_string(n), lhs, rhs, tol);
  res.pass = lhs <= rhs * (1.0 + tol) + kEps;
  return res;
}

CheckResult coeff_bound_check(const PowerSeries& f, const QuadConfig& cfg, double tol) {
  const double bound = (std::numbers::e / std::sqrt(2.0)) * bloch_norm(SliceRegular(f), cfg).value;
  double worst = 0.0;
  std::size_t worst_n = 0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    const double a = f.coeffs()[n].norm();
    if (a > worst) {
      worst = a;
      worst_n = n;
    }
  }
  CheckResult res = CheckResult::ok("coeff_bound_e_over_sqrt2", worst, bound, tol);
  res.pass = worst <= bound * (1.0 + tol) + kEps;
  if (!res.pass) res.witness = "n = " + std::to_string(worst_n);
  return res;
}

bool lacunary_certificate(const PowerSeries& f, double ratio, double bound) {
  if (!(ratio > 1.0)) throw std::invalid_argument("lacunary_certificate: ratio must be > 1");
  std::vector<std::size_t> support;
  for (std::size_t n = 0; n < f.size(); ++n)
    if (!f.coeffs()[n].is_zero()) support.push_back(n);
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (f.coeffs()[support[k]].norm() > bound) return false;
    if (k + 1 < support.size() && support[k] > 0) {
      if (static_cast<double>(support[k + 1]) < ratio * static_cast<double>(support[k]))
        return false;
    }
  }
  return true;
}

double slice_distance(Complex q, Complex u) {
  const double rho = std::abs((q - u) / (1.0 - std::conj(q) * u));
  return 0.5 * std::log((1.0 + rho) / (1.0 - rho));
}

CheckResult bloch_lipschitz_check(const SliceRegular& f, const Axis& i, const QuadConfig& cfg,
                                  Rng& rng, int npairs, double tol) {
  const double norm = bloch_norm(f, cfg).value;
  const SliceFunction fi = f.on_axis(i);
  CheckResult res = CheckResult::ok("bloch_lipschitz_sqrt2", 0.0, 0.0, tol);
  for (int k = 0; k < npairs; ++k) {
    const Complex q = rng.in_disk(0.9);
    const Complex u = rng.in_disk(0.9);
    const double lhs = (fi.on_slice_value(q) - fi.on_slice_value(u)).norm();
    const double rhs = std::sqrt(2.0) * norm * slice_distance(q, u);
    if (lhs > res.lhs) {
      res.lhs = lhs;
      res.rhs = rhs;
    }
    if (!(lhs <= rhs * (1.0 + tol) + kEps)) {
      res.pass = false;
      res.lhs = lhs;
      res.rhs = rhs;
      res.witness = witness_point(q) + ", " + witness_point(u);
      return res;
    }
  }
  return res;
}

// ---------- Weighted Bergman spaces

void BergmanParams::validate() const {
  if (!(p > 0.0)) throw std::invalid_argument("BergmanParams: p must be > 0");
  if (!(alpha > -1.0)) throw std::invalid_argument("BergmanParams: alpha must be > -1");
}

double bergman_norm(const SliceRegular& f, const BergmanParams& params, const Axis& i,
                    const DiskRule& rule) {
  params.validate();
  const auto v2 = abs2_on_slice(f, i, 0);
  const double integral = integrate_disk_real(
      [&](Complex z) { return pow_half(v2(z), params.p); }, rule,
      Measure::weighted_area(params.alpha));
  return std::pow(integral, 1.0 / params.p);
}

NormReport bergman_norm_sup(const SliceRegular& f, const BergmanParams& params,
                            const QuadConfig& cfg) {
  params.validate();
  NormReport report;
  report.space = "bergman";
  report.config = cfg;
  report.params = {{"p", params.p}, {"alpha", params.alpha}};
  const std::vector<Axis> axes = sphere_sample(cfg.sphere_samples);
  report.per_axis.resize(axes.size());
  parallel_for(
      axes.size(),
      [&](std::size_t k) {
        report.per_axis[k] = AxisValue{axes[k], bergman_norm(f, params, axes[k], cfg.rule)};
      },
      cfg.threads);
  double best = 0.0;
  for (const auto& av : report.per_axis) best = std::max(best, av.value);
  report.value = best;
  return report;
}

CheckResult bergman_slice_sandwich_check(const SliceRegular& f, const BergmanParams& params,
                                         const Axis& i, const Axis& j, const DiskRule& rule,
                                         double tol) {
  const double ni = bergman_norm(f, params, i, rule);
  const double nj = bergman_norm(f, params, j, rule);
  const double factor = std::pow(2.0, std::max(params.p, 1.0));
  // compare the integrals, not the norms
  const double lhs = std::pow(nj, params.p);
  const double rhs = factor * std::pow(ni, params.p);
  CheckResult res = CheckResult::ok("bergman_slice_sandwich", lhs, rhs, tol);
  res.pass = lhs <= rhs * (1.0 + tol) + kEps;
  return res;
}

std::vector<CheckResult> point_bound_check(const SliceRegular& f, const BergmanParams& params,
                                           const Axis& i, const QuadConfig& cfg, Rng& rng,
                                           int npoints, double tol) {
  params.validate();
  std::vector<CheckResult> out;
  const double exponent = (2.0 + params.alpha) / params.p;

  const double norm_i = bergman_norm(f, params, i, cfg.rule);
  const SliceFunction fi = f.on_axis(i);
  CheckResult on = CheckResult::ok("bergman_point_bound_on_slice", 0.0, 0.0, tol);
  for (int k = 0; k < npoints; ++k) {
    const Complex z = rng.in_disk(0.95);
    const double lhs = fi.on_slice_value(z).norm();
    const double rhs = 2.0 * norm_i / std::pow(1.0 - std::norm(z), exponent);
    if (lhs > on.lhs) {
      on.lhs = lhs;
      on.rhs = rhs;
    }
    if (!(lhs <= rhs * (1.0 + tol) + kEps)) {
      on.pass = false;
      on.lhs = lhs;
      on.rhs = rhs;
      on.witness = witness_point(z);
      break;
    }
  }
  out.push_back(on);

  const double norm_sup = bergman_norm_sup(f, params, cfg).value;
  CheckResult off = CheckResult::ok("bergman_point_bound_off_slice", 0.0, 0.0, tol);
  for (int k = 0; k < npoints; ++k) {
    const Complex z = rng.in_disk(0.95);
    const Axis target = rng.axis();
    const Quaternion q = embed(target, z);
    const double lhs = f.on_axis(i).value(q).norm();
    const double rhs = 4.0 * norm_sup / std::pow(1.0 - q.norm_sq(), exponent);
    if (lhs > off.lhs) {
      off.lhs = lhs;
      off.rhs = rhs;
    }
    if (!(lhs <= rhs * (1.0 + tol) + kEps)) {
      off.pass = false;
      off.lhs = lhs;
      off.rhs = rhs;
      off.witness = witness_point(z);
      break;
    }
  }
  out.push_back(off);
  return out;
}

CheckResult mean_value_check(const SliceRegular& f, double p, double r, const Axis& i, int ntheta,
                             double tol) {
  if (!(p > 0.0)) throw std::invalid_argument("mean_value_check: p must be > 0");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("mean_value_check: r must be in (0,1)");
  const auto v2 = abs2_on_slice(f, i, 0);
  double mean = 0.0;
  for (int j = 0; j < ntheta; ++j) {
    const double th = 2.0 * std::numbers::pi * j / ntheta;
    mean += pow_half(v2(Complex{r * std::cos(th), r * std::sin(th)}), p);
  }
  mean /= ntheta;
  const double lhs = std::pow(f.at_zero().norm(), p);
  const double rhs = std::pow(2.0, std::max(p, 1.0)) * mean;
  CheckResult res = CheckResult::ok("bergman_circle_mean", lhs, rhs, tol);
  res.pass = lhs <= rhs * (1.0 + tol) + kEps;
  return res;
}

double bergman_metric(Complex z, Complex w) { return slice_distance(z, w); }

bool bergman_disk_contains(Complex z, double r, Complex w) {
  return bergman_metric(z, w) < r;
}

double submean_probe(const SliceRegular& f, double p, double alpha, double r, const Axis& i,
                     const DiskRule& rule) {
  if (!(r > 0.0)) throw std::invalid_argument("submean_probe: r must be > 0");
  const auto v2 = abs2_on_slice(f, i, 0);
  const double t = std::tanh(r);
  const RadialRule radial = gauss_jacobi01(std::max(8, rule.radial / 4), 0.0);
  const int ntheta = std::max(16, rule.angular / 4);
  const double factor = std::pow(2.0, std::max(p, 1.0));

  double worst = 0.0;
  for (const double rz : {0.0, 0.2, 0.4, 0.6, 0.8}) {
    const int nang = rz == 0.0 ? 1 : 8;
    for (int a = 0; a < nang; ++a) {
      const double phi = 2.0 * std::numbers::pi * a / nang;
      const Complex z{rz * std::cos(phi), rz * std::sin(phi)};
      // D_i(z, r) is the euclidean disk with these parameters
      const double zn = std::norm(z);
      const Complex center = z * ((1.0 - t * t) / (1.0 - t * t * zn));
      const double radius = t * (1.0 - zn) / (1.0 - t * t * zn);
      double integral = 0.0;
      for (std::size_t k = 0; k < radial.s.size(); ++k) {
        const double u = std::sqrt(radial.s[k]);
        double ring = 0.0;
        for (int j = 0; j < ntheta; ++j) {
          const double th = 2.0 * std::numbers::pi * j / ntheta;
          const Complex w = center + Complex{radius * u * std::cos(th), radius * u * std::sin(th)};
          ring += pow_half(v2(w), p) * std::pow(1.0 - std::norm(w), alpha);
        }
        integral += ring * radial.w[k] / ntheta;
      }
      integral *= (alpha + 1.0) * radius * radius;
      const double lhs = pow_half(v2(z), p) * std::pow(1.0 - zn, 2.0 + alpha);
      if (integral > 0.0) worst = std::max(worst, lhs / (factor * integral));
    }
  }
  return worst;
}

// ---------- Besov spaces

void BesovParams::validate() const {
  if (!(p > 0.0)) throw std::invalid_argument("BesovParams: p must be > 0");
  if (n < 1) throw std::invalid_argument("BesovParams: n must be >= 1");
  if (!(n * p > 1.0)) throw std::invalid_argument("BesovParams: n*p must be > 1");
}

double besov_seminorm(const SliceRegular& f, double p, const Axis& i, const DiskRule& rule) {
  if (!(p > 1.0))
    throw std::invalid_argument("besov_seminorm: p must be > 1 (use the small-p seminorm)");
  const auto d2 = abs2_on_slice(f, i, 1);
  const double integral =
      integrate_lambda_decay([&](Complex z) { return pow_half(d2(z), p); }, p, rule);
  return std::pow(integral, 1.0 / p);
}

NormReport besov_norm(const SliceRegular& f, double p, const QuadConfig& cfg) {
  NormReport report;
  report.space = "besov";
  report.config = cfg;
  report.params = {{"p", p}};
  const double f0 = f.at_zero().norm();
  const std::vector<Axis> axes = sphere_sample(cfg.sphere_samples);
  report.per_axis.resize(axes.size());
  parallel_for(
      axes.size(),
      [&](std::size_t k) {
        report.per_axis[k] = AxisValue{axes[k], f0 + besov_seminorm(f, p, axes[k], cfg.rule)};
      },
      cfg.threads);
  double best = 0.0;
  for (const auto& av : report.per_axis) best = std::max(best, av.value);
  report.value = best;
  return report;
}

std::vector<Complex> besov_a_grid(int count) {
  if (count < 8) throw std::invalid_argument("besov_a_grid: need at least 8 points");
  const int nring = 4;
  int nang = count / nring;
  if (nang % 2 == 1) --nang;  // keep the grid closed under negation
  std::vector<Complex> grid;
  grid.reserve(static_cast<std::size_t>(nring) * nang);
  for (int k = 1; k <= nring; ++k) {
    const double r = 0.9 * k / nring;
    for (int j = 0; j < nang; ++j) {
      const double th = 2.0 * std::numbers::pi * j / nang;
      grid.emplace_back(r * std::cos(th), r * std::sin(th));
    }
  }
  return grid;
}

double besov_seminorm_small_p(const PowerSeries& f, double p, int n, const Axis& i,
                              const QuadConfig& cfg) {
  if (!(p > 0.0 && p <= 1.0))
    throw std::invalid_argument("besov_seminorm_small_p: requires 0 < p <= 1");
  if (!(n * p > 1.0)) throw std::invalid_argument("besov_seminorm_small_p: requires n*p > 1");

  const auto v2 = abs2_on_slice(SliceRegular(f), i, 0);
  const double sup_f = sup_disk([&](Complex z) { return std::sqrt(v2(z)); }, cfg.sup).value;

  const std::vector<Complex> grid = besov_a_grid(cfg.a_grid);
  std::vector<double> values(grid.size());
  parallel_for(
      grid.size(),
      [&](std::size_t k) {
        const MoebiusMap t(grid[k], i);
        const SliceFunction g = compose(f, t);
        values[k] = integrate_lambda_decay(
            [&](Complex z) {
              const SliceJet j = g.jet(z, n);
              return pow_half(std::norm(j.f1[n]) + std::norm(j.f2[n]), p);
            },
            static_cast<double>(n) * p, cfg.rule);
      },
      cfg.threads);
  double sup_a = 0.0;
  for (const double v : values) sup_a = std::max(sup_a, v);
  return sup_f + std::pow(sup_a, 1.0 / p);
}

BesovPair besov_n_independence(const SliceRegular& f, double p, int n, int m, const Axis& i,
                               const DiskRule& rule) {
  BesovParams{p, n}.validate();
  BesovParams{p, m}.validate();
  const auto in = [&](int order) {
    const auto d2 = abs2_on_slice(f, i, order);
    return integrate_lambda_decay([&](Complex z) { return pow_half(d2(z), p); },
                                  static_cast<double>(order) * p, rule);
  };
  return BesovPair{in(n), in(m)};
}

double besov_double_integral(const SliceRegular& f, double p, double alpha, const Axis& i,
                             const DiskRule& rule) {
  if (!(p > 1.0)) throw std::invalid_argument("besov_double_integral: p must be > 1");
  if (!(alpha > -1.0)) throw std::invalid_argument("besov_double_integral: alpha must be > -1");
  rule.validate();
  const RadialRule radial = gauss_jacobi01(rule.radial, alpha);
  const int nt = rule.angular;

  struct Node {
    Complex z;
    Complex v1, v2;  // split components of f(z)
    double w;
  };
  const SliceFunction fi = f.on_axis(i);
  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>(rule.radial) * nt);
  for (int k = 0; k < rule.radial; ++k) {
    const double r = std::sqrt(radial.s[k]);
    const double wr = radial.w[k] * (alpha + 1.0) / nt;
    for (int j = 0; j < nt; ++j) {
      const double th = 2.0 * std::numbers::pi * j / nt;
      const Complex z{r * std::cos(th), r * std::sin(th)};
      const SliceJet jet = fi.jet(z, 0);
      nodes.push_back(Node{z, jet.f1[0], jet.f2[0], wr});
    }
  }
  const double ex = 2.0 + alpha;  // |1 - z conj(w)|^(2(2+alpha)) = norm(...)^(2+alpha)
  double total = 0.0;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      const double diff2 =
          std::norm(nodes[a].v1 - nodes[b].v1) + std::norm(nodes[a].v2 - nodes[b].v2);
      if (diff2 == 0.0) continue;
      const double den = std::pow(std::norm(1.0 - nodes[a].z * std::conj(nodes[b].z)), ex);
      total += 2.0 * nodes[a].w * nodes[b].w * pow_half(diff2, p) / den;
    }
  }
  return total;
}

// ---------- The Besov-1 space

namespace {

double b1_polar_integral(const SliceRegular& f, const Axis& i, const DiskRule& rule) {
  rule.validate();
  const RadialRule radial = gauss_jacobi01(rule.radial, 0.0);  // plain dr on [0,1]
  const int nt = rule.angular;
  const auto d2 = abs2_on_slice(f, i, 2);
  double total = 0.0;
  for (int k = 0; k < rule.radial; ++k) {
    const double r = radial.s[k];
    double ring = 0.0;
    for (int j = 0; j < nt; ++j) {
      const double th = 2.0 * std::numbers::pi * j / nt;
      ring += std::sqrt(d2(Complex{r * std::cos(th), r * std::sin(th)}));
    }
    total += ring * radial.w[k] * (2.0 * std::numbers::pi / nt);
  }
  return total;
}

}  // namespace

double b1_lower_bound(const SliceRegular& f, const Axis& i, const DiskRule& rule) {
  return b1_polar_integral(f, i, rule) / (16.0 * std::numbers::pi);
}

double b1_integral_upper(const SliceRegular& f, const Axis& i, const DiskRule& rule) {
  return b1_polar_integral(f, i, rule) / std::numbers::pi;
}

double b1_decomposition_cost(const std::vector<Quaternion>& gammas) {
  double total = 0.0;
  for (const auto& g : gammas) total += g.norm();
  return total;
}

SliceFunction b1_synthesis(const std::vector<Complex>& atoms,
                           const std::vector<Quaternion>& gammas, const Axis& i) {
  if (gammas.size() != atoms.size() + 1)
    throw std::invalid_argument("b1_synthesis: need one gamma per atom plus gamma_0");
  for (const Complex& a : atoms)
    if (!(std::norm(a) < 1.0)) throw std::invalid_argument("b1_synthesis: atoms must lie in B_i");

  SliceFunction sum = SliceFunction::constant(gammas[0], i);
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const MoebiusMap t(atoms[k], i);
    sum = sum + t.as_slice_function().right_multiplied(gammas[k + 1]);
  }
  return sum;
}

// ---------- Dirichlet space

double dirichlet_coeff(const PowerSeries& f) {
  double total = 0.0;
  for (std::size_t n = 1; n < f.size(); ++n) total += n * f.coeffs()[n].norm_sq();
  return total;
}

double dirichlet_integral(const SliceRegular& f, const Axis& i, const DiskRule& rule) {
  // (1/pi) int |df|^2 dOmega_i equals the normalized-area integral of |df|^2
  const auto d2 = abs2_on_slice(f, i, 1);
  return integrate_disk_real(d2, rule, Measure::area());
}

NormReport dirichlet_norm(const SliceRegular& f, const QuadConfig& cfg) {
  NormReport report;
  report.space = "dirichlet";
  report.config = cfg;
  const double f0sq = f.at_zero().norm_sq();
  const std::vector<Axis> axes = sphere_sample(cfg.sphere_samples);
  report.per_axis.resize(axes.size());
  parallel_for(
      axes.size(),
      [&](std::size_t k) {
        report.per_axis[k] =
            AxisValue{axes[k], std::sqrt(f0sq + dirichlet_integral(f, axes[k], cfg.rule))};
      },
      cfg.threads);
  double best = 0.0;
  for (const auto& av : report.per_axis) best = std::max(best, av.value);
  report.value = best;
  return report;
}

Quaternion dirichlet_inner(const SliceRegular& f, const SliceRegular& g, const QuadConfig& cfg) {
  const std::vector<Axis> axes = sphere_sample(cfg.sphere_samples);
  std::vector<Quaternion> values(axes.size());
  parallel_for(
      axes.size(),
      [&](std::size_t k) {
        const SliceFunction fi = f.on_axis(axes[k]);
        const SliceFunction gi = g.on_axis(axes[k]);
        values[k] = integrate_disk(
            [&](Complex z) {
              return fi.on_slice_derivative(z).conj() * gi.on_slice_derivative(z);
            },
            cfg.rule, Measure::area());
      },
      cfg.threads);
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k].norm_sq() > values[best].norm_sq()) best = k;
  return f.at_zero().conj() * g.at_zero() + values[best];
}

}  // namespace slicespace
