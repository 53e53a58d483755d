// SPDX-License-Identifier: Apache-2.0
#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <type_traits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"

namespace slicespace {

namespace {

// Eigenvalues of a symmetric tridiagonal matrix together with the first
// component of every normalized eigenvector (all that Golub-Welsch needs).
// Classic implicit-shift QL iteration.
void tridiagonal_eigen(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  e.resize(n, 0.0);  // e[0..n-2] used, e[n-1] workspace

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 1e-16 * dd) break;
      }
      if (m != l) {
        if (++iter > 100)
          throw std::runtime_error("tridiagonal_eigen: QL iteration failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

RadialRule build_gauss_jacobi01(int n, double beta) {
  // Recurrence coefficients of the Jacobi polynomials for the weight
  // (1-x)^a (1+x)^b on [-1,1], here with a = beta, b = 0.
  const double a = beta, b = 0.0;
  std::vector<double> diag(n), off(n > 1 ? n - 1 : 0), z(n, 0.0);
  z[0] = 1.0;
  diag[0] = (b - a) / (a + b + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s2 = 2.0 * k + a + b;
    diag[k] = (b * b - a * a) / (s2 * (s2 + 2.0));
    double e2;
    if (k == 1)
      e2 = 4.0 * (a + 1.0) * (b + 1.0) / ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
    else
      e2 = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s2 * s2 * (s2 * s2 - 1.0));
    off[k - 1] = std::sqrt(e2);
  }
  const double mu0 = std::pow(2.0, a + b + 1.0) *
                     std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));

  std::vector<double> d = diag, e = off;
  tridiagonal_eigen(d, e, z);

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });

  RadialRule rule;
  rule.s.resize(n);
  rule.w.resize(n);
  const double scale = std::pow(2.0, -(a + b + 1.0));
  for (int i = 0; i < n; ++i) {
    const int k = order[i];
    rule.s[i] = 0.5 * (d[k] + 1.0);           // map [-1,1] -> [0,1]
    rule.w[i] = scale * mu0 * z[k] * z[k];    // absorbs the interval map
  }
  return rule;
}

std::map<std::pair<int, std::int64_t>, RadialRule> g_rule_cache;
std::mutex g_rule_cache_mutex;

std::int64_t beta_key(double beta) {
  std::int64_t k;
  static_assert(sizeof(k) == sizeof(beta));
  std::memcpy(&k, &beta, sizeof(k));
  return k;
}

double measure_weight(const Measure& m, double s) {
  switch (m.kind) {
    case Measure::Kind::NormalizedArea: return 1.0;
    case Measure::Kind::WeightedArea: return m.alpha + 1.0;  // (1-s)^alpha lives in the rule
    case Measure::Kind::Lambda: {
      const double u = 1.0 - s;
      return 1.0 / (u * u);
    }
    case Measure::Kind::PlainArea: return std::numbers::pi;
  }
  return 1.0;
}

[[noreturn]] void bad_sample(Complex zc, double value) {
  std::ostringstream os;
  os << "integrate_disk: non-finite sample " << value << " at node z = (" << zc.real() << ", "
     << zc.imag() << ")";
  throw std::runtime_error(os.str());
}

}  // namespace

RadialRule gauss_jacobi01(int n, double beta) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi01: need at least one node");
  if (!(beta > -1.0)) throw std::invalid_argument("gauss_jacobi01: weight exponent must be > -1");
  const auto key = std::make_pair(n, beta_key(beta));
  {
    std::lock_guard<std::mutex> lock(g_rule_cache_mutex);
    auto it = g_rule_cache.find(key);
    if (it != g_rule_cache.end()) return it->second;
  }
  RadialRule rule = build_gauss_jacobi01(n, beta);
  std::lock_guard<std::mutex> lock(g_rule_cache_mutex);
  return g_rule_cache.emplace(key, std::move(rule)).first->second;
}

void DiskRule::validate() const {
  if (radial < 1 || angular < 1) throw std::invalid_argument("DiskRule: orders must be positive");
  if (!(clip > 0.0) || clip > 1.0) throw std::invalid_argument("DiskRule: clip must be in (0,1]");
}

Measure Measure::weighted_area(double alpha) {
  if (!(alpha > -1.0)) throw std::invalid_argument("Measure: alpha must be > -1");
  return {Kind::WeightedArea, alpha};
}

namespace {

template <typename Value, typename Fn>
Value integrate_disk_impl(const Fn& g, const DiskRule& rule, const Measure& m, Value zero) {
  rule.validate();
  const bool is_lambda = m.kind == Measure::Kind::Lambda;
  const double beta = m.kind == Measure::Kind::WeightedArea ? m.alpha : 0.0;
  const RadialRule radial = gauss_jacobi01(rule.radial, beta);
  // lambda integrals are clipped: integrate s over [0, smax]
  const double smax = is_lambda ? rule.clip * rule.clip : 1.0;

  const int t = rule.angular;
  const double dtheta = 2.0 * std::numbers::pi / t;
  Value total = zero;
  for (int k = 0; k < rule.radial; ++k) {
    const double s = is_lambda ? smax * radial.s[k] : radial.s[k];
    const double wr = (is_lambda ? smax : 1.0) * radial.w[k] * measure_weight(m, s);
    const double r = std::sqrt(s);
    Value ring = zero;
    for (int j = 0; j < t; ++j) {
      const double th = dtheta * j;
      const Complex zc{r * std::cos(th), r * std::sin(th)};
      const auto v = g(zc);
      if constexpr (std::is_same_v<Value, double>) {
        if (!std::isfinite(v)) bad_sample(zc, v);
        ring += v;
      } else {
        if (!v.is_finite()) bad_sample(zc, v.norm());
        ring += v;
      }
    }
    total += ring * (wr / t);
  }
  return total;
}

}  // namespace

Quaternion integrate_disk(const std::function<Quaternion(Complex)>& g, const DiskRule& rule,
                          const Measure& m) {
  return integrate_disk_impl<Quaternion>(g, rule, m, Quaternion{});
}

double integrate_disk_real(const std::function<double(Complex)>& g, const DiskRule& rule,
                           const Measure& m) {
  return integrate_disk_impl<double>(g, rule, m, 0.0);
}

double integrate_lambda_decay(const std::function<double(Complex)>& h, double decay,
                              const DiskRule& rule) {
  rule.validate();
  if (!(decay > 1.0))
    throw std::invalid_argument("integrate_lambda_decay: decay exponent must be > 1");
  const RadialRule radial = gauss_jacobi01(rule.radial, decay - 2.0);
  const int t = rule.angular;
  const double dtheta = 2.0 * std::numbers::pi / t;
  double total = 0.0;
  for (int k = 0; k < rule.radial; ++k) {
    const double r = std::sqrt(radial.s[k]);
    double ring = 0.0;
    for (int j = 0; j < t; ++j) {
      const double th = dtheta * j;
      const Complex zc{r * std::cos(th), r * std::sin(th)};
      const double v = h(zc);
      if (!std::isfinite(v)) bad_sample(zc, v);
      ring += v;
    }
    total += ring * (radial.w[k] / t);
  }
  return total;
}

namespace {

// golden-section maximization on [lo, hi]
double golden_max(const std::function<double(double)>& f, double lo, double hi, double& best_x) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 64 && (b - a) > 1e-13; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    }
  }
  if (f1 >= f2) {
    best_x = x1;
    return f1;
  }
  best_x = x2;
  return f2;
}

std::vector<double> sup_radii(const SupConfig& cfg) {
  const double rmax = cfg.clip;
  const int nu = std::max(2, cfg.radial / 2);
  const int ng = std::max(2, cfg.radial - nu);
  std::vector<double> radii;
  radii.reserve(nu + ng);
  for (int j = 0; j < nu; ++j) radii.push_back(0.9 * j / (nu - 1));
  // geometric approach from 0.9 to the clip radius
  const double q = std::pow((1.0 - rmax) / 0.1, 1.0 / (ng - 1));
  for (int k = 1; k < ng; ++k) radii.push_back(1.0 - 0.1 * std::pow(q, k));
  radii.back() = rmax;
  return radii;
}

}  // namespace

SupResult sup_disk(const std::function<double(Complex)>& g, const SupConfig& cfg) {
  if (cfg.radial < 4 || cfg.angular < 4)
    throw std::invalid_argument("sup_disk: grid too small");
  const std::vector<double> radii = sup_radii(cfg);
  const int nt = cfg.angular;
  const double dtheta = 2.0 * std::numbers::pi / nt;

  double best = -std::numeric_limits<double>::infinity();
  std::size_t bi = 0;
  int bj = 0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    for (int j = 0; j < nt; ++j) {
      const double th = dtheta * j;
      const double v = g(Complex{radii[i] * std::cos(th), radii[i] * std::sin(th)});
      if (v > best) {
        best = v;
        bi = i;
        bj = j;
      }
    }
  }

  // one local polish: golden section in r between the neighbouring radii,
  // then in the angle between the neighbouring angles
  const double th0 = dtheta * bj;
  const double rlo = bi > 0 ? radii[bi - 1] : 0.0;
  const double rhi = bi + 1 < radii.size() ? radii[bi + 1] : cfg.clip;
  double rbest = radii[bi];
  const double vr = golden_max(
      [&](double r) { return g(Complex{r * std::cos(th0), r * std::sin(th0)}); }, rlo, rhi, rbest);
  double tbest = th0;
  const double vt = golden_max(
      [&](double th) { return g(Complex{rbest * std::cos(th), rbest * std::sin(th)}); },
      th0 - dtheta, th0 + dtheta, tbest);

  SupResult res;
  res.value = std::max({best, vr, vt});
  res.argmax = Complex{rbest * std::cos(tbest), rbest * std::sin(tbest)};
  return res;
}

SphereSupResult sup_sphere(const std::function<double(const Axis&)>& h, int m, int threads) {
  const std::vector<Axis> axes = sphere_sample(m);
  std::vector<double> values(axes.size());
  parallel_for(
      axes.size(), [&](std::size_t i) { values[i] = h(axes[i]); }, threads);
  SphereSupResult res{-std::numeric_limits<double>::infinity(), axes[0]};
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (values[i] > res.value) {
      res.value = values[i];
      res.axis = axes[i];
    }
  }
  return res;
}

}  // namespace slicespace
