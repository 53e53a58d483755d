// SPDX-License-Identifier: Apache-2.0
#include "slicespace/slicespace.h"

#include <cstdlib>
#include <cstring>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "checks.hpp"
#include "kernels.hpp"
#include "spaces.hpp"

using namespace slicespace;

struct slicespace_series {
  PowerSeries value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

slicespace_status fail(slicespace_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Exceptions map onto the status contract: domain violations are parameter
// errors, parse problems are input errors, everything numeric is EVAL.
template <typename Fn>
slicespace_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(SLICESPACE_ERR_PARAM, e.what());
  } catch (const std::domain_error& e) {
    return fail(SLICESPACE_ERR_EVAL, e.what());
  } catch (const std::exception& e) {
    return fail(SLICESPACE_ERR_EVAL, e.what());
  }
}

QuadConfig to_quad_config(const slicespace_quad_config* cfg) {
  QuadConfig out;
  if (!cfg) return out;
  out.rule.radial = cfg->radial;
  out.rule.angular = cfg->angular;
  out.rule.clip = cfg->clip;
  out.sup.radial = cfg->sup_radial;
  out.sup.angular = cfg->sup_angular;
  out.sup.clip = cfg->clip;
  out.sphere_samples = cfg->sphere_samples;
  out.a_grid = cfg->a_grid;
  out.threads = cfg->threads;
  if (out.rule.radial < 1 || out.rule.angular < 1)
    throw std::invalid_argument("config: quadrature orders must be positive");
  if (!(out.rule.clip > 0.0) || out.rule.clip > 1.0)
    throw std::invalid_argument("config: clip must be in (0, 1]");
  if (out.sphere_samples < 1)
    throw std::invalid_argument("config: sphere_samples must be positive");
  return out;
}

slicespace_params default_params() {
  slicespace_params p;
  p.p = 2.0;
  p.alpha = 0.0;
  p.n = 1;
  p.t = 2.0;
  p.tol = 0.0;
  return p;
}

}  // namespace

extern "C" {

void slicespace_quad_config_init(slicespace_quad_config* cfg) {
  if (!cfg) return;
  cfg->radial = 64;
  cfg->angular = 128;
  cfg->clip = 1.0 - 1e-6;
  cfg->sphere_samples = 64;
  cfg->sup_radial = 256;
  cfg->sup_angular = 256;
  cfg->a_grid = 64;
  cfg->threads = 0;
}

void slicespace_params_init(slicespace_params* params) {
  if (!params) return;
  *params = default_params();
}

slicespace_status slicespace_series_parse(const char* json, slicespace_series** out) {
  if (!json || !out) return fail(SLICESPACE_ERR_NULL, "series_parse: NULL argument");
  *out = nullptr;
  try {
    auto series = new slicespace_series{series_from_json(json)};
    *out = series;
    return SLICESPACE_OK;
  } catch (const std::exception& e) {
    return fail(SLICESPACE_ERR_PARSE, e.what());
  }
}

slicespace_status slicespace_series_from_coeffs(const double* wxyz, size_t count,
                                                slicespace_series** out) {
  if (!wxyz || !out) return fail(SLICESPACE_ERR_NULL, "series_from_coeffs: NULL argument");
  *out = nullptr;
  std::vector<Quaternion> coeffs(count);
  for (size_t k = 0; k < count; ++k) {
    coeffs[k] = Quaternion{wxyz[4 * k], wxyz[4 * k + 1], wxyz[4 * k + 2], wxyz[4 * k + 3]};
    if (!coeffs[k].is_finite())
      return fail(SLICESPACE_ERR_PARSE, "series_from_coeffs: coefficients must be finite");
  }
  *out = new slicespace_series{PowerSeries(std::move(coeffs))};
  return SLICESPACE_OK;
}

void slicespace_series_free(slicespace_series* series) { delete series; }

slicespace_status slicespace_series_size(const slicespace_series* series, size_t* out) {
  if (!series || !out) return fail(SLICESPACE_ERR_NULL, "series_size: NULL argument");
  *out = series->value.size();
  return SLICESPACE_OK;
}

slicespace_status slicespace_series_eval(const slicespace_series* series, const double q[4],
                                         double out[4]) {
  if (!series || !q || !out) return fail(SLICESPACE_ERR_NULL, "series_eval: NULL argument");
  const Quaternion v = series->value.eval(Quaternion{q[0], q[1], q[2], q[3]});
  out[0] = v.w;
  out[1] = v.x;
  out[2] = v.y;
  out[3] = v.z;
  return SLICESPACE_OK;
}

slicespace_status slicespace_norm(const slicespace_series* series, const char* space,
                                  const slicespace_params* params,
                                  const slicespace_quad_config* cfg, char** json_out) {
  if (!series || !space || !json_out)
    return fail(SLICESPACE_ERR_NULL, "norm: NULL argument");
  *json_out = nullptr;
  return guarded([&]() {
    const QuadConfig qc = to_quad_config(cfg);
    const slicespace_params pp = params ? *params : default_params();
    const std::string which = space;
    const SliceRegular f(series->value);
    NormReport report;
    if (which == "bloch") {
      report = bloch_norm(f, qc);
    } else if (which == "hinf") {
      report = hinf_norm(f, qc);
    } else if (which == "bergman") {
      report = bergman_norm_sup(f, BergmanParams{pp.p, pp.alpha}, qc);
    } else if (which == "besov") {
      if (pp.p > 1.0) {
        report = besov_norm(f, pp.p, qc);
      } else {
        BesovParams{pp.p, pp.n}.validate();
        // small p: report the per-axis rho_{p,n,i} over the sampled axes
        report.space = "besov";
        report.config = qc;
        report.params = {{"p", pp.p}, {"n", static_cast<double>(pp.n)}};
        // the small-p seminorm is a per-slice object; sample a handful of axes
        const std::vector<Axis> axes = sphere_sample(std::min(qc.sphere_samples, 6));
        double best = 0.0;
        for (const Axis& i : axes) {
          const double v = besov_seminorm_small_p(series->value, pp.p, pp.n, i, qc);
          report.per_axis.push_back(AxisValue{i, v});
          best = std::max(best, v);
        }
        report.value = best;
      }
    } else if (which == "dirichlet") {
      report = dirichlet_norm(f, qc);
    } else {
      throw std::invalid_argument("norm: unknown space " + which);
    }
    *json_out = dup_string(report.to_json());
    return SLICESPACE_OK;
  });
}

slicespace_status slicespace_check(const char* suite, uint64_t seed,
                                   const slicespace_params* params,
                                   const slicespace_quad_config* cfg, char** json_out) {
  if (!suite || !json_out) return fail(SLICESPACE_ERR_NULL, "check: NULL argument");
  *json_out = nullptr;
  return guarded([&]() -> slicespace_status {
    if (!is_known_suite(suite))
      throw std::invalid_argument(std::string("check: unknown suite ") + suite);
    const QuadConfig qc = to_quad_config(cfg);
    const double tol = params ? params->tol : 0.0;
    const SuiteReport report = run_suite(suite, seed, qc, tol);
    *json_out = dup_string(report.to_json());
    if (!report.passed()) {
      g_last_error = "check: suite " + std::string(suite) + " failed";
      return SLICESPACE_ERR_CHECK_FAILED;
    }
    return SLICESPACE_OK;
  });
}

slicespace_status slicespace_profile(const slicespace_series* series, double p,
                                     const slicespace_quad_config* cfg, char** csv_out) {
  if (!series || !csv_out) return fail(SLICESPACE_ERR_NULL, "profile: NULL argument");
  *csv_out = nullptr;
  return guarded([&]() {
    if (!(p > 0.0)) throw std::invalid_argument("profile: p must be > 0");
    const QuadConfig qc = to_quad_config(cfg);
    const PowerSeries& f = series->value;
    const SplitSeries sf = split(f, Axis::e1());
    const SplitSeries sd = split(f.derivative(), Axis::e1());
    const int ntheta = qc.sup.angular;

    std::ostringstream csv;
    csv.precision(17);
    csv << "r,bloch_weight,circle_mean_abs_f_pow_p\n";
    std::vector<double> radii;
    for (int k = 0; k <= 90; ++k) radii.push_back(0.01 * k);
    for (const double r : {0.92, 0.94, 0.96, 0.98, 0.99, 0.995, 0.999, 0.9999})
      radii.push_back(r);
    radii.push_back(qc.rule.clip);
    for (const double r : radii) {
      double dmax = 0.0;
      double mean = 0.0;
      for (int j = 0; j < ntheta; ++j) {
        const double th = 2.0 * std::numbers::pi * j / ntheta;
        const Complex z{r * std::cos(th), r * std::sin(th)};
        const double d2 = std::norm(sd.eval_alpha(z)) + std::norm(sd.eval_beta(z));
        dmax = std::max(dmax, std::sqrt(d2));
        const double v2 = std::norm(sf.eval_alpha(z)) + std::norm(sf.eval_beta(z));
        mean += std::pow(v2, 0.5 * p);
      }
      mean /= ntheta;
      csv << r << ',' << (1.0 - r * r) * dmax << ',' << mean << '\n';
    }
    *csv_out = dup_string(csv.str());
    return SLICESPACE_OK;
  });
}

slicespace_status slicespace_kernel_grid(const slicespace_series* series_or_null, double alpha,
                                         double w_re, double w_im, int grid_radial,
                                         int grid_angular, const slicespace_quad_config* cfg,
                                         char** json_out) {
  if (!json_out) return fail(SLICESPACE_ERR_NULL, "kernel_grid: NULL argument");
  *json_out = nullptr;
  return guarded([&]() {
    if (grid_radial < 1 || grid_angular < 1)
      throw std::invalid_argument("kernel_grid: grid sizes must be positive");
    const QuadConfig qc = to_quad_config(cfg);
    const Axis i = Axis::e1();

    SliceFunction fn = [&]() {
      if (series_or_null) {
        const SliceFunction fs = SliceFunction::from_series(series_or_null->value, i);
        return bergman_project([&](Complex w) { return fs.on_slice_value(w); }, alpha, i,
                               qc.rule);
      }
      return bergman_kernel_fn(Complex{w_re, w_im}, alpha, i);
    }();

    nlohmann::ordered_json doc;
    auto& zs = doc["z"] = nlohmann::ordered_json::array();
    auto& vals = doc["value"] = nlohmann::ordered_json::array();
    for (int k = 0; k < grid_radial; ++k) {
      const double r = 0.9 * (k + 0.5) / grid_radial;
      for (int j = 0; j < grid_angular; ++j) {
        const double th = 2.0 * std::numbers::pi * j / grid_angular;
        const Complex z{r * std::cos(th), r * std::sin(th)};
        const Quaternion v = fn.on_slice_value(z);
        zs.push_back({z.real(), z.imag()});
        vals.push_back({v.w, v.x, v.y, v.z});
      }
    }
    doc["alpha"] = alpha;
    doc["kind"] = series_or_null ? "projection" : "kernel";
    if (!series_or_null) doc["w"] = {w_re, w_im};
    *json_out = dup_string(doc.dump(2));
    return SLICESPACE_OK;
  });
}

void slicespace_string_free(char* text) { std::free(text); }

const char* slicespace_last_error(void) { return g_last_error.c_str(); }

const char* slicespace_version(void) { return "0.1.0"; }

}  // extern "C"
