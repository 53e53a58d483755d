// SPDX-License-Identifier: Apache-2.0
//
// Batch front end for the slicespace library. Talks to the core exclusively
// through the C API in slicespace/slicespace.h.
//
// Exit codes: 0 ok, 1 check failure, 2 input error, 3 parameter error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "slicespace/slicespace.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitParamError = 3;

int status_to_exit(slicespace_status st) {
  switch (st) {
    case SLICESPACE_OK: return kExitOk;
    case SLICESPACE_ERR_CHECK_FAILED: return kExitCheckFailed;
    case SLICESPACE_ERR_PARSE: return kExitInputError;
    case SLICESPACE_ERR_PARAM: return kExitParamError;
    default: return kExitInputError;
  }
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    out = buf.str();
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return kExitOk;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitInputError;
  }
  out << text;
  return kExitOk;
}

int report_error(slicespace_status st) {
  std::cerr << "error: " << slicespace_last_error() << "\n";
  return status_to_exit(st);
}

struct SeriesHandle {
  slicespace_series* ptr = nullptr;
  ~SeriesHandle() { slicespace_series_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { slicespace_string_free(ptr); }
};

int load_series(const std::string& path, SeriesHandle& series) {
  std::string text;
  if (!read_input(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitInputError;
  }
  const slicespace_status st = slicespace_series_parse(text.c_str(), &series.ptr);
  if (st != SLICESPACE_OK) return report_error(st);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slice regular function space calculator"};
  app.require_subcommand(1);

  slicespace_quad_config cfg;
  slicespace_quad_config_init(&cfg);
  slicespace_params params;
  slicespace_params_init(&params);

  const auto add_quad_flags = [&cfg](CLI::App* cmd) {
    cmd->add_option("--radial", cfg.radial, "radial quadrature order");
    cmd->add_option("--angular", cfg.angular, "angular quadrature order");
    cmd->add_option("--clip", cfg.clip, "clip radius in (0,1]");
    cmd->add_option("--sphere-samples", cfg.sphere_samples, "number of sampled slice axes");
    cmd->add_option("--sup-radial", cfg.sup_radial, "sup-estimator radial grid");
    cmd->add_option("--sup-angular", cfg.sup_angular, "sup-estimator angular grid");
    cmd->add_option("--a-grid", cfg.a_grid, "a-grid size for the small-p Besov seminorm");
    cmd->add_option("--threads", cfg.threads, "worker threads (0 = SLICESPACE_THREADS env)");
  };

  std::string input, out_path, space, suite;
  std::uint64_t seed = 0;
  double w_re = 0.0, w_im = 0.0;
  int grid_radial = 8, grid_angular = 16;

  CLI::App* norm = app.add_subcommand("norm", "compute a space norm of a series");
  norm->add_option("input", input, "series JSON file ('-' for stdin)")->required();
  norm->add_option("--space", space, "bloch | hinf | bergman | besov | dirichlet")->required();
  norm->add_option("--p", params.p, "integrability exponent");
  norm->add_option("--alpha", params.alpha, "Bergman weight exponent");
  norm->add_option("--n", params.n, "Besov derivative order");
  norm->add_option("--t", params.t, "embedding exponent");
  norm->add_option("--out", out_path, "write the report here instead of stdout");
  add_quad_flags(norm);

  CLI::App* check = app.add_subcommand("check", "run an invariant suite on seeded families");
  check->add_option("--suite", suite, "bloch | bergman | besov | dirichlet | kernels | all")
      ->required();
  check->add_option("--seed", seed, "PRNG seed (required for reproducibility)")->required();
  check->add_option("--tol", params.tol, "tolerance override for deviation-style assertions");
  check->add_option("--out", out_path, "write the report here instead of stdout");
  add_quad_flags(check);

  CLI::App* profile = app.add_subcommand("profile", "emit radial profiles as CSV");
  profile->add_option("input", input, "series JSON file ('-' for stdin)")->required();
  profile->add_option("--p", params.p, "exponent for the circle means");
  profile->add_option("--out", out_path, "write the CSV here instead of stdout");
  add_quad_flags(profile);

  CLI::App* kgrid = app.add_subcommand(
      "kernel-grid", "export kernel or projection values on a polar grid as JSON");
  kgrid->add_option("input", input, "series JSON file; omit to export the kernel itself");
  kgrid->add_option("--alpha", params.alpha, "Bergman weight exponent");
  kgrid->add_option("--w-re", w_re, "kernel anchor point, real part");
  kgrid->add_option("--w-im", w_im, "kernel anchor point, imaginary part");
  kgrid->add_option("--grid-radial", grid_radial, "radial grid size");
  kgrid->add_option("--grid-angular", grid_angular, "angular grid size");
  kgrid->add_option("--out", out_path, "write the grid here instead of stdout");
  add_quad_flags(kgrid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  if (norm->parsed()) {
    SeriesHandle series;
    if (const int rc = load_series(input, series); rc != kExitOk) return rc;
    StringHandle json;
    const slicespace_status st =
        slicespace_norm(series.ptr, space.c_str(), &params, &cfg, &json.ptr);
    if (st != SLICESPACE_OK) return report_error(st);
    return emit(json.ptr, out_path);
  }

  if (check->parsed()) {
    StringHandle json;
    const slicespace_status st =
        slicespace_check(suite.c_str(), seed, &params, &cfg, &json.ptr);
    if (st == SLICESPACE_OK || st == SLICESPACE_ERR_CHECK_FAILED) {
      const int emit_rc = emit(json.ptr, out_path);
      if (emit_rc != kExitOk) return emit_rc;
      return status_to_exit(st);
    }
    return report_error(st);
  }

  if (profile->parsed()) {
    SeriesHandle series;
    if (const int rc = load_series(input, series); rc != kExitOk) return rc;
    StringHandle csv;
    const slicespace_status st = slicespace_profile(series.ptr, params.p, &cfg, &csv.ptr);
    if (st != SLICESPACE_OK) return report_error(st);
    return emit(csv.ptr, out_path);
  }

  if (kgrid->parsed()) {
    SeriesHandle series;
    if (!input.empty()) {
      if (const int rc = load_series(input, series); rc != kExitOk) return rc;
    }
    StringHandle json;
    const slicespace_status st = slicespace_kernel_grid(
        series.ptr, params.alpha, w_re, w_im, grid_radial, grid_angular, &cfg, &json.ptr);
    if (st != SLICESPACE_OK) return report_error(st);
    return emit(json.ptr, out_path);
  }

  return kExitInputError;
}
