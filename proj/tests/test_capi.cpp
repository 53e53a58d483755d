// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "slicespace/slicespace.h"

namespace {

struct Series {
  slicespace_series* ptr = nullptr;
  ~Series() { slicespace_series_free(ptr); }
};

struct Out {
  char* ptr = nullptr;
  ~Out() { slicespace_string_free(ptr); }
};

slicespace_quad_config small_config() {
  slicespace_quad_config cfg;
  slicespace_quad_config_init(&cfg);
  cfg.radial = 32;
  cfg.angular = 64;
  cfg.sphere_samples = 8;
  cfg.sup_radial = 64;
  cfg.sup_angular = 64;
  cfg.a_grid = 16;
  return cfg;
}

double json_value_field(const std::string& json) {
  const auto pos = json.find("\"value\":");
  REQUIRE(pos != std::string::npos);
  return std::strtod(json.c_str() + pos + 8, nullptr);
}

}  // namespace

TEST_CASE("capi: series lifecycle and evaluation") {
  Series s;
  REQUIRE(slicespace_series_parse("{\"coeffs\": [[0,0,0,0],[0,0,1,0]]}", &s.ptr) ==
          SLICESPACE_OK);
  size_t n = 0;
  CHECK(slicespace_series_size(s.ptr, &n) == SLICESPACE_OK);
  CHECK(n == 2);
  // f(q) = q e2 at q = e1: e1 e2 = e3
  const double q[4] = {0, 1, 0, 0};
  double v[4] = {9, 9, 9, 9};
  CHECK(slicespace_series_eval(s.ptr, q, v) == SLICESPACE_OK);
  CHECK(v[0] == 0.0);
  CHECK(v[1] == 0.0);
  CHECK(v[2] == 0.0);
  CHECK(v[3] == 1.0);
}

TEST_CASE("capi: parse errors set the status and message") {
  slicespace_series* s = nullptr;
  CHECK(slicespace_series_parse("bogus", &s) == SLICESPACE_ERR_PARSE);
  CHECK(s == nullptr);
  CHECK(std::strlen(slicespace_last_error()) > 0);
  CHECK(slicespace_series_parse(nullptr, &s) == SLICESPACE_ERR_NULL);
  CHECK(slicespace_series_parse("{\"coeffs\": [[1,2,3,1e999]]}", &s) == SLICESPACE_ERR_PARSE);
}

TEST_CASE("capi: norms") {
  Series s;
  REQUIRE(slicespace_series_parse("{\"coeffs\": [[0,0,0,0],[1,0,0,0],[0,0,1,0]]}", &s.ptr) ==
          SLICESPACE_OK);
  slicespace_quad_config cfg = small_config();
  slicespace_params params;
  slicespace_params_init(&params);

  Out dirichlet;
  REQUIRE(slicespace_norm(s.ptr, "dirichlet", &params, &cfg, &dirichlet.ptr) == SLICESPACE_OK);
  CHECK(json_value_field(dirichlet.ptr) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-8));

  Out bloch;
  Series id;
  REQUIRE(slicespace_series_parse("{\"coeffs\": [[0,0,0,0],[1,0,0,0]]}", &id.ptr) ==
          SLICESPACE_OK);
  REQUIRE(slicespace_norm(id.ptr, "bloch", &params, &cfg, &bloch.ptr) == SLICESPACE_OK);
  CHECK(json_value_field(bloch.ptr) == doctest::Approx(1.0).epsilon(1e-6));

  Out bergman;
  params.p = 2.0;
  params.alpha = 0.0;
  REQUIRE(slicespace_norm(id.ptr, "bergman", &params, &cfg, &bergman.ptr) == SLICESPACE_OK);
  CHECK(json_value_field(bergman.ptr) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-8));

  // domain violations surface as parameter errors
  Out bad;
  params.p = -1.0;
  CHECK(slicespace_norm(id.ptr, "bergman", &params, &cfg, &bad.ptr) == SLICESPACE_ERR_PARAM);
  params.p = 2.0;
  CHECK(slicespace_norm(id.ptr, "no-such-space", &params, &cfg, &bad.ptr) ==
        SLICESPACE_ERR_PARAM);
}

TEST_CASE("capi: check suite passes and honors tampered tolerances") {
  slicespace_quad_config cfg = small_config();
  slicespace_params params;
  slicespace_params_init(&params);

  Out report;
  REQUIRE(slicespace_check("dirichlet", 7, &params, &cfg, &report.ptr) == SLICESPACE_OK);
  CHECK(std::string(report.ptr).find("\"passed\": true") != std::string::npos);

  // an impossible tolerance fails honestly (the estimators carry bias)
  Out tampered;
  params.tol = 1e-16;
  CHECK(slicespace_check("dirichlet", 7, &params, &cfg, &tampered.ptr) ==
        SLICESPACE_ERR_CHECK_FAILED);
  CHECK(std::string(tampered.ptr).find("\"passed\": false") != std::string::npos);

  Out bad;
  params.tol = 0.0;
  CHECK(slicespace_check("nope", 7, &params, &cfg, &bad.ptr) == SLICESPACE_ERR_PARAM);
}

TEST_CASE("capi: determinism of reports") {
  Series s;
  REQUIRE(slicespace_series_parse("{\"coeffs\": [[0.5,0,0,0],[0,1,0,0],[0,0,0.25,0]]}", &s.ptr) ==
          SLICESPACE_OK);
  slicespace_quad_config cfg = small_config();
  slicespace_params params;
  slicespace_params_init(&params);

  Out a, b;
  REQUIRE(slicespace_norm(s.ptr, "bloch", &params, &cfg, &a.ptr) == SLICESPACE_OK);
  REQUIRE(slicespace_norm(s.ptr, "bloch", &params, &cfg, &b.ptr) == SLICESPACE_OK);
  CHECK(std::string(a.ptr) == std::string(b.ptr));

  // thread count must not change the bytes
  cfg.threads = 3;
  Out c;
  REQUIRE(slicespace_norm(s.ptr, "bloch", &params, &cfg, &c.ptr) == SLICESPACE_OK);
  CHECK(std::string(a.ptr) == std::string(c.ptr));
}

TEST_CASE("capi: profile and kernel grid") {
  Series s;
  REQUIRE(slicespace_series_parse("{\"coeffs\": [[0,0,0,0],[1,0,0,0]]}", &s.ptr) ==
          SLICESPACE_OK);
  slicespace_quad_config cfg = small_config();

  Out csv;
  REQUIRE(slicespace_profile(s.ptr, 2.0, &cfg, &csv.ptr) == SLICESPACE_OK);
  const std::string text = csv.ptr;
  CHECK(text.rfind("r,bloch_weight,circle_mean_abs_f_pow_p", 0) == 0);
  // f = q: the bloch weight column is 1 - r^2; spot-check r = 0 line
  CHECK(text.find("\n0,1,") != std::string::npos);

  Out grid;
  REQUIRE(slicespace_kernel_grid(nullptr, 0.0, 0.25, 0.0, 4, 8, &cfg, &grid.ptr) ==
          SLICESPACE_OK);
  CHECK(std::string(grid.ptr).find("\"kind\": \"kernel\"") != std::string::npos);

  Out proj;
  REQUIRE(slicespace_kernel_grid(s.ptr, 0.0, 0.0, 0.0, 4, 8, &cfg, &proj.ptr) == SLICESPACE_OK);
  CHECK(std::string(proj.ptr).find("\"kind\": \"projection\"") != std::string::npos);
}
