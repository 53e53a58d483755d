// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "quadrature.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "slicefn.hpp"

namespace slicespace {

namespace tolerances {
inline constexpr double kQuadrature = 1e-10;     // pure quadrature identities
inline constexpr double kInvariance = 1e-6;      // invariance under composition
inline constexpr double kSupInequality = 1e-4;   // sup-estimator based inequalities, relative
}  // namespace tolerances

/// A slice regular function: either a truncated power series or an
/// evaluator-backed SliceFunction. Norm computations accept both.
class SliceRegular {
 public:
  SliceRegular(PowerSeries f) : series_(std::move(f)) {}
  SliceRegular(SliceFunction f) : fn_(std::move(f)) {}

  bool is_series() const { return series_.has_value(); }
  const PowerSeries& series() const;
  /// Presentation on the slice C(i).
  SliceFunction on_axis(const Axis& i) const;
  Quaternion at_zero() const;
  Quaternion derivative_at_zero(int order = 1) const;

 private:
  std::optional<PowerSeries> series_;
  std::optional<SliceFunction> fn_;
};

// ---------- Bloch space

/// ||f||_{B_i} without the |f(0)| term: sup (1-|z|^2) |Q_i[f]'(z)| over B_i.
double bloch_seminorm_slice(const SliceRegular& f, const Axis& i, const SupConfig& cfg);
/// ||f||_B = |f(0)| + sup over the sampled axes of the slice sup. per_axis
/// holds the slice norms ||f||_{B_i}.
NormReport bloch_norm(const SliceRegular& f, const QuadConfig& cfg);
/// Sandwich ||f||_{B_i} <= ||f||_B <= 2 ||f||_{B_i} for every sampled axis.
CheckResult bloch_equivalence_check(const SliceRegular& f, const QuadConfig& cfg,
                                    double tol = tolerances::kSupInequality);

double hinf_slice(const SliceRegular& f, const Axis& i, const SupConfig& cfg);
NormReport hinf_norm(const SliceRegular& f, const QuadConfig& cfg);
/// The factor-2 sandwich for ||.||_inf plus ||f||_B <= 4 ||f||_inf.
std::vector<CheckResult> hinf_checks(const SliceRegular& f, const QuadConfig& cfg,
                                     double tol = tolerances::kSupInequality);

struct LittleBlochResult {
  bool is_little_bloch = false;
  std::vector<std::pair<double, double>> boundary_profile;  // (r, (1-r^2) max |df|)
  std::vector<std::pair<double, double>> dilation_profile;  // (r, ||f_r - f||_B)
};
LittleBlochResult little_bloch_test(const PowerSeries& f, double tol, const QuadConfig& cfg);

/// sup (1-|q|^2)^n |d^n f| <= 2^(2n+2) (n-1)! ||f||_B, n >= 2.
CheckResult derivative_growth_check(const PowerSeries& f, int n, const QuadConfig& cfg,
                                    double tol = tolerances::kSupInequality);
/// max_n |a_n| <= (e/sqrt(2)) ||f||_B.
CheckResult coeff_bound_check(const PowerSeries& f, const QuadConfig& cfg,
                              double tol = tolerances::kSupInequality);
/// True iff the support gaps satisfy n_{k+1}/n_k >= ratio and |a_{n_k}| <= bound
/// (a sufficient condition for Bloch membership).
bool lacunary_certificate(const PowerSeries& f, double ratio, double bound);

/// d(q,u) = (1/2) log((1+rho)/(1-rho)) with rho = |q-u|/|1-conj(q)u|, on-slice.
double slice_distance(Complex q, Complex u);
/// |f(q)-f(u)| <= sqrt(2) ||f||_B d(q,u) on random same-slice pairs (the
/// sqrt(2) constant is the one the proof establishes).
CheckResult bloch_lipschitz_check(const SliceRegular& f, const Axis& i, const QuadConfig& cfg,
                                  Rng& rng, int npairs = 50,
                                  double tol = tolerances::kSupInequality);

// ---------- Weighted Bergman spaces

struct BergmanParams {
  double p = 2.0;
  double alpha = 0.0;
  void validate() const;
};

double bergman_norm(const SliceRegular& f, const BergmanParams& params, const Axis& i,
                    const DiskRule& rule);
NormReport bergman_norm_sup(const SliceRegular& f, const BergmanParams& params,
                            const QuadConfig& cfg);
/// int_{B_j} |f|^p dA_{alpha,j} <= 2^max(p,1) int_{B_i} |f|^p dA_{alpha,i}.
CheckResult bergman_slice_sandwich_check(const SliceRegular& f, const BergmanParams& params,
                                         const Axis& i, const Axis& j, const DiskRule& rule,
                                         double tol = tolerances::kSupInequality);
/// |f(z)| <= 2 ||f||_{p,alpha,i} / (1-|z|^2)^((2+alpha)/p) at random on-slice
/// points, and the factor-4 variant with ||f||_{p,alpha} at off-slice points.
std::vector<CheckResult> point_bound_check(const SliceRegular& f, const BergmanParams& params,
                                           const Axis& i, const QuadConfig& cfg, Rng& rng,
                                           int npoints = 50,
                                           double tol = tolerances::kSupInequality);
/// |f(0)|^p <= 2^max(p,1)/(2 pi) int |f(r e^(i theta))|^p dtheta.
CheckResult mean_value_check(const SliceRegular& f, double p, double r, const Axis& i,
                             int ntheta = 256, double tol = tolerances::kSupInequality);

double bergman_metric(Complex z, Complex w);
bool bergman_disk_contains(Complex z, double r, Complex w);
/// Empirical smallest C in the sub-mean-value inequality over a z-grid; the
/// paper does not quantify C, so this only reports.
double submean_probe(const SliceRegular& f, double p, double alpha, double r, const Axis& i,
                     const DiskRule& rule);

// ---------- Besov spaces

struct BesovParams {
  double p = 2.0;
  int n = 1;
  void validate() const;  // requires n*p > 1
};

/// rho_{p,i}(f) = [ int (1-|z|^2)^p |d f|^p dlambda_i ]^(1/p), p > 1.
double besov_seminorm(const SliceRegular& f, double p, const Axis& i, const DiskRule& rule);
/// ||f||_{B_p} = |f(0)| + sup_i rho_{p,i}(f).
NormReport besov_norm(const SliceRegular& f, double p, const QuadConfig& cfg);

/// Deterministic a-grid (rings, closed under negation) used by the small-p
/// seminorm; `count` is rounded to 4 rings of even size.
std::vector<Complex> besov_a_grid(int count);
/// rho_{p,n,i}(f) = sup |f| + sup over the a-grid of
/// [ int (1-|z|^2)^(np) |d^n (f o_i T_a)|^p dlambda_i ]^(1/p), 0 < p <= 1, np > 1.
double besov_seminorm_small_p(const PowerSeries& f, double p, int n, const Axis& i,
                              const QuadConfig& cfg);

struct BesovPair {
  double value_n = 0.0;
  double value_m = 0.0;
};
/// The two integrals behind the n-independence statement (both reported).
BesovPair besov_n_independence(const SliceRegular& f, double p, int n, int m, const Axis& i,
                               const DiskRule& rule);
/// Double integral of |f(z)-f(w)|^p / |1-z conj(w)|^(2(2+alpha)) dA_alpha x dA_alpha.
double besov_double_integral(const SliceRegular& f, double p, double alpha, const Axis& i,
                             const DiskRule& rule);

// ---------- The Besov-1 space

/// (1/16pi) int_0^1 int_0^2pi |d^2 f(r e^(i theta))| dtheta dr: a lower bound
/// for the B_{1,i} norm of f recentred by its linear part.
double b1_lower_bound(const SliceRegular& f, const Axis& i, const DiskRule& rule);
/// The matching (1/pi) upper bound integral (16 times the lower one).
double b1_integral_upper(const SliceRegular& f, const Axis& i, const DiskRule& rule);
/// Cost sum |gamma_k| of an explicit atomic decomposition; an upper bound for
/// the B_{1,i} norm of the synthesized function.
double b1_decomposition_cost(const std::vector<Quaternion>& gammas);
/// gamma_0 + sum_k T_{a_k}(.) gamma_k as a SliceFunction on the slice of i.
SliceFunction b1_synthesis(const std::vector<Complex>& atoms,
                           const std::vector<Quaternion>& gammas, const Axis& i);

// ---------- Dirichlet space

/// sum_{n>=1} n |a_n|^2 (the coefficient form of the energy).
double dirichlet_coeff(const PowerSeries& f);
/// (1/pi) int_{B_i} |d f|^2 dOmega_i; equals dirichlet_coeff on every slice.
double dirichlet_integral(const SliceRegular& f, const Axis& i, const DiskRule& rule);
NormReport dirichlet_norm(const SliceRegular& f, const QuadConfig& cfg);
/// conj(f(0)) g(0) + the (1/pi) dOmega integral of conj(df) dg on the axis
/// where its modulus is largest.
Quaternion dirichlet_inner(const SliceRegular& f, const SliceRegular& g, const QuadConfig& cfg);

}  // namespace slicespace
