// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "spaces.hpp"

namespace slicespace {

/// Kernel atom ((1-|a|^2)/(1-z conj(a)))^b as a slice regular function on the
/// slice of i (principal branch; 1 - z conj(a) stays in the right half plane).
SliceFunction kernel_atom(Complex a, double b, const Axis& i);

/// The alpha-weighted Bergman kernel K_alpha(., w) for w in B_i: the complex
/// kernel (1 - z conj(w))^(-(2+alpha)) on the slice, extended in z.
SliceFunction bergman_kernel_fn(Complex w, double alpha, const Axis& i);
Quaternion bergman_kernel(const Quaternion& q, Complex w, const Axis& i, double alpha);

/// K_alpha(z, .) for on-slice z, extended as a right slice regular function in
/// the conj(w) variable; agreement with the z-extension is probed, not assumed.
Quaternion bergman_kernel_wbar_extension(Complex z, const Quaternion& w_target, const Axis& i,
                                         double alpha);

/// Bergman-type projection K_{alpha,i}[h](q) = int K_alpha(q,w) h(w) dA_{alpha,i}(w)
/// realized by quadrature; h is an on-slice evaluator on B_i.
SliceFunction bergman_project(const std::function<Quaternion(Complex)>& h, double alpha,
                              const Axis& i, const DiskRule& rule);

/// Compares the projection of a (degree <= 10) series with the series itself
/// at sample points on and off the slice.
CheckResult reproducing_check(const PowerSeries& f, double alpha, const Axis& i,
                              const DiskRule& rule, Rng& rng, int npoints = 50,
                              double tol = 1e-8);

/// Atomic Besov synthesis: sum_k P_i[((1-|a_k|^2)/(1-z conj(a_k)))^b] d_k.
SliceFunction atomic_synthesis(const std::vector<Complex>& atoms,
                               const std::vector<Quaternion>& coefficients, double b,
                               const Axis& i);

/// The embedding operator T_{alpha,t,i}:
/// Tf(z) = (1-|z|^2)^t int (1-|w|^2)^alpha / (1-z conj(w))^(2+t+alpha) f(w) dA_i(w).
std::function<Quaternion(Complex)> embedding_operator(
    const std::function<Quaternion(Complex)>& f, double alpha, double t, const Axis& i,
    const DiskRule& rule);
/// L^p(dlambda_i) norm of Tf (requires p*t > 1).
double embedding_norm_probe(const std::function<Quaternion(Complex)>& f, double p, double alpha,
                            double t, const Axis& i, const DiskRule& rule);

}  // namespace slicespace
