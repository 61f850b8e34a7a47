// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <complex>
#include <vector>

#include "su2/su2.hpp"

namespace amx {

using cplx = std::complex<double>;

// Physical parameters; internally everything runs in scaled units q = sqrt(m w / hbar) x.
struct KernelParams {
  double mass = 1;
  double omega = 1;
  double hbar = 1;
  double alpha = 1;  // omega (t - t0)
  double scale() const;  // sqrt(m w / hbar)
};

// u_n(q), scaled coordinate, from the normalized three-term recurrence.
double oscillator_wavefn(int n, double q);
// u_0..u_{N-1} at q.
std::vector<double> oscillator_wavefns(int count, double q);

// Truncated completeness sum over n < N.
double delta_kernel(int N, double q, double qp);

enum class SmearTest { gaussian, odd_gaussian, cosine_gaussian };

struct SmearResult {
  std::vector<int> cutoffs;
  std::vector<double> errors;  // |integral of K_N(q0, q') f(q') dq' - f(q0)|
  double exact = 0;
};

// Smeared action of the truncated kernel on a test function, evaluated in multiprecision
// (about 300 digits) so that errors far below double epsilon can still be ordered.
SmearResult delta_smeared(SmearTest f, double q0, const std::vector<int>& cutoffs);

// Closed Gaussian form; caustic error when |sin alpha| <= 1e-9.
cplx propagator_closed(const KernelParams& p, double x, double xp);
// Same in scaled units at complex alpha (no caustic check beyond sin != 0).
cplx propagator_closed_scaled(cplx alpha, double q, double qp);

// Truncated spectral sum. The as-printed form carries an extra (m w / (pi hbar))^{1/2}.
cplx propagator_spectral(const KernelParams& p, int N, double x, double xp, Form form = Form::corrected);
cplx propagator_spectral_scaled(cplx alpha, int N, double q, double qp);

struct AbelOptions {
  std::vector<double> eps{1e-2, 5e-3, 3e-3, 1e-3};
  double terms_per_inverse_eps = 40;  // N = ceil(terms_per_inverse_eps / eps)
};

// Spectral sum at alpha - i eps, extrapolated to eps = 0 by the Lagrange polynomial through
// the given eps values.
cplx propagator_abel(const KernelParams& p, double x, double xp, const AbelOptions& opt = {},
                     Form form = Form::corrected);

// |int K_{a2}(x, y) K_{a1}(y, x') dy - K_{a1 + a2}(x, x')| with the y-contour rotated onto
// the steepest-descent ray and a Gauss-Hermite rule.
double propagator_composition_check(const KernelParams& p, double alpha1, double alpha2, double x, double xp,
                                    int quad_nodes);

}  // namespace amx
