// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "core/halfint.hpp"
#include "core/sqrt_rational.hpp"
#include "su2/su2.hpp"

namespace amx {

struct EulerAngles {
  double psi = 0, theta = 0, phi = 0;
};

BigRational hermite(int n, const BigRational& q);
BigRational legendre(int l, const BigRational& x);
// Classical C_l^(m) by its three-term recurrence.
BigRational gegenbauer_recurrence(int l, int m, const BigRational& x);
// Coefficient of alpha^l in (1 - 2 alpha x + alpha^2)^(-m). The as-printed form flips
// the sign of the alpha^2 term.
BigRational gegenbauer(int l, int m, const BigRational& x, Form form = Form::corrected);

// P_n^(a,b)(x) from the 2F1 in sin^2(theta/2) = (1-x)/2. Domain error on a pole.
BigRational jacobi(int n, int alpha, int beta, const BigRational& x);
// The same polynomial from the 2F1 in cos^2(theta/2) = (1+x)/2.
BigRational jacobi_cos_form(int n, int alpha, int beta, const BigRational& x, Form form = Form::corrected);
// Polynomial continuation valid for any integer a, b (used where indices go negative).
BigRational jacobi_general(int n, int alpha, int beta, const BigRational& x);
// Monomial coefficients c_k of the continuation in z = (1-x)/2, for floating evaluation.
std::vector<double> jacobi_z_coefficients(int n, int alpha, int beta);
double jacobi_eval(int n, int alpha, int beta, double x);

// d^j_{mp,m}(theta), real, d(0) = identity.
double wigner_little_d(HalfInt j, HalfInt mp, HalfInt m, double theta);
std::complex<double> wigner_big_d(HalfInt j, HalfInt mp, HalfInt m, const EulerAngles& angles);

// Y_lm with the Condon-Shortley phase. The as-printed constant drops the pi.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi, Form form = Form::corrected);

// value = coefficient * pi^(half_pi_powers / 2)
struct PiTagged {
  SqrtRational coefficient;
  int half_pi_powers = 0;
  double to_double() const;
  std::string str() const;
};
PiTagged radial_norm(int n, int l);

enum class GfKind { hermite, legendre, character, gegenbauer, spherical };

struct GfReport {
  GfKind kind;
  int degree = 0;
  size_t checks = 0;
  size_t exact_mismatches = 0;  // for exact comparisons
  double max_deviation = 0;     // for floating comparisons
  bool passed = false;
  std::string detail;
};

// Compares a closed-form generating function against independently computed families.
// Sample values are interpreted per kind: x values for legendre/gegenbauer (rationals given as
// decimals are rejected; pass them through the rational overloads), q for hermite, theta/alpha
// pairs for character, theta/phi pairs for spherical.
GfReport gf_check_legendre(int degree, const std::vector<BigRational>& xs);
GfReport gf_check_gegenbauer(int degree, int max_m, const std::vector<BigRational>& xs, Form form = Form::corrected);
GfReport gf_check_hermite(int degree, const std::vector<double>& qs, double tol = 1e-12);
// Exact check that the t^n coefficient of exp(2qt - t^2) is H_n(q)/n!.
GfReport gf_check_hermite_exact(int degree, const std::vector<BigRational>& qs);
GfReport gf_check_character(int max_twice_j, const std::vector<std::pair<double, double>>& theta_alpha,
                            Form form = Form::corrected, double tol = 1e-10);
GfReport gf_check_spherical(int max_l, const std::vector<std::pair<double, double>>& theta_phi, double tol = 1e-12);

}  // namespace amx
