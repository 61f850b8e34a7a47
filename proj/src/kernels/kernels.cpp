// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include "kernels/kernels.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "quad/quadrature.hpp"

namespace amx {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0, 1);

void check_caustic(cplx s) {
  if (std::abs(s) <= 1e-9) fail(ErrorCode::caustic, "propagator evaluated at a focal point (sin alpha = 0)");
}

}  // namespace

double KernelParams::scale() const {
  if (!(mass > 0 && omega > 0 && hbar > 0)) fail(ErrorCode::domain, "mass, omega and hbar must be positive");
  return std::sqrt(mass * omega / hbar);
}

std::vector<double> oscillator_wavefns(int count, double q) {
  if (count < 0) fail(ErrorCode::domain, "negative count");
  std::vector<double> u(count);
  if (count == 0) return u;
  u[0] = std::pow(kPi, -0.25) * std::exp(-q * q / 2);
  if (count > 1) u[1] = std::sqrt(2.0) * q * u[0];
  for (int n = 2; n < count; ++n) u[n] = std::sqrt(2.0 / n) * q * u[n - 1] - std::sqrt((n - 1.0) / n) * u[n - 2];
  return u;
}

double oscillator_wavefn(int n, double q) {
  if (n < 0) fail(ErrorCode::domain, "oscillator level must be nonnegative");
  return oscillator_wavefns(n + 1, q)[n];
}

double delta_kernel(int N, double q, double qp) {
  if (N < 1) fail(ErrorCode::domain, "kernel cutoff must be positive");
  const auto a = oscillator_wavefns(N, q), b = oscillator_wavefns(N, qp);
  double s = 0;
  for (int n = 0; n < N; ++n) s += a[n] * b[n];
  return s;
}

SmearResult delta_smeared(SmearTest which, double q0, const std::vector<int>& cutoffs) {
  using mp = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<300>>;
  int nmax = 0;
  for (int N : cutoffs) {
    if (N < 1) fail(ErrorCode::domain, "kernel cutoff must be positive");
    nmax = std::max(nmax, N);
  }
  const mp pi = boost::math::constants::pi<mp>();
  const mp pim4 = 1 / sqrt(sqrt(pi));
  std::vector<mp> ra(nmax), rb(nmax);  // sqrt(2/n), sqrt((n-1)/n)
  for (int n = 1; n < nmax; ++n) {
    ra[n] = sqrt(mp(2) / n);
    rb[n] = sqrt(mp(n - 1) / n);
  }
  auto fill = [&](const mp& q, std::vector<mp>& u) {
    u[0] = pim4 * exp(-q * q / 2);
    if (nmax > 1) u[1] = ra[1] * q * u[0];
    for (int n = 2; n < nmax; ++n) u[n] = ra[n] * q * u[n - 1] - rb[n] * u[n - 2];
  };
  auto f = [&](const mp& q) -> mp {
    switch (which) {
      case SmearTest::gaussian:
        return exp(-q * q);
      case SmearTest::odd_gaussian:
        return q * exp(-q * q);
      case SmearTest::cosine_gaussian:
        return cos(q) * exp(-q * q / 2);
    }
    return mp(0);
  };
  // Projections c_n = int u_n f by the trapezoid rule: spectrally accurate for these
  // entire, Gaussian-decaying integrands.
  const mp h = mp(1) / 50;
  const int half_width = 1600;  // |q| <= 32
  std::vector<mp> c(nmax, mp(0)), u(nmax);
  for (int i = -half_width; i <= half_width; ++i) {
    const mp q = h * i;
    fill(q, u);
    const mp fq = f(q);
    for (int n = 0; n < nmax; ++n) c[n] += u[n] * fq;
  }
  for (auto& x : c) x *= h;
  const mp mq0 = mp(q0);
  fill(mq0, u);
  const mp target = f(mq0);
  SmearResult res;
  res.exact = static_cast<double>(target);
  for (int N : cutoffs) {
    mp s = 0;
    for (int n = 0; n < N; ++n) s += c[n] * u[n];
    res.cutoffs.push_back(N);
    res.errors.push_back(static_cast<double>(abs(s - target)));
  }
  return res;
}

cplx propagator_closed_scaled(cplx alpha, double q, double qp) {
  const cplx s = std::sin(alpha), c = std::cos(alpha);
  check_caustic(s);
  return 1.0 / std::sqrt(2.0 * kPi * I * s) * std::exp(I / (2.0 * s) * ((q * q + qp * qp) * c - 2.0 * q * qp));
}

cplx propagator_closed(const KernelParams& p, double x, double xp) {
  const double k = p.scale();
  return k * propagator_closed_scaled(p.alpha, k * x, k * xp);
}

cplx propagator_spectral_scaled(cplx alpha, int N, double q, double qp) {
  if (N < 1) fail(ErrorCode::domain, "spectral cutoff must be positive");
  const auto a = oscillator_wavefns(N, q), b = oscillator_wavefns(N, qp);
  const cplx step = std::exp(-I * alpha);
  cplx ph = 1, s = 0;
  for (int n = 0; n < N; ++n) {
    s += a[n] * b[n] * ph;
    ph *= step;
  }
  return std::exp(-I * alpha / 2.0) * s;
}

cplx propagator_spectral(const KernelParams& p, int N, double x, double xp, Form form) {
  const double k = p.scale();
  cplx v = k * propagator_spectral_scaled(p.alpha, N, k * x, k * xp);
  if (form == Form::as_printed) v *= std::sqrt(p.mass * p.omega / (kPi * p.hbar));
  return v;
}

cplx propagator_abel(const KernelParams& p, double x, double xp, const AbelOptions& opt, Form form) {
  if (opt.eps.empty()) fail(ErrorCode::domain, "no regularization parameters");
  const double k = p.scale();
  std::vector<cplx> vals;
  for (double e : opt.eps) {
    if (!(e > 0)) fail(ErrorCode::domain, "regularization parameter must be positive");
    const int N = static_cast<int>(std::ceil(opt.terms_per_inverse_eps / e));
    vals.push_back(propagator_spectral_scaled(cplx(p.alpha, -e), N, k * x, k * xp));
  }
  cplx L = 0;
  for (size_t i = 0; i < opt.eps.size(); ++i) {
    double w = 1;
    for (size_t j = 0; j < opt.eps.size(); ++j)
      if (j != i) w *= (0 - opt.eps[j]) / (opt.eps[i] - opt.eps[j]);
    L += w * vals[i];
  }
  if (form == Form::as_printed) L *= std::sqrt(p.mass * p.omega / (kPi * p.hbar));
  return k * L;
}

double propagator_composition_check(const KernelParams& p, double alpha1, double alpha2, double x, double xp,
                                    int quad_nodes) {
  for (double a : {alpha1, alpha2, alpha1 + alpha2}) check_caustic(std::sin(a));
  const double k = p.scale();
  const double q = k * x, qp = k * xp;
  // y^2 coefficient of the exponent is i*a; rotate y = e^{+-i pi/4} s so it becomes -|a| s^2.
  const double a = (1 / std::tan(alpha1) + 1 / std::tan(alpha2)) / 2;
  if (std::abs(a) < 1e-12) fail(ErrorCode::caustic, "composed phase is a focal point");
  const cplx rot = std::polar(1.0, a > 0 ? kPi / 4 : -kPi / 4);
  const double sa = std::sqrt(std::abs(a));
  const auto rule = gauss_hermite(quad_nodes);
  cplx sum = 0;
  for (int i = 0; i < rule->order; ++i) {
    const double t = rule->nodes[i];
    const cplx y = rot * (t / sa);
    const cplx s2 = std::sin(cplx(alpha2)), s1 = std::sin(cplx(alpha1));
    // Both kernels with their common Gaussian factor exp(i a y^2) = exp(-t^2) removed.
    const cplx e2 = I / (2.0 * s2) * (q * q * std::cos(alpha2) - 2.0 * q * y);
    const cplx e1 = I / (2.0 * s1) * (qp * qp * std::cos(alpha1) - 2.0 * y * qp);
    sum += rule->weights[i] * std::exp(e1 + e2);
  }
  const cplx pref = 1.0 / (std::sqrt(2.0 * kPi * I * std::sin(alpha2)) * std::sqrt(2.0 * kPi * I * std::sin(alpha1)));
  const cplx composed = pref * sum * rot / sa;
  const cplx direct = propagator_closed_scaled(alpha1 + alpha2, q, qp);
  // Scaled-unit kernels compose with measure dq; the physical kernels carry one factor k each.
  return k * std::abs(composed - direct);
}

}  // namespace amx
