// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include "quad/integral_reps.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "core/errors.hpp"
#include "core/factorial.hpp"
#include "hyp/hypergeometric.hpp"
#include "poly/special.hpp"
#include "quad/quadrature.hpp"

namespace amx {

namespace {

constexpr double kPi = std::numbers::pi;

BigRational fr(HalfInt h) { return BigRational(factorial(h.to_int())); }
int sign_of(HalfInt e) { return parity_sign(e); }

template <class F>
double integrate_theta(int order, F&& f) {
  const auto rule = gauss_legendre(order);
  double s = 0;
  for (int i = 0; i < rule->order; ++i) s += rule->weights[i] * f((rule->nodes[i] + 1) * kPi / 2);
  return s * kPi / 2;
}

}  // namespace

double three_j_ir(const ThreeJArgs& a, int order, Form form) {
  if (!three_j_allowed(a)) fail(ErrorCode::domain, "3j integral needs admissible arguments " + a.str());
  const HalfInt J = a.J();
  const HalfInt j1 = a.j1, j2 = a.j2, j3 = a.j3, m1 = a.m1, m2 = a.m2, m3 = a.m3;
  // Gamma_i^2 = (j_i - m_i)! (j_i + m_i)!
  BigRational sq = fr(j3 - m3) * fr(j3 + m3) / (fr(j2 - m2) * fr(j2 + m2) * fr(j1 - m1) * fr(j1 + m1));
  sq /= fr(J - 2 * j2) * fr(J - 2 * j1);
  int sign = sign_of(2 * (j2 - j1) + j2 + m2);
  if (form == Form::corrected) {
    sq *= fr(J + 1) * fr(J - 2 * j3);
    sign *= sign_of(m3 + j1 - j2);
  }
  const double pre = to_float(SqrtRational::signed_sqrt(sign, sq));
  const int n = static_cast<int>((j3 - m3).to_int());
  const int al = static_cast<int>((m3 + j1 - j2).to_int());
  const int be = static_cast<int>((m3 - j1 + j2).to_int());
  const int pc = static_cast<int>((2 * (j2 - m2)).to_int()) + 1;
  const int ps = static_cast<int>((2 * (j1 - m1)).to_int()) + 1;
  const auto coeffs = jacobi_z_coefficients(n, al, be);
  const double integral = integrate_theta(order, [&](double th) {
    const double z = std::sin(th / 2) * std::sin(th / 2);  // (1 - cos th)/2
    double p = 0;
    for (size_t k = coeffs.size(); k-- > 0;) p = p * z + coeffs[k];
    return std::pow(std::cos(th / 2), pc) * std::pow(std::sin(th / 2), ps) * p;
  });
  return pre * integral;
}

double six_j_ir(const SixJArgs& a, int order, Form form) {
  if (!six_j_triads_ok(a)) fail(ErrorCode::domain, "6j integral needs four valid triads " + a.str());
  const HalfInt j1 = a.j1, j2 = a.j2, j3 = a.j3, l1 = a.l1, l2 = a.l2, l3 = a.l3;
  const HalfInt J = j1 + j2 + j3;
  const HalfInt ea = l1 + l3 - j2, eb = l2 + l3 - j1;
  const auto f_coeffs = hyp_term_coefficients(HypParams{{rat(-ea), rat(-eb)}, {rat(-2 * l3)}, BigRational(0)});
  std::vector<double> fc;
  for (const auto& c : f_coeffs) fc.push_back(c.get_d());

  double pre = 0;
  double tan_power = 0;
  HalfInt dmp, dm;
  if (form == Form::corrected) {
    BigRational sq = fr(-j1 + l2 + l3) * fr(-j2 + l1 + l3) * fr(J + 1) * fr(j1 + j2 - j3) * fr(l1 + l2 + j3 + 1) *
                     fr(l1 + l2 - j3);
    sq /= fr(j1 + l2 + l3 + 1) * fr(j1 - l2 + l3) * fr(j1 + l2 - l3) * fr(j2 + l1 + l3 + 1) * fr(j2 - l1 + l3) *
          fr(j2 + l1 - l3);
    const int sign = sign_of(l2 + l3 + j1 + 2 * (j2 - j1) + 2 * (l2 - l1));
    const BigRational k = fr(2 * l3) / (2 * fr(ea) * fr(eb));
    pre = to_float(SqrtRational::signed_sqrt(sign, sq) * k);
    tan_power = (j1 + j2 - 2 * l3).to_double();
    dmp = j2 - j1;
    dm = l2 - l1;
  } else {
    // Delta(x, y, z) read with its third slot in place of the printed l1.
    auto delta = [](HalfInt x, HalfInt y, HalfInt z) -> BigRational {
      return fr(2 * x) * fr(-x + y + z) / (fr(x + y + z + 1) * fr(x - y + z) * fr(x + y - z));
    };
    BigRational sq = fr(J + 1) * fr(j1 + j2 - j3) * fr(2 * l1) * fr(2 * l2) / (delta(j1, l2, l3) * delta(j2, l1, l3));
    pre = to_float(SqrtRational::signed_sqrt(sign_of(l1 + l2 - j1 - j2), sq));
    tan_power = (j1 + j2).to_double();
    dmp = -j1 + j2;
    dm = -l1 + l2;
  }
  const double cs_power = (l1 + l2).to_double();
  const double integral = integrate_theta(order, [&](double th) {
    const double c = std::cos(th / 2), s = std::sin(th / 2), t = s / c;
    const double z = -t * t;
    double f = 0;
    for (size_t k = fc.size(); k-- > 0;) f = f * z + fc[k];
    return std::pow(c * s, cs_power) * std::pow(t, tan_power) * wigner_little_d(j3, dmp, dm, th) * f * std::sin(th);
  });
  return pre * integral;
}

double gaunt_triple_d(const std::array<HalfInt, 3>& j, const std::array<HalfInt, 3>& m,
                      const std::array<HalfInt, 3>& mp, int theta_order, int phi_points) {
  for (int i = 0; i < 3; ++i) {
    for (HalfInt x : {m[i], mp[i]})
      if (j[i] < 0 || x > j[i] || -x > j[i] || !(j[i] + x).is_integer())
        fail(ErrorCode::domain, "projection out of range in the D-matrix integral");
  }
  if (m[0] + m[1] + m[2] != 0 || mp[0] + mp[1] + mp[2] != 0) return 0.0;
  const HalfInt J = j[0] + j[1] + j[2];
  if (phi_points < J.twice() + 1) fail(ErrorCode::domain, "azimuthal grid too coarse for these spins");
  const double h = 2 * kPi / phi_points;
  const double theta_part = integrate_theta(theta_order, [&](double th) {
    std::complex<double> sum = 0;
    for (int a = 0; a < phi_points; ++a) {
      for (int b = 0; b < phi_points; ++b) {
        const EulerAngles ang{a * h, th, b * h};
        sum += wigner_big_d(j[0], mp[0], m[0], ang) * wigner_big_d(j[1], mp[1], m[1], ang) *
               wigner_big_d(j[2], mp[2], m[2], ang);
      }
    }
    return (sum.real() * h * h) * std::sin(th);
  });
  return theta_part / (8 * kPi * kPi);
}

double triple_y_integral(const std::array<int, 3>& l, const std::array<int, 3>& m, int theta_order, int phi_points) {
  for (int i = 0; i < 3; ++i)
    if (l[i] < 0 || std::abs(m[i]) > l[i]) fail(ErrorCode::domain, "spherical harmonic index out of range");
  if (m[0] + m[1] + m[2] != 0) return 0.0;
  if (phi_points < 2 * (l[0] + l[1] + l[2]) + 1) fail(ErrorCode::domain, "azimuthal grid too coarse");
  const double h = 2 * kPi / phi_points;
  return integrate_theta(theta_order, [&](double th) {
    std::complex<double> sum = 0;
    for (int a = 0; a < phi_points; ++a) {
      const double ph = a * h;
      sum += spherical_harmonic(l[0], m[0], th, ph) * spherical_harmonic(l[1], m[1], th, ph) *
             spherical_harmonic(l[2], m[2], th, ph);
    }
    return sum.real() * h * std::sin(th);
  });
}

}  // namespace amx
