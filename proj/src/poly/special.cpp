// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include "poly/special.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>

#include "core/errors.hpp"
#include "core/factorial.hpp"
#include "hyp/hypergeometric.hpp"
#include "kernels/kernels.hpp"
#include "series/multiseries.hpp"

namespace amx {

namespace {

constexpr double kPi = std::numbers::pi;

BigRational fr(int64_t n) { return BigRational(factorial(n)); }

BigRational binom_rational(const BigRational& top, int k) { return pochhammer(top - k + 1, k) / fr(k); }

MultiSeries one_var(int degree) { return MultiSeries({"t"}, degree); }
MultiSeries t_power(int degree, int k, const BigRational& c) {
  MultiSeries s = one_var(degree);
  s.add_term({k}, c);
  return s;
}

}  // namespace

BigRational hermite(int n, const BigRational& q) {
  if (n < 0) fail(ErrorCode::domain, "Hermite degree must be nonnegative");
  BigRational h0 = 1, h1 = 2 * q;
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    BigRational h2 = 2 * q * h1 - 2 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

BigRational legendre(int l, const BigRational& x) {
  if (l < 0) fail(ErrorCode::domain, "Legendre degree must be nonnegative");
  BigRational p0 = 1, p1 = x;
  if (l == 0) return p0;
  for (int k = 1; k < l; ++k) {
    BigRational p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

BigRational gegenbauer_recurrence(int l, int m, const BigRational& x) {
  if (l < 0 || m < 1) fail(ErrorCode::domain, "Gegenbauer needs l >= 0 and m >= 1");
  BigRational c0 = 1, c1 = 2 * m * x;
  if (l == 0) return c0;
  for (int n = 2; n <= l; ++n) {
    BigRational c2 = (2 * x * (n + m - 1) * c1 - (n + 2 * m - 2) * c0) / n;
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

BigRational gegenbauer(int l, int m, const BigRational& x, Form form) {
  if (l < 0 || m < 1) fail(ErrorCode::domain, "Gegenbauer needs l >= 0 and m >= 1");
  const BigRational sq = form == Form::corrected ? BigRational(-1) : BigRational(1);
  MultiSeries f = t_power(l, 1, 2 * x) + t_power(l, 2, sq);
  return series_geom(f, m).coefficient({l});
}

BigRational jacobi(int n, int alpha, int beta, const BigRational& x) {
  if (n < 0) fail(ErrorCode::domain, "Jacobi degree must be nonnegative");
  try {
    return binom_rational(BigRational(n + alpha), n) *
           hyp2f1_terminating(BigRational(n + alpha + beta + 1), BigRational(-n), BigRational(1 + alpha), (1 - x) / 2);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::pole) fail(ErrorCode::domain, std::string("Jacobi: ") + e.what());
    throw;
  }
}

BigRational jacobi_cos_form(int n, int alpha, int beta, const BigRational& x, Form form) {
  if (n < 0) fail(ErrorCode::domain, "Jacobi degree must be nonnegative");
  const BigRational z = (1 + x) / 2;
  const BigRational f =
      hyp2f1_terminating(BigRational(n + alpha + beta + 1), BigRational(-n), BigRational(1 + beta), z);
  if (form == Form::as_printed) return (beta % 2 == 0 ? 1 : -1) * binom_rational(BigRational(n + alpha), n) * f;
  return (n % 2 == 0 ? 1 : -1) * binom_rational(BigRational(n + beta), n) * f;
}

std::vector<double> jacobi_z_coefficients(int n, int alpha, int beta) {
  std::vector<double> out;
  for (int k = 0; k <= n; ++k) {
    BigRational c = pochhammer(BigRational(n + alpha + beta + 1), k) * pochhammer(BigRational(-n), k) *
                    pochhammer(BigRational(alpha + k + 1), n - k) / (fr(k) * fr(n));
    out.push_back(c.get_d());
  }
  return out;
}

BigRational jacobi_general(int n, int alpha, int beta, const BigRational& x) {
  if (n < 0) fail(ErrorCode::domain, "Jacobi degree must be nonnegative");
  const BigRational z = (1 - x) / 2;
  BigRational sum = 0, zk = 1;
  for (int k = 0; k <= n; ++k) {
    sum += pochhammer(BigRational(n + alpha + beta + 1), k) * pochhammer(BigRational(-n), k) *
           pochhammer(BigRational(alpha + k + 1), n - k) / fr(k) * zk;
    zk *= z;
  }
  return sum / fr(n);
}

double jacobi_eval(int n, int alpha, int beta, double x) {
  const auto c = jacobi_z_coefficients(n, alpha, beta);
  const double z = (1 - x) / 2;
  double s = 0;
  for (size_t k = c.size(); k-- > 0;) s = s * z + c[k];
  return s;
}

namespace {

struct DTerm {
  double coeff;
  int cos_power;
  int sin_power;
};

class LittleDCache {
 public:
  const std::vector<DTerm>& get(HalfInt j, HalfInt mp, HalfInt m) {
    const std::array<int64_t, 3> key{j.twice(), mp.twice(), m.twice()};
    {
      std::shared_lock lock(mu_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    std::vector<DTerm> terms = build(j, mp, m);
    std::unique_lock lock(mu_);
    return cache_.try_emplace(key, std::move(terms)).first->second;
  }

 private:
  static std::vector<DTerm> build(HalfInt j, HalfInt mp, HalfInt m) {
    std::vector<DTerm> out;
    const BigRational top = fr((j + mp).to_int()) * fr((j - mp).to_int()) * fr((j + m).to_int()) * fr((j - m).to_int());
    for (int64_t k = 0; k <= (2 * j).to_int(); ++k) {
      const int64_t a = (j + m).to_int() - k, b = (j - mp).to_int() - k, c = (mp - m).to_int() + k;
      if (a < 0 || b < 0 || c < 0) continue;
      const BigRational den = fr(a) * fr(k) * fr(b) * fr(c);
      const int sign = (c % 2 == 0) ? 1 : -1;
      const SqrtRational v = SqrtRational::signed_sqrt(sign, top / (den * den));
      out.push_back({to_float(v), static_cast<int>((2 * j + m - mp).to_int() - 2 * k), static_cast<int>(c + k)});
    }
    return out;
  }

  std::shared_mutex mu_;
  std::map<std::array<int64_t, 3>, std::vector<DTerm>> cache_;
};

LittleDCache& little_d_cache() {
  static LittleDCache c;
  return c;
}

}  // namespace

double wigner_little_d(HalfInt j, HalfInt mp, HalfInt m, double theta) {
  if (j < 0 || mp > j || -mp > j || m > j || -m > j || !(j + m).is_integer() || !(j + mp).is_integer())
    fail(ErrorCode::domain, "invalid little-d indices");
  const double c = theta == kPi ? 0.0 : std::cos(theta / 2);
  const double s = theta == 0.0 ? 0.0 : std::sin(theta / 2);
  double sum = 0;
  for (const DTerm& t : little_d_cache().get(j, mp, m)) sum += t.coeff * std::pow(c, t.cos_power) * std::pow(s, t.sin_power);
  return sum;
}

std::complex<double> wigner_big_d(HalfInt j, HalfInt mp, HalfInt m, const EulerAngles& a) {
  const double ph = -(mp.to_double() * a.psi + m.to_double() * a.phi);
  return wigner_little_d(j, mp, m, a.theta) * std::polar(1.0, ph);
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi, Form form) {
  if (l < 0 || std::abs(m) > l) fail(ErrorCode::domain, "spherical harmonic needs |m| <= l");
  const double norm = form == Form::corrected ? std::sqrt((2 * l + 1) / (4 * kPi)) : std::sqrt((2 * l + 1) / 4.0);
  return norm * wigner_little_d(l, m, 0, theta) * std::polar(1.0, m * phi);
}

double PiTagged::to_double() const { return to_float(coefficient) * std::pow(kPi, half_pi_powers / 2.0); }

std::string PiTagged::str() const {
  if (half_pi_powers == 0 || coefficient.is_zero()) return coefficient.str();
  std::ostringstream os;
  os << coefficient.str() << "*pi^(" << half_pi_powers << "/2)";
  return os.str();
}

PiTagged radial_norm(int n, int l) {
  if (n < 0 || l < 0) fail(ErrorCode::domain, "radial norm needs n, l >= 0");
  const BigRational den = BigRational(double_factorial(2 * n + 2 * l + 1) * double_factorial(2 * n));
  return {SqrtRational::signed_sqrt(n % 2 == 0 ? 1 : -1, BigRational(4) / den), 1};
}

GfReport gf_check_legendre(int degree, const std::vector<BigRational>& xs) {
  GfReport r;
  r.kind = GfKind::legendre;
  r.degree = degree;
  for (const auto& x : xs) {
    const MultiSeries f = t_power(degree, 1, 2 * x) + t_power(degree, 2, BigRational(-1));
    const MultiSeries g = series_geom(f, 1);
    for (int l = 0; l <= degree; ++l) {
      BigRational conv = 0;
      for (int a = 0; a <= l; ++a) conv += legendre(a, x) * legendre(l - a, x);
      ++r.checks;
      if (g.coefficient({l}) != conv) ++r.exact_mismatches;
    }
  }
  r.passed = r.exact_mismatches == 0 && r.checks > 0;
  return r;
}

GfReport gf_check_gegenbauer(int degree, int max_m, const std::vector<BigRational>& xs, Form form) {
  GfReport r;
  r.kind = GfKind::gegenbauer;
  r.degree = degree;
  for (const auto& x : xs)
    for (int m = 1; m <= max_m; ++m)
      for (int l = 0; l <= degree; ++l) {
        ++r.checks;
        if (gegenbauer(l, m, x, form) != gegenbauer_recurrence(l, m, x)) ++r.exact_mismatches;
      }
  r.passed = r.exact_mismatches == 0 && r.checks > 0;
  return r;
}

GfReport gf_check_hermite(int degree, const std::vector<double>& qs, double tol) {
  GfReport r;
  r.kind = GfKind::hermite;
  r.degree = degree;
  for (double q : qs) {
    // Taylor coefficients of exp(g), g = sqrt2 q z - z^2/2, via n e_n = sum_k k g_k e_{n-k}.
    const double g1 = std::sqrt(2.0) * q, g2 = -0.5;
    std::vector<double> e(degree + 1, 0.0);
    e[0] = 1;
    for (int n = 1; n <= degree; ++n) e[n] = (g1 * e[n - 1] + (n >= 2 ? 2 * g2 * e[n - 2] : 0.0)) / n;
    const double pre = std::pow(kPi, -0.25) * std::exp(-q * q / 2);
    for (int n = 0; n <= degree; ++n) {
      const double series = pre * e[n];
      const double family = oscillator_wavefn(n, q) / std::sqrt(std::tgamma(n + 1.0));
      r.max_deviation = std::max(r.max_deviation, std::abs(series - family));
      ++r.checks;
    }
  }
  r.passed = r.checks > 0 && r.max_deviation <= tol;
  return r;
}

GfReport gf_check_hermite_exact(int degree, const std::vector<BigRational>& qs) {
  GfReport r;
  r.kind = GfKind::hermite;
  r.degree = degree;
  for (const auto& q : qs) {
    const MultiSeries e = series_exp(t_power(degree, 1, 2 * q) + t_power(degree, 2, BigRational(-1)));
    for (int n = 0; n <= degree; ++n) {
      ++r.checks;
      if (e.coefficient({n}) != hermite(n, q) / fr(n)) ++r.exact_mismatches;
    }
  }
  r.passed = r.exact_mismatches == 0 && r.checks > 0;
  return r;
}

GfReport gf_check_character(int max_twice_j, const std::vector<std::pair<double, double>>& theta_alpha, Form form,
                            double tol) {
  GfReport r;
  r.kind = GfKind::character;
  r.degree = max_twice_j;
  for (auto [theta, alpha] : theta_alpha) {
    const double c = std::cos(theta / 2) * (form == Form::corrected ? std::cos(alpha / 2) : std::cos(alpha));
    // coefficients of 1/(1 - 2 r c + r^2)
    std::vector<double> a(max_twice_j + 1);
    a[0] = 1;
    if (max_twice_j >= 1) a[1] = 2 * c;
    for (int n = 2; n <= max_twice_j; ++n) a[n] = 2 * c * a[n - 1] - a[n - 2];
    for (int tj = 0; tj <= max_twice_j; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      std::complex<double> chi = 0;
      for (HalfInt m = -j; m <= j; m += 1) chi += wigner_little_d(j, m, m, theta) * std::polar(1.0, -m.to_double() * alpha);
      r.max_deviation = std::max(r.max_deviation, std::abs(chi - a[tj]));
      ++r.checks;
    }
  }
  r.passed = r.checks > 0 && r.max_deviation <= tol;
  return r;
}

GfReport gf_check_spherical(int max_l, const std::vector<std::pair<double, double>>& theta_phi, double tol) {
  GfReport r;
  r.kind = GfKind::spherical;
  r.degree = max_l;
  const std::pair<double, double> spinors[] = {{0.7, -0.4}, {-0.3, 1.1}};
  for (auto [theta, phi] : theta_phi) {
    const double rv[3] = {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
    for (auto [xi, eta] : spinors) {
      using C = std::complex<double>;
      const C a[3] = {C(-xi * xi + eta * eta, 0), C(0, -(xi * xi + eta * eta)), C(2 * xi * eta, 0)};
      const C ar = a[0] * rv[0] + a[1] * rv[1] + a[2] * rv[2];
      for (int l = 0; l <= max_l; ++l) {
        const C lhs = std::pow(ar, l) / (std::pow(2.0, l) * std::tgamma(l + 1.0));
        C rhs = 0;
        for (int m = -l; m <= l; ++m) {
          const double phi_lm = std::pow(xi, l + m) * std::pow(eta, l - m) / std::sqrt(std::tgamma(l + m + 1.0) * std::tgamma(l - m + 1.0));
          rhs += std::sqrt(4 * kPi / (2 * l + 1)) * phi_lm * spherical_harmonic(l, m, theta, phi);
        }
        r.max_deviation = std::max(r.max_deviation, std::abs(lhs - rhs));
        ++r.checks;
      }
    }
  }
  r.passed = r.checks > 0 && r.max_deviation <= tol;
  return r;
}

}  // namespace amx
