// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include "su3/su3.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <sstream>

#include "core/errors.hpp"
#include "core/factorial.hpp"
#include "hyp/hypergeometric.hpp"
#include "series/multiseries.hpp"

namespace amx {

namespace {

BigRational fq(int64_t n) { return BigRational(factorial(n)); }

int sign_pow(int64_t e) { return (e % 2 == 0) ? 1 : -1; }

void require_irrep(const Su3Irrep& r) {
  if (r.lambda < 0 || r.mu < 0) fail(ErrorCode::domain, "negative irrep label in " + r.str());
}

void require_state(const Su3Irrep& r, const Su3State& s) {
  if (!state_valid(r, s)) fail(ErrorCode::domain, "state " + s.str() + " not in " + r.str());
}

// N^2 without the (t+t0)!(t-t0)! factor.
BigRational norm_tilde_sq(const Su3Irrep& r, const Su3State& s) {
  const int lam = r.lambda, mu = r.mu, p = s.p, q = s.q;
  const int t2 = mu + p - q;
  BigRational num = fq(mu + p + 1) * fq(lam + mu - q + 1);
  BigRational den = fq(lam + 1) * BigRational(t2 + 1) * fq(p) * fq(lam - p) * fq(q) * fq(mu - q);
  return num / den;
}

BigRational basis_norm_sq(const Su3Irrep& r, const Su3State& s, Form form) {
  const Su3Labels l = labels(r, s);
  const int64_t tp = ival(l.t + l.t0), tm = ival(l.t - l.t0);
  BigRational n2 = norm_tilde_sq(r, s) / (fq(tp) * fq(tm));
  if (form == Form::as_printed) {
    const int t2 = r.mu + s.p - s.q;
    n2 = n2 * BigRational(t2 + 1) / (fq(t2 + 1) * fq(r.lambda));
  }
  return n2;
}

BigRational invariant_norm_sq(const Su3Coupling& c, NormReading reading) {
  const int64_t K = c.lambda1 + c.lambda2 - c.mu3;
  BigRational lead = reading == NormReading::two_times_factorial ? BigRational(2) * fq(c.mu3) : fq(2 * c.mu3);
  return lead * fq(c.k2()) * fq(c.k3()) / (fq(K + 2) * fq(K + 1));
}

void require_coupling(const Su3Coupling& c) {
  if (c.lambda1 < 0 || c.lambda2 < 0 || c.mu3 < 0 || c.mu3 > std::min(c.lambda1, c.lambda2))
    fail(ErrorCode::domain, "invalid coupling " + c.str());
}

struct OracleCache {
  std::mutex mu;
  std::map<Su3Coupling, std::map<Su3Triple, SqrtRational>> values;
};

OracleCache& oracle_cache() {
  static OracleCache c;
  return c;
}

}  // namespace

std::string Su3Irrep::str() const { return "(" + std::to_string(lambda) + "," + std::to_string(mu) + ")"; }

std::string Su3State::str() const {
  return "[" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + "]";
}

std::string Su3Coupling::str() const {
  return irrep1().str() + "x" + irrep2().str() + "->" + irrep3().str();
}

int64_t dimension(const Su3Irrep& r) {
  require_irrep(r);
  return static_cast<int64_t>(r.lambda + 1) * (r.mu + 1) * (r.lambda + r.mu + 2) / 2;
}

bool state_valid(const Su3Irrep& r, const Su3State& s) {
  if (r.lambda < 0 || r.mu < 0) return false;
  if (s.p < 0 || s.p > r.lambda || s.q < 0 || s.q > r.mu) return false;
  return s.r >= 0 && s.r <= r.mu + s.p - s.q;
}

Su3Labels labels(const Su3Irrep& r, const Su3State& s) {
  require_state(r, s);
  const HalfInt t = HalfInt::from_twice(r.mu + s.p - s.q);
  return {-(2 * r.lambda + r.mu) + 3 * (s.p + s.q), t, t - HalfInt(s.r)};
}

Su3State state_from_labels(const Su3Irrep& r, int y, HalfInt t, HalfInt t0) {
  require_irrep(r);
  const int shifted = y + 2 * r.lambda + r.mu;
  const int64_t diff = t.twice() - r.mu;  // p - q
  const HalfInt rr = t - t0;
  if (shifted % 3 != 0 || !rr.is_integer() || (shifted / 3 + diff) % 2 != 0)
    fail(ErrorCode::domain, "no state with these labels in " + r.str());
  const int sum = shifted / 3;
  Su3State s{static_cast<int>((sum + diff) / 2), static_cast<int>((sum - diff) / 2), static_cast<int>(ival(rr))};
  if (!state_valid(r, s)) fail(ErrorCode::domain, "no state with these labels in " + r.str());
  return s;
}

std::vector<Su3State> enumerate_states(const Su3Irrep& r) {
  require_irrep(r);
  std::vector<Su3State> out;
  out.reserve(static_cast<size_t>(dimension(r)));
  for (int p = 0; p <= r.lambda; ++p)
    for (int q = 0; q <= r.mu; ++q)
      for (int rr = 0; rr <= r.mu + p - q; ++rr) out.push_back({p, q, rr});
  return out;
}

SqrtRational basis_norm(const Su3Irrep& r, const Su3State& s, Form form) {
  require_state(r, s);
  return SqrtRational::signed_sqrt(sign_pow(s.q), basis_norm_sq(r, s, form));
}

std::vector<Su3Coupling> decompose(int lambda1, int lambda2) {
  if (lambda1 < 0 || lambda2 < 0) fail(ErrorCode::domain, "negative irrep label");
  std::vector<Su3Coupling> out;
  for (int m = 0; m <= std::min(lambda1, lambda2); ++m) out.push_back({lambda1, lambda2, m});
  return out;
}

Su3Coupling make_coupling(const Su3Irrep& a, const Su3Irrep& b, const Su3Irrep& c) {
  require_irrep(a);
  require_irrep(b);
  require_irrep(c);
  if (a.mu != 0 || b.mu != 0)
    fail(ErrorCode::unsupported, "only (l1,0) x (l2,0) couplings are implemented, got " + a.str() + "x" + b.str());
  Su3Coupling k{a.lambda, b.lambda, c.mu};
  if (c.mu > std::min(a.lambda, b.lambda) || c.lambda != k.lambda3())
    fail(ErrorCode::domain, c.str() + " does not occur in " + a.str() + "x" + b.str());
  return k;
}

SqrtRational invariant_norm(const Su3Coupling& c, NormReading reading) {
  require_coupling(c);
  return SqrtRational::signed_sqrt(1, invariant_norm_sq(c, reading));
}

Conjugate r_conjugate(const Su3Irrep& r, const Su3State& s) {
  require_state(r, s);
  const int t2 = r.mu + s.p - s.q;
  Conjugate c{{r.mu, r.lambda}, {r.mu - s.q, r.lambda - s.p, t2 - s.r}, 1};
  c.phase = sign_pow(-r.lambda - r.mu + s.p + 2 * s.q + s.r);
  return c;
}

BigRational su3_gf_coefficient(const Su3Coupling& c) {
  require_coupling(c);
  const int K = c.lambda1 + c.lambda2 - c.mu3;
  const std::vector<std::string> vars{"u1", "u2", "u3"};
  MultiSeries u1 = MultiSeries::variable(vars, K, 0);
  MultiSeries u23 = MultiSeries::variable(vars, K, 1) + MultiSeries::variable(vars, K, 2);
  MultiSeries gf = series_geom(u23, 2) * series_exp(u1 * series_geom(u23, 1));
  return gf.coefficient({c.k1(), c.k2(), c.k3()});
}

std::map<Su3Triple, SqrtRational> su3_oracle(const Su3Coupling& c, int max_degree) {
  require_coupling(c);
  if (max_degree >= 0 && max_degree < c.lambda1 + c.lambda2)
    fail(ErrorCode::budget, "degree budget " + std::to_string(max_degree) + " below " +
                                std::to_string(c.lambda1 + c.lambda2) + " for " + c.str());
  {
    auto& cache = oracle_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.values.find(c);
    if (it != cache.values.end()) return it->second;
  }
  const std::vector<std::string> vars{"a1", "b1", "xi1", "eta1", "a3", "b3", "xi3",
                                      "eta3", "a5", "b5", "c5", "d5", "xi5", "eta5"};
  const int K = c.lambda1 + c.lambda2 - c.mu3;
  const int deg = 6 * K + 1;
  auto v = [&](size_t i) { return MultiSeries::variable(vars, deg, i); };
  using Vec = std::array<MultiSeries, 3>;
  const Vec f1{v(0) * v(2), v(0) * v(3), v(1)};
  const Vec f3{v(4) * v(6), v(4) * v(7), v(5)};
  const Vec f5{v(8) * v(12), v(8) * v(13), v(9)};
  const Vec g{v(10) * v(13), -(v(10) * v(12)), v(11)};
  auto dot = [](const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
  auto cross = [](const Vec& a, const Vec& b) {
    return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  MultiSeries poly = dot(f5, cross(f1, f3)).pow(c.k1()) * dot(f3, g).pow(c.k2()) * dot(f1, g).pow(c.k3());
  poly = poly.scaled(su3_gf_coefficient(c));

  const BigRational nk2 = invariant_norm_sq(c, NormReading::two_times_factorial);
  const Su3Irrep r1 = c.irrep1(), r2 = c.irrep2(), r3 = c.irrep3();
  std::map<Su3Triple, SqrtRational> out;
  for (const auto& s3 : enumerate_states(r3)) {
    const Conjugate cb = r_conjugate(r3, s3);
    const Su3Labels lb = labels(cb.irrep, cb.state);
    const BigRational nb2 = basis_norm_sq(cb.irrep, cb.state, Form::corrected);
    for (const auto& s1 : enumerate_states(r1)) {
      const Su3Labels l1 = labels(r1, s1);
      const BigRational n12 = basis_norm_sq(r1, s1, Form::corrected);
      for (const auto& s2 : enumerate_states(r2)) {
        const Su3Labels l2 = labels(r2, s2);
        Exponents e{s1.p,
                    c.lambda1 - s1.p,
                    static_cast<int>(ival(l1.t + l1.t0)),
                    static_cast<int>(ival(l1.t - l1.t0)),
                    s2.p,
                    c.lambda2 - s2.p,
                    static_cast<int>(ival(l2.t + l2.t0)),
                    static_cast<int>(ival(l2.t - l2.t0)),
                    cb.state.p,
                    cb.irrep.lambda - cb.state.p,
                    cb.irrep.mu - cb.state.q,
                    cb.state.q,
                    static_cast<int>(ival(lb.t + lb.t0)),
                    static_cast<int>(ival(lb.t - lb.t0))};
        auto it = poly.terms().find(e);
        if (it == poly.terms().end()) continue;
        const BigRational n22 = basis_norm_sq(r2, s2, Form::corrected);
        const BigRational pref = it->second * BigRational(cb.phase * sign_pow(cb.state.q));
        out.emplace(Su3Triple{s1, s2, s3}, SqrtRational(pref, nk2 / (n12 * n22 * nb2)));
      }
    }
  }
  auto& cache = oracle_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  cache.values.emplace(c, out);
  return out;
}

namespace {

struct BracketArgs {
  int64_t A, B, C, D, E;
};

BracketArgs bracket_args(const Su3Coupling& c, HalfInt t1, HalfInt t3, int64_t T) {
  const int64_t tt1 = t1.twice(), tt3 = t3.twice();
  return {c.mu3 - T + tt3, T - tt1, tt1 - c.mu3, c.lambda2 - c.mu3 - T + tt1, c.lambda1 - tt1};
}

}  // namespace

BigRational su3_bracket_sum(const Su3Coupling& c, HalfInt t1, HalfInt t3, int64_t T) {
  const BracketArgs b = bracket_args(c, t1, t3, T);
  BigRational s(0);
  for (int64_t n = 0; n <= std::min({b.A, b.B, b.E}); ++n) {
    const int64_t args[] = {n, b.A - n, b.B - n, b.C + n, b.D + n, b.E - n};
    if (std::any_of(std::begin(args), std::end(args), [](int64_t x) { return x < 0; })) continue;
    BigRational den(1);
    for (int64_t x : args) den *= fq(x);
    s += BigRational(sign_pow(n)) / den;
  }
  return s;
}

BigRational su3_bracket_hyp(const Su3Coupling& c, HalfInt t1, HalfInt t3, int64_t T) {
  const BracketArgs b = bracket_args(c, t1, t3, T);
  if (b.A < 0 || b.B < 0 || b.E < 0) return BigRational(0);
  HypParams p{{BigRational(-b.A), BigRational(-b.B), BigRational(-b.E)},
              {BigRational(b.C + 1), BigRational(b.D + 1)},
              BigRational(1)};
  return hyp_eval_regularized(p, {true, true}) / (fq(b.A) * fq(b.B) * fq(b.E));
}

SqrtRational su3_three_j(const Su3Coupling& c, const Su3State& a1, const Su3State& a2, const Su3State& a3, Form form) {
  require_coupling(c);
  const Su3Irrep r1 = c.irrep1(), r2 = c.irrep2(), r3 = c.irrep3();
  require_state(r1, a1);
  require_state(r2, a2);
  require_state(r3, a3);
  const Su3Labels l1 = labels(r1, a1), l2 = labels(r2, a2), l3 = labels(r3, a3);
  if (l1.y + l2.y != l3.y || l1.t0 + l2.t0 != l3.t0) return {};
  const HalfInt J = l1.t + l2.t + l3.t;
  if (!J.is_integer() || !triangle_ok(l1.t, l2.t, l3.t)) return {};
  const int64_t T = ival(J);
  const BigRational br = su3_bracket_sum(c, l1.t, l3.t, T);
  if (br == 0) return {};
  const int64_t K = c.lambda1 + c.lambda2 - c.mu3;
  const int base_sign = sign_pow((l3.y - l3.t0.twice()) / 2) * sign_pow(l1.t.twice() - c.mu3);

  if (form == Form::corrected) {
    const Conjugate cb = r_conjugate(r3, a3);
    const SqrtRational su2 = three_j(ThreeJArgs{l1.t, l2.t, l3.t, l1.t0, l2.t0, -l3.t0});
    if (su2.is_zero()) return {};
    const BigRational kf = fq(K + 1) / fq(c.k1() + 1);
    BigRational rad = invariant_norm_sq(c, NormReading::two_times_factorial) * kf * kf * fq(T + 1) *
                      fq(ival(J - 2 * l1.t)) * fq(ival(J - 2 * l2.t)) / fq(ival(J - 2 * l3.t));
    rad /= norm_tilde_sq(r1, a1) * norm_tilde_sq(r2, a2) * norm_tilde_sq(cb.irrep, cb.state);
    const int sign = base_sign * sign_pow(cb.state.q);
    return sqrt_mul(SqrtRational(br * BigRational(sign), rad), su2);
  }
  // Printed reading: unconjugated norms, no combinatorial prefactor, +t03 in the SU(2) factor.
  ThreeJArgs printed{l1.t, l2.t, l3.t, l1.t0, l2.t0, l3.t0};
  if (!three_j_allowed(printed)) return {};
  const SqrtRational su2 = three_j(printed);
  if (su2.is_zero()) return {};
  BigRational rad = invariant_norm_sq(c, NormReading::two_times_factorial) /
                    (basis_norm_sq(r1, a1, form) * basis_norm_sq(r2, a2, form) * basis_norm_sq(r3, a3, form));
  return sqrt_mul(SqrtRational(br * BigRational(base_sign), rad), su2);
}

SqrtRational isoscalar_factor(const Su3Coupling& c, int y1, HalfInt t1, int y2, HalfInt t2, int y3, HalfInt t3) {
  require_coupling(c);
  const Su3Irrep r1 = c.irrep1(), r2 = c.irrep2(), r3 = c.irrep3();
  bool found = false;
  SqrtRational value;
  for (HalfInt m1 = -t1; m1 <= t1; m1 += HalfInt(1)) {
    for (HalfInt m2 = -t2; m2 <= t2; m2 += HalfInt(1)) {
      const HalfInt m3 = m1 + m2;
      if (m3 > t3 || m3 < -t3) continue;
      const SqrtRational su2 = three_j(ThreeJArgs{t1, t2, t3, m1, m2, -m3});
      if (su2.is_zero()) continue;
      const SqrtRational full = su3_three_j(c, state_from_labels(r1, y1, t1, m1), state_from_labels(r2, y2, t2, m2),
                                            state_from_labels(r3, y3, t3, m3));
      // The third state enters conjugated, which brings the SU(2) phase (-1)^(t3 - m3).
      const BigRational conj(sign_pow(ival(t3 - m3)));
      const SqrtRational ratio = sqrt_mul(full, SqrtRational(conj / su2.square(), BigRational(1)));
      const SqrtRational isf = sqrt_mul(ratio, su2);
      if (!found) {
        value = isf;
        found = true;
      } else if (!(isf == value)) {
        fail(ErrorCode::internal, "isoscalar factor depends on the isospin projection");
      }
    }
  }
  if (!found) fail(ErrorCode::domain, "every SU(2) factor vanishes for these isospins");
  return value;
}

}  // namespace amx
