// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include "su2/su2.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "core/errors.hpp"
#include "core/factorial.hpp"
#include "hyp/hypergeometric.hpp"
#include "series/multiseries.hpp"

namespace amx {

namespace {

BigRational fr(HalfInt h) { return BigRational(factorial(h.to_int())); }
BigRational q(HalfInt h) { return rat(h); }
int sign_of(HalfInt exponent) { return parity_sign(exponent); }

struct ArrayHash {
  size_t operator()(const std::array<int64_t, 6>& a) const noexcept {
    size_t h = 0;
    for (auto x : a) h = h * 1000003u ^ std::hash<int64_t>{}(x);
    return h;
  }
};

// ---- expansion oracle ----------------------------------------------------------------

using OracleKey = std::array<int64_t, 3>;

class OracleCache {
 public:
  std::shared_ptr<const MultiSeries> get(HalfInt j1, HalfInt j2, HalfInt j3) {
    const OracleKey key{j1.twice(), j2.twice(), j3.twice()};
    {
      std::shared_lock lock(mu_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    auto built = std::make_shared<const MultiSeries>(build(j1, j2, j3));
    std::unique_lock lock(mu_);
    return cache_.try_emplace(key, built).first->second;
  }

 private:
  static MultiSeries build(HalfInt j1, HalfInt j2, HalfInt j3) {
    const int64_t J = (j1 + j2 + j3).to_int();
    const int D = static_cast<int>(2 * J);
    const std::vector<std::string> vars{"xi1", "eta1", "xi2", "eta2", "xi3", "eta3"};
    auto var = [&](size_t i) { return MultiSeries::variable(vars, D, i); };
    // [u_a u_b] = xi_a eta_b - eta_a xi_b
    auto bracket = [&](int a, int b) {
      return var(2 * a) * var(2 * b + 1) - var(2 * a + 1) * var(2 * b);
    };
    const int e1 = static_cast<int>(J - (2 * j1).to_int());
    const int e2 = static_cast<int>(J - (2 * j2).to_int());
    const int e3 = static_cast<int>(J - (2 * j3).to_int());
    return bracket(1, 2).pow(e1) * bracket(2, 0).pow(e2) * bracket(0, 1).pow(e3);
  }

  std::shared_mutex mu_;
  std::map<OracleKey, std::shared_ptr<const MultiSeries>> cache_;
};

OracleCache& oracle_cache() {
  static OracleCache c;
  return c;
}

// ---- memo for three_j ----------------------------------------------------------------

class ThreeJMemo {
 public:
  bool find(const std::array<int64_t, 6>& k, ThreeJMethod m, SqrtRational& out) {
    std::shared_lock lock(mu_);
    auto& t = table(m);
    auto it = t.find(k);
    if (it == t.end()) return false;
    out = it->second;
    return true;
  }
  void insert(const std::array<int64_t, 6>& k, ThreeJMethod m, const SqrtRational& v) {
    std::unique_lock lock(mu_);
    table(m).try_emplace(k, v);
  }
  size_t size() {
    std::shared_lock lock(mu_);
    size_t n = 0;
    for (auto& t : tables_) n += t.size();
    return n;
  }
  void clear() {
    std::unique_lock lock(mu_);
    for (auto& t : tables_) t.clear();
  }

 private:
  std::unordered_map<std::array<int64_t, 6>, SqrtRational, ArrayHash>& table(ThreeJMethod m) {
    return tables_[static_cast<size_t>(m)];
  }
  std::shared_mutex mu_;
  std::array<std::unordered_map<std::array<int64_t, 6>, SqrtRational, ArrayHash>, 4> tables_;
};

ThreeJMemo& memo() {
  static ThreeJMemo m;
  return m;
}

// Representative of the 12-element group generated by column permutations and m -> -m,
// with the phase relating the representative's value to the original.
std::pair<ThreeJArgs, int> canonical_representative(const ThreeJArgs& a) {
  const int phaseJ = sign_of(a.J());
  std::array<std::pair<HalfInt, HalfInt>, 3> cols{{{a.j1, a.m1}, {a.j2, a.m2}, {a.j3, a.m3}}};
  static constexpr std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
  ThreeJArgs best = a;
  int best_phase = 1;
  bool have = false;
  for (size_t p = 0; p < perms.size(); ++p) {
    for (int neg = 0; neg < 2; ++neg) {
      const auto& pr = perms[p];
      auto m = [&](int i) { return neg ? -cols[pr[i]].second : cols[pr[i]].second; };
      ThreeJArgs c{cols[pr[0]].first, cols[pr[1]].first, cols[pr[2]].first, m(0), m(1), m(2)};
      int phase = ((p >= 3) ? phaseJ : 1) * (neg ? phaseJ : 1);
      if (!have || c.key() < best.key()) {
        best = c;
        best_phase = phase;
        have = true;
      }
    }
  }
  return {best, best_phase};
}

}  // namespace

std::string ThreeJArgs::str() const {
  return "(" + j1.str() + " " + j2.str() + " " + j3.str() + "; " + m1.str() + " " + m2.str() + " " + m3.str() + ")";
}

std::string SixJArgs::str() const {
  return "{" + j1.str() + " " + j2.str() + " " + j3.str() + "; " + l1.str() + " " + l2.str() + " " + l3.str() + "}";
}

bool triangle_ok(HalfInt j1, HalfInt j2, HalfInt j3) {
  if (j1 < 0 || j2 < 0 || j3 < 0) return false;
  if (!(j1 + j2 + j3).is_integer()) return false;
  const HalfInt d = j1 > j2 ? j1 - j2 : j2 - j1;
  return d <= j3 && j3 <= j1 + j2;
}

bool three_j_allowed(const ThreeJArgs& a) {
  for (auto [j, m] : {std::pair{a.j1, a.m1}, std::pair{a.j2, a.m2}, std::pair{a.j3, a.m3}}) {
    if (j < 0 || m > j || -m > j || !(j + m).is_integer()) return false;
  }
  if (a.m1 + a.m2 + a.m3 != 0) return false;
  return triangle_ok(a.j1, a.j2, a.j3);
}

SqrtRational oracle_three_j(const ThreeJArgs& a, Form form) {
  if (!three_j_allowed(a)) return {};
  const HalfInt J = a.J();
  auto series = oracle_cache().get(a.j1, a.j2, a.j3);
  const Exponents e{static_cast<int>((a.j1 + a.m1).to_int()), static_cast<int>((a.j1 - a.m1).to_int()),
                    static_cast<int>((a.j2 + a.m2).to_int()), static_cast<int>((a.j2 - a.m2).to_int()),
                    static_cast<int>((a.j3 + a.m3).to_int()), static_cast<int>((a.j3 - a.m3).to_int())};
  const BigRational coeff = series->coefficient(e);
  if (coeff == 0) return {};
  BigRational r = fr(a.j1 + a.m1) * fr(a.j1 - a.m1) * fr(a.j2 + a.m2) * fr(a.j2 - a.m2) * fr(a.j3 + a.m3) *
                  fr(a.j3 - a.m3);
  if (form == Form::as_printed) {
    // The last denominator entry without its factorial; vanishes for stretched j3.
    const BigRational last(ival(J - 2 * a.j3));
    if (last == 0) fail(ErrorCode::pole, "zero denominator at " + a.str());
    r /= fr(J + 1) * fr(J - 2 * a.j1) * fr(J - 2 * a.j2) * last;
  } else {
    r /= fr(J + 1) * fr(J - 2 * a.j1) * fr(J - 2 * a.j2) * fr(J - 2 * a.j3);
  }
  return SqrtRational(coeff, r);
}

SqrtRational three_j_vdw(const ThreeJArgs& a, Form form) {
  if (!three_j_allowed(a)) return {};
  const HalfInt l1 = a.j1, l2 = a.j2, l = a.j3, m1 = a.m1, m2 = a.m2, m3 = a.m3;
  const bool printed = form == Form::as_printed;
  // Delta(l, m)
  BigRational d2 = fr(l + l1 - l2) * fr(-l + l1 + l2) * fr(l + m3) * fr(printed ? l1 - m1 : l1 + m1);
  d2 /= fr(l - l1 + l2) * fr(l + l1 + l2 + 1) * fr(l - m3) * fr(printed ? l1 + m1 : l1 - m1) * fr(l2 + m2) *
        fr(l2 - m2);
  const int dphase = printed ? sign_of(l2 + m2) : sign_of(l1 - m1 + l2 + m2);
  const SqrtRational delta = SqrtRational::signed_sqrt(dphase, d2);

  BigRational pre = sign_of(2 * (l2 - l1)) * fr(l - l1 + l2) * fr(l - m3) * fr(l2 - m2) / fr(-l + l1 + l2);
  HypParams hp{{q(-l2 - m2), q(-l1 + m1), printed ? q(l - l1 - m2) : q(l - l1 - l2)},
               {q(l - l1 - m2 + 1), q(l - l2 + m1 + 1)},
               BigRational(1)};
  const BigRational s = hyp_eval_regularized(hp, {true, true});
  return delta * (pre * s);
}

SqrtRational three_j_wigner(const ThreeJArgs& a, Form form) {
  if (!three_j_allowed(a)) return {};
  const HalfInt j1 = a.j1, j2 = a.j2, j3 = a.j3, m1 = a.m1, m2 = a.m2, m3 = a.m3;
  BigRational d2 = fr(j3 + j1 - j2) * fr(-j3 + j1 + j2) * fr(j3 + m3) * fr(j1 - m1);
  d2 /= fr(j3 - j1 + j2) * fr(a.J() + 1) * fr(j3 - m3) * fr(j1 + m1) * fr(j2 + m2) * fr(j2 - m2);
  const SqrtRational delta = SqrtRational::signed_sqrt(sign_of(j2 + m2), d2);
  const int phase = sign_of(j2 - j1 + m3);
  if (form == Form::as_printed) {
    // Ordinary 3F2 with the printed third numerator and the printed prefactor.
    HypParams hp{{q(-j3 + m3), q(-j3 + j1 - j2), q(j1 - m1 - 1)}, {q(j1 - j2 + m3 + 1), q(-j3 - j2 - m1)}, BigRational(1)};
    const BigRational s = hyp_eval(hp);
    return delta * (phase * fr(j1 + j2 + m1) * s / fr(j1 - j2 + m3));
  }
  HypParams hp{{q(-j3 + m3), q(-j3 + j1 - j2), q(j1 - m1 + 1)}, {q(j1 - j2 + m3 + 1), q(-j3 - j2 - m1)}, BigRational(1)};
  const BigRational s = hyp_eval_regularized(hp, {true, false});
  return delta * (phase * fr(j3 + j2 + m1) * s);
}

SqrtRational three_j_special(HalfInt j1, HalfInt j2, HalfInt j3, Form form) {
  if (!triangle_ok(j1, j2, j3)) fail(ErrorCode::domain, "stretched 3j needs a valid triangle");
  const HalfInt J = j1 + j2 + j3;
  BigRational r = fr(2 * j1) * fr(2 * j2) / fr(J + 1);
  r /= form == Form::as_printed ? fr(J) : fr(J - 2 * j3);
  return SqrtRational::signed_sqrt(sign_of(2 * (j2 - j1)), r);
}

SqrtRational three_j(const ThreeJArgs& a, ThreeJMethod method) {
  if (!three_j_allowed(a)) return {};
  auto [rep, phase] = canonical_representative(a);
  SqrtRational v;
  if (!memo().find(rep.key(), method, v)) {
    switch (method) {
      case ThreeJMethod::automatic:
      case ThreeJMethod::vdw:
        v = three_j_vdw(rep);
        break;
      case ThreeJMethod::wigner:
        v = three_j_wigner(rep);
        break;
      case ThreeJMethod::oracle:
        v = oracle_three_j(rep);
        break;
    }
    memo().insert(rep.key(), method, v);
  }
  return phase == 1 ? v : -v;
}

size_t three_j_cache_size() { return memo().size(); }
void three_j_cache_clear() { memo().clear(); }

ReggeSquare regge_square(const ThreeJArgs& a) {
  const HalfInt j1 = a.j1, j2 = a.j2, j3 = a.j3;
  return {{{-j1 + j2 + j3, j1 - j2 + j3, j1 + j2 - j3},
           {j1 - a.m1, j2 - a.m2, j3 - a.m3},
           {j1 + a.m1, j2 + a.m2, j3 + a.m3}}};
}

ThreeJArgs from_regge_square(const ReggeSquare& r) {
  std::array<HalfInt, 3> j{}, m{};
  for (int i = 0; i < 3; ++i) {
    const HalfInt s = r[1][i] + r[2][i];
    const HalfInt d = r[2][i] - r[1][i];
    if (!s.is_integer() || !d.is_integer()) fail(ErrorCode::domain, "Regge square entries must be integers");
    j[i] = HalfInt::from_twice(s.to_int());
    m[i] = HalfInt::from_twice(d.to_int());
  }
  ThreeJArgs out{j[0], j[1], j[2], m[0], m[1], m[2]};
  if (regge_square(out) != r) fail(ErrorCode::domain, "matrix is not a Regge square");
  return out;
}

ThreeJArgs regge_map(const ThreeJArgs& a) {
  const ReggeSquare r = regge_square(a);
  ReggeSquare t{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) t[i][k] = r[2 - k][2 - i];
  return from_regge_square(t);
}

ThreeJArgs regge_map_as_printed(const ThreeJArgs& a) {
  const auto half = [](HalfInt h) {
    if (!h.is_integer()) fail(ErrorCode::domain, "Regge image entry is not a half-integer");
    return HalfInt::from_twice(h.to_int());
  };
  return {half(a.j1 + a.j2 - a.m3), half(a.j1 + a.j2 + a.m3), a.j3, half(a.j1 - a.j2 + a.m1 - a.m2),
          half(a.j1 - a.j2 + a.m1 - a.m2), -a.j1 + a.j2};
}

std::pair<ThreeJArgs, int> classical_symmetry(const ThreeJArgs& a, Symmetry op) {
  const HalfInt J = a.J();
  const int pj = J.is_integer() ? sign_of(J) : 1;
  switch (op) {
    case Symmetry::cyclic:
      return {{a.j2, a.j3, a.j1, a.m2, a.m3, a.m1}, 1};
    case Symmetry::swap12:
      return {{a.j2, a.j1, a.j3, a.m2, a.m1, a.m3}, pj};
    case Symmetry::negate_m:
      return {{a.j1, a.j2, a.j3, -a.m1, -a.m2, -a.m3}, pj};
  }
  fail(ErrorCode::internal, "unknown symmetry");
}

bool six_j_triads_ok(const SixJArgs& a) {
  return triangle_ok(a.j1, a.j2, a.j3) && triangle_ok(a.j1, a.l2, a.l3) && triangle_ok(a.l1, a.j2, a.l3) &&
         triangle_ok(a.l1, a.l2, a.j3);
}

namespace {

// Contraction term for one (mu1, mu2, mu3); zero when a projection is out of range.
SqrtRational contraction_term(const SixJArgs& a, HalfInt mu1, HalfInt mu2, HalfInt mu3, ThreeJMethod method) {
  const HalfInt m1 = a.j1, m2 = -a.j2, m3 = a.j2 - a.j1;
  const HalfInt e = a.l1 + a.l2 + a.l3 + mu1 + mu2 + mu3;
  if (!e.is_integer()) return {};
  const SqrtRational x = three_j({a.j1, a.l2, a.l3, m1, mu2, -mu3}, method);
  if (x.is_zero()) return {};
  const SqrtRational y = three_j({a.l1, a.j2, a.l3, -mu1, m2, mu3}, method);
  if (y.is_zero()) return {};
  const SqrtRational z = three_j({a.l1, a.l2, a.j3, mu1, -mu2, m3}, method);
  if (z.is_zero()) return {};
  const SqrtRational p = sqrt_mul(sqrt_mul(x, y), z);
  return sign_of(e) == 1 ? p : -p;
}

SqrtRational divide_by_stretched(const SqrtRational& sum, const SixJArgs& a) {
  const SqrtRational s = three_j_special(a.j1, a.j2, a.j3);
  return sqrt_mul(sum, s) * (BigRational(1) / s.square());
}

}  // namespace

SqrtRational six_j(const SixJArgs& a) {
  if (!six_j_triads_ok(a)) return {};
  SqrtAccumulator acc;
  for (HalfInt mu3 = -a.l3; mu3 <= a.l3; mu3 += 1) {
    const HalfInt mu1 = mu3 - a.j2;
    const HalfInt mu2 = mu3 - a.j1;
    if (mu1 > a.l1 || -mu1 > a.l1 || mu2 > a.l2 || -mu2 > a.l2) continue;
    acc.add(contraction_term(a, mu1, mu2, mu3, ThreeJMethod::automatic));
  }
  return divide_by_stretched(acc.value(), a);
}

SqrtRational six_j_triple_sum(const SixJArgs& a) {
  if (!six_j_triads_ok(a)) return {};
  SqrtAccumulator acc;
  for (HalfInt mu1 = -a.l1; mu1 <= a.l1; mu1 += 1)
    for (HalfInt mu2 = -a.l2; mu2 <= a.l2; mu2 += 1)
      for (HalfInt mu3 = -a.l3; mu3 <= a.l3; mu3 += 1)
        acc.add(contraction_term(a, mu1, mu2, mu3, ThreeJMethod::oracle));
  return divide_by_stretched(acc.value(), a);
}

BigRational orthogonality_sum(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j3p, HalfInt m3, HalfInt m3p) {
  SqrtAccumulator acc;
  for (HalfInt m1 = -j1; m1 <= j1; m1 += 1) {
    for (HalfInt m2 = -j2; m2 <= j2; m2 += 1) {
      const SqrtRational x = three_j({j1, j2, j3, m1, m2, m3});
      if (x.is_zero()) continue;
      const SqrtRational y = three_j({j1, j2, j3p, m1, m2, m3p});
      if (y.is_zero()) continue;
      acc.add(sqrt_mul(x, y));
    }
  }
  const SqrtRational v = acc.value();
  if (!v.is_rational()) fail(ErrorCode::internal, "orthogonality sum is irrational");
  return v.prefactor() * (2 * q(j3) + 1);
}

SqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
  const SqrtRational t = three_j({j1, j2, J, m1, m2, -M});
  if (t.is_zero()) return t;
  const SqrtRational r = sqrt_mul(t, SqrtRational::signed_sqrt(1, 2 * q(J) + 1));
  return sign_of(j1 - j2 + M) == 1 ? r : -r;
}

}  // namespace amx
