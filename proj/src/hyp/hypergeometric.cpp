// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include "hyp/hypergeometric.hpp"

#include <limits>
#include <optional>

#include "core/errors.hpp"
#include "core/factorial.hpp"

namespace amx {

namespace {

// -q when q is a nonpositive integer.
std::optional<int64_t> nonpositive_integer(const BigRational& q) {
  if (!is_integer(q) || q > 0) return std::nullopt;
  return -to_i64(q);
}

void check_poles(const HypParams& p, int64_t n, const std::vector<bool>* regularized) {
  for (size_t i = 0; i < p.den.size(); ++i) {
    if (regularized && (*regularized)[i]) continue;
    if (auto N = nonpositive_integer(p.den[i]); N && *N < n) {
      fail(ErrorCode::pole, "lower parameter " + std::to_string(i) + " = " + rat_str(p.den[i]) +
                                " hits zero at term " + std::to_string(*N + 1) + " of a series with " +
                                std::to_string(n + 1) + " terms");
    }
  }
}

BigRational rational_pow(const BigRational& base, int64_t e) {
  if (e < 0) {
    if (base == 0) fail(ErrorCode::domain, "zero to a negative power");
    return rational_pow(BigRational(1) / base, -e);
  }
  BigRational out = 1;
  for (int64_t i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

BigRational pochhammer(const BigRational& a, int64_t k) {
  if (k < 0) fail(ErrorCode::domain, "Pochhammer index must be nonnegative");
  BigRational out = 1;
  BigRational x = a;
  for (int64_t i = 0; i < k; ++i) {
    out *= x;
    if (out == 0) break;
    x += 1;
  }
  return out;
}

int64_t termination_index(const HypParams& p) {
  int64_t best = std::numeric_limits<int64_t>::max();
  for (const auto& a : p.num)
    if (auto n = nonpositive_integer(a)) best = std::min(best, *n);
  if (best == std::numeric_limits<int64_t>::max()) fail(ErrorCode::domain, "series does not terminate");
  return best;
}

BigRational hyp_eval(const HypParams& p) {
  const int64_t n = termination_index(p);
  check_poles(p, n, nullptr);
  BigRational sum = 0;
  BigRational term = 1;
  for (int64_t k = 0;; ++k) {
    sum += term;
    if (k == n) break;
    BigRational ratio = p.z / (k + 1);
    for (const auto& a : p.num) ratio *= a + k;
    for (const auto& b : p.den) ratio /= b + k;
    term *= ratio;
  }
  return sum;
}

std::vector<BigRational> hyp_term_coefficients(const HypParams& p) {
  const int64_t n = termination_index(p);
  check_poles(p, n, nullptr);
  std::vector<BigRational> out;
  out.reserve(n + 1);
  BigRational term = 1;
  for (int64_t k = 0;; ++k) {
    out.push_back(term);
    if (k == n) break;
    BigRational ratio = BigRational(1) / (k + 1);
    for (const auto& a : p.num) ratio *= a + k;
    for (const auto& b : p.den) ratio /= b + k;
    term *= ratio;
  }
  return out;
}

BigRational hyp2f1_terminating(const BigRational& a, const BigRational& b, const BigRational& c, const BigRational& z) {
  return hyp_eval(HypParams{{a, b}, {c}, z});
}

BigRational hyp3f2_unit(const BigRational& a1, const BigRational& a2, const BigRational& a3, const BigRational& b1,
                        const BigRational& b2) {
  return hyp_eval(HypParams{{a1, a2, a3}, {b1, b2}, BigRational(1)});
}

BigRational hyp_eval_regularized(const HypParams& p, const std::vector<bool>& regularized) {
  if (regularized.size() != p.den.size()) fail(ErrorCode::domain, "regularization mask has the wrong length");
  for (size_t i = 0; i < p.den.size(); ++i)
    if (regularized[i] && !is_integer(p.den[i]))
      fail(ErrorCode::domain, "regularized lower parameter must be an integer");
  const int64_t n = termination_index(p);
  check_poles(p, n, &regularized);
  BigRational sum = 0;
  for (int64_t k = 0; k <= n; ++k) {
    BigRational term = rational_pow(p.z, k) / BigRational(factorial(k));
    for (const auto& a : p.num) term *= pochhammer(a, k);
    if (term == 0) continue;
    for (size_t i = 0; i < p.den.size(); ++i) {
      if (regularized[i]) {
        term *= inv_factorial_or_zero(to_i64(p.den[i]) + k - 1);
      } else {
        term /= pochhammer(p.den[i], k);
      }
      if (term == 0) break;
    }
    sum += term;
  }
  return sum;
}

std::pair<BigRational, HypParams> reverse_series(const HypParams& p) {
  const int64_t a = termination_index(p);
  check_poles(p, a, nullptr);
  if (p.z == 0) fail(ErrorCode::domain, "reversed argument undefined at z = 0");
  // Drop one numerator equal to -a; the rest are the (b) list.
  std::vector<BigRational> bs;
  bool dropped = false;
  for (const auto& x : p.num) {
    if (!dropped && x == BigRational(-a)) {
      dropped = true;
      continue;
    }
    bs.push_back(x);
  }
  BigRational pref = rational_pow(-p.z, a);
  for (const auto& b : bs) pref *= pochhammer(b, a);
  for (const auto& c : p.den) {
    const BigRational d = pochhammer(c, a);
    if (d == 0) fail(ErrorCode::pole, "lower parameter " + c.get_str() + " meets a pole before the series ends");
    pref /= d;
  }

  HypParams rev;
  rev.num.push_back(BigRational(-a));
  for (const auto& c : p.den) rev.num.push_back(1 - a - c);
  for (const auto& b : bs) rev.den.push_back(1 - a - b);
  const size_t A = bs.size();
  const size_t B = p.den.size();
  rev.z = ((A + B) % 2 == 0 ? BigRational(1) : BigRational(-1)) / p.z;
  if (pref == 0) fail(ErrorCode::domain, "reversal prefactor vanishes; an upper parameter terminates first");
  return {pref, rev};
}

namespace {

// 2F1(x, y; c; z) when it terminates, or when an upper parameter equals c and the series is the
// binomial (1-z)^(-other) with an integer exponent.
std::optional<BigRational> closed_2f1(const BigRational& x, const BigRational& y, const BigRational& c,
                                      const BigRational& z) {
  if (nonpositive_integer(x) || nonpositive_integer(y)) return hyp2f1_terminating(x, y, c, z);
  for (const auto& [same, other] : {std::pair{x, y}, std::pair{y, x}})
    if (same == c && is_integer(other)) {
      if (z == 1) fail(ErrorCode::pole, "binomial series at z = 1");
      return rational_pow(1 - z, -to_i64(other));
    }
  return std::nullopt;
}

}  // namespace

bool euler_transform_check(const BigRational& a, const BigRational& b, const BigRational& c, const BigRational& z) {
  BigRational e = c - a - b;
  if (!is_integer(e)) fail(ErrorCode::domain, "Euler prefactor exponent must be an integer");
  const auto lhs = closed_2f1(a, b, c, z);
  const auto rhs = closed_2f1(c - a, c - b, c, z);
  if (!lhs || !rhs) fail(ErrorCode::domain, "Euler transformation needs both sides in closed form");
  if (z == 1 && e < 0) fail(ErrorCode::pole, "Euler prefactor at z = 1");
  return *lhs == rational_pow(1 - z, to_i64(e)) * *rhs;
}

}  // namespace amx
