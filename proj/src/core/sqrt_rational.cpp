// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include "core/sqrt_rational.hpp"

#include <mpfr.h>

#include <vector>

#include "core/errors.hpp"

namespace amx {

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long limit = 65536;
    std::vector<bool> composite(limit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_t v;
};

void value_into(const SqrtRational& a, Mpfr& out) {
  BigRational sq = a.square();
  mpfr_set_q(out.v, sq.get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt(out.v, out.v, MPFR_RNDN);
  if (a.sign() < 0) mpfr_neg(out.v, out.v, MPFR_RNDN);
}

}  // namespace

void split_square(const BigInt& n, BigInt& s, BigInt& f) {
  s = 1;
  f = 1;
  BigInt rest = n;
  if (rest <= 1) {
    f = rest;
    return;
  }
  for (unsigned long p : small_primes()) {
    if (rest == 1) break;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) f *= p;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      BigInt r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      s *= r;
    } else {
      f *= rest;
    }
  }
}

SqrtRational::SqrtRational(const BigRational& prefactor, const BigRational& radicand) {
  if (radicand < 0) fail(ErrorCode::domain, "negative radicand " + rat_str(radicand));
  if (prefactor == 0 || radicand == 0) {
    pre_ = 0;
    rad_ = 1;
    return;
  }
  BigInt sa, fa, sb, fb;
  split_square(radicand.get_num(), sa, fa);
  split_square(radicand.get_den(), sb, fb);
  // sqrt(a/b) = (sa / (sb * fb)) * sqrt(fa * fb)
  pre_ = prefactor * BigRational(sa, sb * fb);
  pre_.canonicalize();
  rad_ = fa * fb;
}

SqrtRational SqrtRational::signed_sqrt(int sign, const BigRational& q) {
  return SqrtRational(BigRational(sign >= 0 ? 1 : -1), q);
}

SqrtRational SqrtRational::operator-() const {
  SqrtRational r = *this;
  r.pre_ = -r.pre_;
  return r;
}

SqrtRational SqrtRational::operator*(const BigRational& q) const {
  if (q == 0) return SqrtRational();
  SqrtRational r = *this;
  r.pre_ *= q;
  return r;
}

std::string SqrtRational::str() const {
  if (is_zero()) return "0";
  BigRational v = square();
  BigInt a, n, b, d;
  split_square(v.get_num(), a, n);
  split_square(v.get_den(), b, d);
  BigRational p(a, b);
  p.canonicalize();
  BigRational r(n, d);
  r.canonicalize();
  return (sign() < 0 ? "-" : "") + rat_str(p) + "*sqrt(" + rat_str(r) + ")";
}

SqrtRational SqrtRational::parse(std::string_view text) {
  if (text == "0") return SqrtRational();
  auto star = text.find("*sqrt(");
  if (star == std::string_view::npos) return rational(parse_rat(text));
  if (text.back() != ')') fail(ErrorCode::parse, "malformed exact value '" + std::string(text) + "'");
  BigRational p = parse_rat(text.substr(0, star));
  std::string_view inner = text.substr(star + 6, text.size() - star - 7);
  BigRational r = parse_rat(inner);
  if (r < 0) fail(ErrorCode::parse, "negative radicand in '" + std::string(text) + "'");
  return SqrtRational(p, r);
}

double SqrtRational::to_double() const { return to_float(*this, 53); }

SqrtRational sqrt_mul(const SqrtRational& a, const SqrtRational& b) {
  if (a.is_zero() || b.is_zero()) return SqrtRational();
  if (a.radicand() == b.radicand()) return SqrtRational::rational(a.prefactor() * b.prefactor() * BigRational(a.radicand()));
  return SqrtRational(a.prefactor() * b.prefactor(), BigRational(a.radicand() * b.radicand()));
}

SqrtRational sqrt_add_compatible(const SqrtRational& a, const SqrtRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.radicand() != b.radicand())
    fail(ErrorCode::incompatible_radicand,
         "cannot add sqrt(" + a.radicand().get_str() + ") and sqrt(" + b.radicand().get_str() + ") terms");
  return SqrtRational(a.prefactor() + b.prefactor(), BigRational(a.radicand()));
}

double to_float(const SqrtRational& a, int precision_bits) {
  if (precision_bits < 53) fail(ErrorCode::domain, "precision below 53 bits");
  if (a.is_zero()) return 0.0;
  Mpfr x(precision_bits);
  value_into(a, x);
  return mpfr_get_d(x.v, MPFR_RNDN);
}

std::string to_decimal_string(const SqrtRational& a, int digits) {
  if (a.is_zero()) return "0";
  Mpfr x(static_cast<mpfr_prec_t>(digits * 3.33) + 16);
  value_into(a, x);
  std::vector<char> buf(static_cast<size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, x.v);
  return std::string(buf.data());
}

void SqrtAccumulator::add(const SqrtRational& v) {
  if (v.is_zero()) return;
  parts_[v.radicand()] += v.prefactor();
}

SqrtRational SqrtAccumulator::value() const {
  SqrtRational out;
  bool seen = false;
  for (const auto& [rad, coef] : parts_) {
    if (coef == 0) continue;
    if (seen) fail(ErrorCode::incompatible_radicand, "sum does not reduce to a single radicand");
    out = SqrtRational(coef, BigRational(rad));
    seen = true;
  }
  return out;
}

}  // namespace amx
