// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <map>
#include <string>
#include <string_view>

#include "core/rational.hpp"

namespace amx {

// Exact value prefactor * sqrt(radicand). Canonical form: radicand is a squarefree
// positive integer; zero is 0 * sqrt(1). Equality is representation identity.
class SqrtRational {
 public:
  SqrtRational() : pre_(0), rad_(1) {}
  SqrtRational(const BigRational& prefactor, const BigRational& radicand);
  static SqrtRational rational(const BigRational& q) { return SqrtRational(q, BigRational(1)); }
  // sign * sqrt(q) for q >= 0.
  static SqrtRational signed_sqrt(int sign, const BigRational& q);
  static SqrtRational parse(std::string_view text);

  const BigRational& prefactor() const { return pre_; }
  const BigInt& radicand() const { return rad_; }
  bool is_zero() const { return pre_ == 0; }
  int sign() const { return sgn(pre_); }
  // value squared, exactly
  BigRational square() const { return pre_ * pre_ * rad_; }
  bool is_rational() const { return rad_ == 1; }

  SqrtRational operator-() const;
  SqrtRational operator*(const BigRational& q) const;
  bool operator==(const SqrtRational& o) const { return pre_ == o.pre_ && rad_ == o.rad_; }

  // "[-]P*sqrt(R)" with P and R rationals whose numerator and denominator are each
  // square-free-reduced; "0" for zero. parse() inverts this exactly.
  std::string str() const;
  double to_double() const;

 private:
  BigRational pre_;
  BigInt rad_;
};

SqrtRational sqrt_mul(const SqrtRational& a, const SqrtRational& b);
// Requires equal canonical radicands unless one side is zero.
SqrtRational sqrt_add_compatible(const SqrtRational& a, const SqrtRational& b);
// Rounded to nearest at the requested precision, then to double.
double to_float(const SqrtRational& a, int precision_bits = 53);
// Decimal string with the given number of significant digits.
std::string to_decimal_string(const SqrtRational& a, int digits);

// n = s^2 * f with f square-free as far as trial division and a final square test can tell
// (exact whenever every prime factor above 65536 occurs at most once, or the cofactor is a square).
void split_square(const BigInt& n, BigInt& s, BigInt& f);

// Sums SqrtRationals grouped by radicand; the final value must be expressible with one radicand.
class SqrtAccumulator {
 public:
  void add(const SqrtRational& v);
  SqrtRational value() const;

 private:
  std::map<BigInt, BigRational> parts_;
};

}  // namespace amx
