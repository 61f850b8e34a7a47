// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "core/rational.hpp"

namespace amx {

using Exponents = std::vector<int>;

struct ExponentsHash {
  size_t operator()(const Exponents& e) const noexcept {
    size_t h = 0xcbf29ce484222325ull;
    for (int x : e) h = (h ^ static_cast<size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};

// Truncated power series in several variables with exact coefficients, truncated by
// total degree. Zero coefficients are never stored.
class MultiSeries {
 public:
  using Terms = std::unordered_map<Exponents, BigRational, ExponentsHash>;

  MultiSeries(std::vector<std::string> vars, int max_degree);

  static MultiSeries constant(std::vector<std::string> vars, int max_degree, const BigRational& c);
  static MultiSeries variable(std::vector<std::string> vars, int max_degree, size_t index,
                              const BigRational& c = BigRational(1));

  const std::vector<std::string>& vars() const { return vars_; }
  int max_degree() const { return max_degree_; }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  // Adds c * monomial; dropped if beyond the truncation degree.
  void add_term(const Exponents& e, const BigRational& c);
  BigRational coefficient(const Exponents& e) const;
  BigRational constant_term() const;

  MultiSeries operator+(const MultiSeries& o) const;
  MultiSeries operator-(const MultiSeries& o) const;
  MultiSeries operator*(const MultiSeries& o) const;
  MultiSeries operator-() const;
  MultiSeries scaled(const BigRational& c) const;
  MultiSeries pow(int k) const;
  // Same series viewed at a lower truncation degree.
  MultiSeries truncated(int degree) const;

  bool operator==(const MultiSeries& o) const;
  std::string str() const;

 private:
  void check_compatible(const MultiSeries& o) const;
  int degree_of(const Exponents& e) const;

  std::vector<std::string> vars_;
  int max_degree_;
  Terms terms_;
};

// exp(f) for f without constant term.
MultiSeries series_exp(const MultiSeries& f);
// (1 - f)^(-power) for f without constant term and power >= 1.
MultiSeries series_geom(const MultiSeries& f, int power);

}  // namespace amx
