// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include "series/multiseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"
#include "core/factorial.hpp"

namespace amx {

MultiSeries::MultiSeries(std::vector<std::string> vars, int max_degree)
    : vars_(std::move(vars)), max_degree_(max_degree) {
  if (max_degree < 0) fail(ErrorCode::domain, "negative truncation degree");
}

MultiSeries MultiSeries::constant(std::vector<std::string> vars, int max_degree, const BigRational& c) {
  MultiSeries s(std::move(vars), max_degree);
  s.add_term(Exponents(s.vars_.size(), 0), c);
  return s;
}

MultiSeries MultiSeries::variable(std::vector<std::string> vars, int max_degree, size_t index, const BigRational& c) {
  MultiSeries s(std::move(vars), max_degree);
  if (index >= s.vars_.size()) fail(ErrorCode::domain, "variable index out of range");
  Exponents e(s.vars_.size(), 0);
  e[index] = 1;
  s.add_term(e, c);
  return s;
}

int MultiSeries::degree_of(const Exponents& e) const {
  if (e.size() != vars_.size()) fail(ErrorCode::domain, "exponent tuple length does not match the variable list");
  int d = 0;
  for (int x : e) {
    if (x < 0) fail(ErrorCode::domain, "negative exponent");
    d += x;
  }
  return d;
}

void MultiSeries::add_term(const Exponents& e, const BigRational& c) {
  if (degree_of(e) > max_degree_ || c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigRational MultiSeries::coefficient(const Exponents& e) const {
  if (degree_of(e) > max_degree_) fail(ErrorCode::domain, "requested coefficient lies beyond the truncation degree");
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

BigRational MultiSeries::constant_term() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? BigRational(0) : it->second;
}

void MultiSeries::check_compatible(const MultiSeries& o) const {
  if (vars_ != o.vars_) fail(ErrorCode::domain, "series have different variable lists");
}

MultiSeries MultiSeries::operator+(const MultiSeries& o) const {
  check_compatible(o);
  MultiSeries out(vars_, std::min(max_degree_, o.max_degree_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MultiSeries MultiSeries::operator-() const { return scaled(BigRational(-1)); }

MultiSeries MultiSeries::operator-(const MultiSeries& o) const { return *this + (-o); }

MultiSeries MultiSeries::scaled(const BigRational& c) const {
  MultiSeries out(vars_, max_degree_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

MultiSeries MultiSeries::operator*(const MultiSeries& o) const {
  check_compatible(o);
  const int D = std::min(max_degree_, o.max_degree_);
  MultiSeries out(vars_, D);
  struct Entry {
    const Exponents* e;
    const BigRational* c;
    int deg;
  };
  auto collect = [&](const MultiSeries& s) {
    std::vector<Entry> v;
    v.reserve(s.terms_.size());
    for (const auto& [e, c] : s.terms_) v.push_back({&e, &c, std::accumulate(e.begin(), e.end(), 0)});
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.deg < b.deg; });
    return v;
  };
  const auto lhs = collect(*this);
  const auto rhs = collect(o);
  Exponents e(vars_.size());
  BigRational prod;
  for (const auto& a : lhs) {
    for (const auto& b : rhs) {
      if (a.deg + b.deg > D) break;
      for (size_t i = 0; i < e.size(); ++i) e[i] = (*a.e)[i] + (*b.e)[i];
      prod = *a.c * *b.c;
      auto [it, fresh] = out.terms_.try_emplace(e, prod);
      if (!fresh) it->second += prod;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

MultiSeries MultiSeries::pow(int k) const {
  if (k < 0) fail(ErrorCode::domain, "negative series power");
  MultiSeries result = constant(vars_, max_degree_, BigRational(1));
  MultiSeries base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

MultiSeries MultiSeries::truncated(int degree) const {
  MultiSeries out(vars_, std::min(degree, max_degree_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

bool MultiSeries::operator==(const MultiSeries& o) const {
  return vars_ == o.vars_ && max_degree_ == o.max_degree_ && terms_ == o.terms_;
}

std::string MultiSeries::str() const {
  std::vector<std::pair<Exponents, BigRational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  if (sorted.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

MultiSeries series_exp(const MultiSeries& f) {
  if (f.constant_term() != 0) fail(ErrorCode::domain, "exp needs a series without constant term");
  const int D = f.max_degree();
  MultiSeries sum = MultiSeries::constant(f.vars(), D, BigRational(1));
  MultiSeries power = sum;
  for (int k = 1; k <= D; ++k) {
    power = power * f;
    if (power.size() == 0) break;
    sum = sum + power.scaled(BigRational(1) / BigRational(factorial(k)));
  }
  return sum;
}

MultiSeries series_geom(const MultiSeries& f, int power) {
  if (power < 1) fail(ErrorCode::domain, "geometric power must be positive");
  if (f.constant_term() != 0) fail(ErrorCode::domain, "geometric series needs a series without constant term");
  const int D = f.max_degree();
  MultiSeries sum = MultiSeries::constant(f.vars(), D, BigRational(1));
  MultiSeries fk = sum;
  for (int k = 1; k <= D; ++k) {
    fk = fk * f;
    if (fk.size() == 0) break;
    sum = sum + fk.scaled(BigRational(binomial(power + k - 1, k)));
  }
  return sum;
}

}  // namespace amx
