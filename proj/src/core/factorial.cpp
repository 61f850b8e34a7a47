// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include "core/factorial.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

#include "core/errors.hpp"

namespace amx {

namespace {

struct FactorialCache {
  std::shared_mutex mu;
  std::deque<BigInt> values{BigInt(1)};  // deque: growth never moves existing entries
};

FactorialCache& cache() {
  static FactorialCache c;
  return c;
}

}  // namespace

const BigInt& factorial(int64_t n) {
  if (n < 0) fail(ErrorCode::domain, "factorial of negative integer " + std::to_string(n));
  auto& c = cache();
  {
    std::shared_lock lock(c.mu);
    if (static_cast<size_t>(n) < c.values.size()) return c.values[static_cast<size_t>(n)];
  }
  std::unique_lock lock(c.mu);
  while (c.values.size() <= static_cast<size_t>(n)) {
    BigInt next = c.values.back() * static_cast<unsigned long>(c.values.size());
    c.values.push_back(std::move(next));
  }
  return c.values[static_cast<size_t>(n)];
}

BigInt double_factorial(int64_t n) {
  if (n < -1) fail(ErrorCode::domain, "double factorial needs n >= -1, got " + std::to_string(n));
  if (n <= 0) return 1;
  if (n % 2 == 0) {
    BigInt p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(n / 2));
    return p2 * factorial(n / 2);
  }
  int64_t h = (n - 1) / 2;
  BigInt p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(h));
  return factorial(n) / (p2 * factorial(h));
}

BigRational inv_factorial_or_zero(int64_t n) {
  if (n < 0) return 0;
  return BigRational(BigInt(1), factorial(n));
}

BigInt binomial(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace amx
