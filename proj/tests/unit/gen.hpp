// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
//
// Small seeded generators for property tests.
#pragma once

#include <cstdint>
#include <random>

#include "core/halfint.hpp"
#include "core/rational.hpp"
#include "su2/su2.hpp"

namespace amx::testgen {

class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  int64_t range(int64_t lo, int64_t hi) { return std::uniform_int_distribution<int64_t>(lo, hi)(rng_); }

  BigRational rational(int64_t num_bound, int64_t den_bound) {
    return rat(range(-num_bound, num_bound), range(1, den_bound));
  }

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  // Admissible 3j arguments with every 2j <= max_twice. Retries until triangle and m rules hold.
  ThreeJArgs three_j(int max_twice) {
    for (;;) {
      const int64_t a = range(0, max_twice), b = range(0, max_twice), c = range(0, max_twice);
      if ((a + b + c) % 2 != 0 || c > a + b || a > b + c || b > a + c) continue;
      const int64_t ma = -a + 2 * range(0, a), mb = -b + 2 * range(0, b), mc = -ma - mb;
      if (mc < -c || mc > c) continue;
      auto h = HalfInt::from_twice;
      return {h(a), h(b), h(c), h(ma), h(mb), h(mc)};
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace amx::testgen
