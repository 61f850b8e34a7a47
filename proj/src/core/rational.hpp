// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "core/halfint.hpp"

namespace amx {

using BigInt = mpz_class;
using BigRational = mpq_class;  // mpq_class keeps lowest terms after every arithmetic op

inline BigRational rat(int64_t n, int64_t d = 1) {
  BigRational q(BigInt(static_cast<long>(n)), BigInt(static_cast<long>(d)));
  q.canonicalize();
  return q;
}
inline BigRational rat(HalfInt h) { return rat(h.twice(), 2); }

bool is_integer(const BigRational& q);
// Exact integer value; domain error if q is not integral or does not fit.
int64_t to_i64(const BigRational& q);
// "a/b" with the denominator omitted when it is 1.
std::string rat_str(const BigRational& q);
// Accepts "a", "-a", "a/b"; result canonicalized.
BigRational parse_rat(std::string_view text);

}  // namespace amx
