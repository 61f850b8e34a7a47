// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <cstdint>

#include "core/rational.hpp"

namespace amx {

// n! from a process-wide cache. The reference stays valid for the life of the process.
const BigInt& factorial(int64_t n);
// n!! with (-1)!! = 0!! = 1.
BigInt double_factorial(int64_t n);
// 1/n! as a rational; zero for negative n (the reciprocal-Gamma convention used by the
// regularized sums).
BigRational inv_factorial_or_zero(int64_t n);
BigInt binomial(int64_t n, int64_t k);

}  // namespace amx
