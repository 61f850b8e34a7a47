// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <utility>
#include <vector>

#include "core/rational.hpp"

namespace amx {

BigRational pochhammer(const BigRational& a, int64_t k);

struct HypParams {
  std::vector<BigRational> num;
  std::vector<BigRational> den;
  BigRational z;
};

// Smallest n with some numerator parameter equal to -n; domain error if none.
int64_t termination_index(const HypParams& p);
// Exact terminating sum of n+1 terms. Pole error if a lower parameter -N has N < n.
BigRational hyp_eval(const HypParams& p);

// Coefficients c_k with value = sum_k c_k z^k (the argument in p is ignored). Same pole
// rules as hyp_eval; used where z is only known in floating point.
std::vector<BigRational> hyp_term_coefficients(const HypParams& p);

BigRational hyp2f1_terminating(const BigRational& a, const BigRational& b, const BigRational& c, const BigRational& z);
BigRational hyp3f2_unit(const BigRational& a1, const BigRational& a2, const BigRational& a3, const BigRational& b1,
                        const BigRational& b2);

// Terminating sum where flagged lower parameters b contribute 1/(b+k-1)! instead of 1/(b)_k,
// with 1/(negative)! = 0. Flagged parameters must be integers. This is the finite Racah-type
// sum whose ordinary form carries a removable 0/0.
BigRational hyp_eval_regularized(const HypParams& p, const std::vector<bool>& regularized);

// Returns (prefactor, reversed) with value(p) = prefactor * value(reversed), summing the
// same terms from the last to the first.
std::pair<BigRational, HypParams> reverse_series(const HypParams& p);

// Both sides of F(a,b;c;z) = (1-z)^(c-a-b) F(c-a,c-b;c;z) evaluated exactly.
bool euler_transform_check(const BigRational& a, const BigRational& b, const BigRational& c, const BigRational& z);

}  // namespace amx
