// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "core/halfint.hpp"
#include "core/sqrt_rational.hpp"
#include "su2/su2.hpp"

namespace amx {

struct Su3Irrep {
  int lambda = 0;
  int mu = 0;
  auto operator<=>(const Su3Irrep&) const = default;
  std::string str() const;
};

// (p, q, r) with 0 <= p <= lambda, 0 <= q <= mu, 0 <= r <= 2t.
struct Su3State {
  int p = 0, q = 0, r = 0;
  auto operator<=>(const Su3State&) const = default;
  std::string str() const;
};

struct Su3Labels {
  int y;       // three times the hypercharge
  HalfInt t;   // isospin
  HalfInt t0;  // isospin projection
};

// (lambda1, 0) x (lambda2, 0) -> (lambda3, mu3)
struct Su3Coupling {
  int lambda1 = 0, lambda2 = 0, mu3 = 0;
  int lambda3() const { return lambda1 + lambda2 - 2 * mu3; }
  int k1() const { return mu3; }
  int k2() const { return lambda2 - mu3; }
  int k3() const { return lambda1 - mu3; }
  Su3Irrep irrep1() const { return {lambda1, 0}; }
  Su3Irrep irrep2() const { return {lambda2, 0}; }
  Su3Irrep irrep3() const { return {lambda3(), mu3}; }
  auto operator<=>(const Su3Coupling&) const = default;
  std::string str() const;
};

int64_t dimension(const Su3Irrep& r);
bool state_valid(const Su3Irrep& r, const Su3State& s);
Su3Labels labels(const Su3Irrep& r, const Su3State& s);
// Inverse of labels; domain error if no state carries them.
Su3State state_from_labels(const Su3Irrep& r, int y, HalfInt t, HalfInt t0);
std::vector<Su3State> enumerate_states(const Su3Irrep& r);

// Normalization of the basis monomial x1^p x2^(l-p) y1^(m-q) y2^q xi^(t+t0) eta^(t-t0).
SqrtRational basis_norm(const Su3Irrep& r, const Su3State& s, Form form = Form::corrected);

std::vector<Su3Coupling> decompose(int lambda1, int lambda2);
// Validates a requested coupling; unsupported error for mu1 or mu2 nonzero.
Su3Coupling make_coupling(const Su3Irrep& a, const Su3Irrep& b, const Su3Irrep& c);

enum class NormReading { two_times_factorial, factorial_of_double };
SqrtRational invariant_norm(const Su3Coupling& c, NormReading reading = NormReading::two_times_factorial);

struct Conjugate {
  Su3Irrep irrep;
  Su3State state;
  int phase;
};
Conjugate r_conjugate(const Su3Irrep& r, const Su3State& s);

// Generating-function expansion coefficient C_k of t1^k1 t2^k2 t3^k3.
BigRational su3_gf_coefficient(const Su3Coupling& c);

using Su3Triple = std::tuple<Su3State, Su3State, Su3State>;
// Ground-truth 3j values for every state triple of the coupling (zeros omitted).
// max_degree < 0 picks the budget automatically; otherwise it must cover lambda1 + lambda2.
std::map<Su3Triple, SqrtRational> su3_oracle(const Su3Coupling& c, int max_degree = -1);

// Closed form with a single alternating sum and an SU(2) 3j factor.
SqrtRational su3_three_j(const Su3Coupling& c, const Su3State& a1, const Su3State& a2, const Su3State& a3,
                         Form form = Form::corrected);
// The alternating sum of the closed form, directly and as a regularized 3F2 at unit argument.
BigRational su3_bracket_sum(const Su3Coupling& c, HalfInt t1, HalfInt t3, int64_t T);
BigRational su3_bracket_hyp(const Su3Coupling& c, HalfInt t1, HalfInt t3, int64_t T);

// su3_three_j / 3j_SU2(t1 t2 t3; t01, t02, -t03), checked to be the same for every t0 choice.
SqrtRational isoscalar_factor(const Su3Coupling& c, int y1, HalfInt t1, int y2, HalfInt t2, int y3, HalfInt t3);

}  // namespace amx
