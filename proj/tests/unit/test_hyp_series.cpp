// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include "core/errors.hpp"
#include "doctest.h"
#include "gen.hpp"
#include "hyp/hypergeometric.hpp"
#include "series/multiseries.hpp"

using namespace amx;

TEST_CASE("pochhammer") {
  CHECK(pochhammer(rat(5, 2), 0) == 1);
  CHECK(pochhammer(rat(1), 4) == 24);
  CHECK(pochhammer(rat(-3), 5) == 0);
}

TEST_CASE("terminating 2F1") {
  CHECK(hyp2f1_terminating(rat(0), rat(7), rat(3), rat(1, 2)) == 1);
  CHECK(hyp2f1_terminating(rat(-2), rat(5), rat(5), rat(1, 2)) == rat(1, 4));
  CHECK(hyp2f1_terminating(rat(-1), rat(2), rat(3), rat(1, 4)) == rat(5, 6));
}

TEST_CASE("2F1(-n,b;b;z) collapses to (1-z)^n") {
  testgen::Gen g(21);
  for (int i = 0; i < 200; ++i) {
    const int n = static_cast<int>(g.range(0, 8));
    const BigRational b = g.rational(9, 5);
    if (is_integer(b) && b <= 0) continue;
    const BigRational z = g.rational(7, 7);
    BigRational expect = 1;
    for (int k = 0; k < n; ++k) expect *= 1 - z;
    CHECK(hyp2f1_terminating(rat(-n), b, b, z) == expect);
  }
}

TEST_CASE("3F2 at unit argument") {
  CHECK(hyp3f2_unit(rat(0), rat(4), rat(5), rat(1), rat(1)) == 1);
  CHECK(hyp3f2_unit(rat(-1), rat(1), rat(1), rat(1), rat(1)) == 0);
  CHECK(hyp3f2_unit(rat(-2), rat(-1), rat(3), rat(1), rat(2)) == 4);
}

TEST_CASE("Pfaff-Saalschutz property") {
  // 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)
  testgen::Gen g(22);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const int n = static_cast<int>(g.range(0, 6));
    const BigRational a = g.rational(6, 4), b = g.rational(6, 4), c = g.rational(6, 4) + rat(1, 5);
    const BigRational d = 1 + a + b - c - n;
    if (pochhammer(c, n) == 0 || pochhammer(d, n) == 0 || pochhammer(c - a - b, n) == 0) continue;
    const BigRational rhs = pochhammer(c - a, n) * pochhammer(c - b, n) / (pochhammer(c, n) * pochhammer(c - a - b, n));
    CHECK(hyp3f2_unit(rat(-n), a, b, c, d) == rhs);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("series reversal") {
  HypParams p{{rat(0), rat(3)}, {rat(2)}, rat(1, 2)};
  const auto [pre, rev] = reverse_series(p);
  CHECK(pre * hyp_eval(rev) == hyp_eval(p));
  HypParams q{{rat(-1), rat(2)}, {rat(3)}, rat(1, 2)};
  const auto [pre2, rev2] = reverse_series(q);
  CHECK(pre2 * hyp_eval(rev2) == rat(2, 3));
  CHECK(hyp_eval(q) == rat(2, 3));
}

TEST_CASE("series reversal property") {
  testgen::Gen g(23);
  for (int i = 0; i < 200; ++i) {
    const int n = static_cast<int>(g.range(0, 6));
    HypParams p{{rat(-n), g.rational(9, 4)}, {g.rational(9, 4) + rat(1, 7)}, g.rational(5, 5) + rat(1, 11)};
    if (p.z == 0) continue;
    try {
      const auto [pre, rev] = reverse_series(p);
      CHECK(pre * hyp_eval(rev) == hyp_eval(p));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::pole);
    }
  }
}

TEST_CASE("Euler transformation") {
  CHECK(euler_transform_check(rat(-1), rat(3), rat(2), rat(1, 2)));
  CHECK(euler_transform_check(rat(0), rat(0), rat(5), rat(1, 3)));
  // both sides equal 1 - z
  CHECK(euler_transform_check(rat(-1), rat(1), rat(1), rat(1, 3)));
  // neither side terminates
  CHECK_THROWS_AS(euler_transform_check(rat(1, 2), rat(1, 3), rat(11, 6), rat(1, 3)), Error);
  // non-integer prefactor exponent
  CHECK_THROWS_AS(euler_transform_check(rat(-1), rat(1, 2), rat(1), rat(1, 3)), Error);
}

namespace {
const std::vector<std::string> kXY{"x", "y"};
MultiSeries X(int deg) { return MultiSeries::variable(kXY, deg, 0); }
MultiSeries Y(int deg) { return MultiSeries::variable(kXY, deg, 1); }
MultiSeries one(int deg) { return MultiSeries::constant(kXY, deg, 1); }
}  // namespace

TEST_CASE("multiseries products and truncation") {
  const auto p = (one(2) + X(2)) * (one(2) - X(2));
  CHECK(p.coefficient({0, 0}) == 1);
  CHECK(p.coefficient({1, 0}) == 0);
  CHECK(p.coefficient({2, 0}) == -1);
  CHECK((X(1) * Y(1)).size() == 0);
  const auto s = (one(2) + X(2) + Y(2)).pow(2);
  CHECK(s.coefficient({1, 1}) == 2);
  CHECK(s.coefficient({2, 0}) == 1);
  CHECK(s.coefficient({0, 1}) == 2);
  CHECK(s.size() == 6);
}

TEST_CASE("multiseries exp and geometric") {
  const auto e = series_exp(X(3));
  CHECK(e.coefficient({2, 0}) == rat(1, 2));
  CHECK(e.coefficient({3, 0}) == rat(1, 6));
  CHECK(series_exp(MultiSeries(kXY, 3)) == one(3));
  const auto e2 = series_exp(X(2) + Y(2) * Y(2));
  CHECK(e2.coefficient({0, 2}) == 1);
  CHECK(e2.coefficient({2, 0}) == rat(1, 2));
  CHECK(e2.size() == 4);
  CHECK(series_geom(X(3), 1).coefficient({3, 0}) == 1);
  CHECK(series_geom(X(2), 2).coefficient({2, 0}) == 3);
  const auto g = series_geom(X(2) + Y(2), 2);
  CHECK(g.coefficient({1, 1}) == 6);
  CHECK(g.coefficient({0, 2}) == 3);
}

TEST_CASE("exp(a+b) = exp(a) exp(b) property") {
  testgen::Gen g(24);
  for (int i = 0; i < 20; ++i) {
    const int deg = static_cast<int>(g.range(1, 5));
    MultiSeries a(kXY, deg), b(kXY, deg);
    for (int k = 0; k < 3; ++k) {
      a.add_term({static_cast<int>(g.range(0, 2)), static_cast<int>(g.range(1, 2))}, g.rational(5, 4));
      b.add_term({static_cast<int>(g.range(1, 2)), static_cast<int>(g.range(0, 2))}, g.rational(5, 4));
    }
    CHECK(series_exp(a + b) == series_exp(a) * series_exp(b));
  }
}
