// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include <atomic>
#include <cmath>
#include <vector>

#include "core/errors.hpp"
#include "core/factorial.hpp"
#include "core/halfint.hpp"
#include "core/parallel.hpp"
#include "core/rational.hpp"
#include "core/sqrt_rational.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace amx;

namespace {
SqrtRational sr(int64_t pn, int64_t pd, int64_t rn, int64_t rd = 1) { return SqrtRational(rat(pn, pd), rat(rn, rd)); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ok;
}
}  // namespace

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(binomial(6, 2) == 15);
  CHECK(inv_factorial_or_zero(-1) == 0);
  CHECK(inv_factorial_or_zero(3) == rat(1, 6));
  CHECK(code_of([] { factorial(-1); }) == ErrorCode::domain);
}

TEST_CASE("factorial matches iterative product") {
  BigInt p = 1;
  for (int n = 1; n <= 60; ++n) {
    p *= n;
    CHECK(factorial(n) == p);
  }
}

TEST_CASE("half-integer parsing") {
  CHECK(HalfInt::parse("3").twice() == 6);
  CHECK(HalfInt::parse("-3/2").twice() == -3);
  CHECK(HalfInt::parse("0").twice() == 0);
  CHECK(HalfInt::parse("1/2").str() == "1/2");
  for (const char* bad : {"", "1.5", "2/4", "4/2", "1/3", "x", "1/", "/2", " 1"})
    CHECK_MESSAGE(code_of([&] { HalfInt::parse(bad); }) == ErrorCode::parse, bad);
}

TEST_CASE("half-integer round trip property") {
  testgen::Gen g(11);
  for (int i = 0; i < 500; ++i) {
    const HalfInt h = HalfInt::from_twice(g.range(-1000, 1000));
    CHECK(HalfInt::parse(h.str()) == h);
  }
}

TEST_CASE("sqrt-rational products") {
  CHECK(sqrt_mul(sr(1, 1, 2), sr(1, 1, 2)) == sr(2, 1, 1));
  CHECK(sqrt_mul(sr(1, 1, 2), sr(1, 1, 3)) == sr(1, 1, 6));
  CHECK(sqrt_mul(sr(1, 3, 2), sr(3, 2, 8)) == sr(2, 1, 1));
}

TEST_CASE("sqrt-rational sums") {
  CHECK(sqrt_add_compatible(sr(1, 1, 3), sr(2, 1, 3)) == sr(3, 1, 3));
  CHECK(sqrt_add_compatible(sr(5, 1, 7), SqrtRational()) == sr(5, 1, 7));
  CHECK(code_of([] { sqrt_add_compatible(sr(1, 1, 2), sr(1, 1, 3)); }) == ErrorCode::incompatible_radicand);
}

TEST_CASE("sqrt-rational to float") {
  CHECK(to_float(sr(1, 1, 1)) == 1.0);
  CHECK(to_float(sr(-1, 1, 1, 3)) == doctest::Approx(-0.5773502691896258).epsilon(1e-15));
  CHECK(to_float(SqrtRational()) == 0.0);
}

TEST_CASE("sqrt-rational rendering") {
  CHECK(sr(-1, 1, 1, 3).str() == "-1*sqrt(1/3)");
  CHECK(SqrtRational().str() == "0");
  CHECK(sr(-1, 3, 2).str() == "-1/3*sqrt(2)");
  CHECK(SqrtRational::parse("-1/3*sqrt(2)") == sr(-1, 3, 2));
  CHECK(code_of([] { SqrtRational::parse("sqrt(2)*3"); }) == ErrorCode::parse);
}

TEST_CASE("sqrt-rational parse round trip property") {
  testgen::Gen g(12);
  for (int i = 0; i < 500; ++i) {
    const SqrtRational v(g.rational(50, 50), abs(g.rational(60, 60)) + rat(1, 7));
    CHECK(SqrtRational::parse(v.str()) == v);
    CHECK(v.square() == v.prefactor() * v.prefactor() * v.radicand());
  }
}

TEST_CASE("sqrt accumulator groups radicands") {
  SqrtAccumulator acc;
  acc.add(sr(1, 2, 2));
  acc.add(sr(1, 2, 8));
  acc.add(sr(-3, 2, 2));
  CHECK(acc.value().is_zero());
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](size_t i) { hits[i]++; });
  for (auto& h : hits) CHECK(h.load() == 1);
  CHECK(worker_count() >= 1);
}

TEST_CASE("parallel_for rethrows") {
  CHECK_THROWS_AS(parallel_for(10, [](size_t i) { if (i == 3) fail(ErrorCode::domain, "x"); }), Error);
}
