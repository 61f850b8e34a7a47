// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include <cmath>

#include "core/errors.hpp"
#include "doctest.h"
#include "gen.hpp"
#include "su2/su2.hpp"
#include "verify/sweeps.hpp"

using namespace amx;

namespace {
HalfInt h(int64_t twice) { return HalfInt::from_twice(twice); }
// Arguments given as twice their value.
ThreeJArgs tj(int a, int b, int c, int ma, int mb, int mc) { return {h(a), h(b), h(c), h(ma), h(mb), h(mc)}; }
SixJArgs sj(int a, int b, int c, int d, int e, int f) { return {h(a), h(b), h(c), h(d), h(e), h(f)}; }
SqrtRational val(const char* s) { return SqrtRational::parse(s); }
}  // namespace

TEST_CASE("triangle rule") {
  CHECK(triangle_ok(h(1), h(1), h(2)));
  CHECK_FALSE(triangle_ok(h(1), h(1), h(1)));
  CHECK_FALSE(triangle_ok(h(6), h(2), h(2)));
}

TEST_CASE("oracle 3j examples") {
  CHECK(oracle_three_j(tj(0, 0, 0, 0, 0, 0)) == val("1"));
  CHECK(oracle_three_j(tj(1, 1, 2, 1, 1, -2)) == val("-1*sqrt(1/3)"));
  CHECK(oracle_three_j(tj(2, 2, 2, 0, 0, 0)).is_zero());
}

TEST_CASE("closed 3j examples") {
  for (auto m : {ThreeJMethod::vdw, ThreeJMethod::wigner, ThreeJMethod::oracle, ThreeJMethod::automatic}) {
    CHECK(three_j(tj(2, 2, 0, 0, 0, 0), m) == val("-1*sqrt(1/3)"));
    CHECK(three_j(tj(1, 1, 2, 1, 1, -2), m) == val("-1*sqrt(1/3)"));
    CHECK(three_j(tj(2, 2, 4, 2, 2, -4), m) == val("1*sqrt(1/5)"));
    CHECK(three_j(tj(2, 2, 4, 0, 0, 0), m) == val("1*sqrt(2/15)"));
    CHECK(three_j(tj(2, 2, 2, 2, 2, 2), m).is_zero());
    CHECK(three_j(tj(0, 0, 0, 0, 0, 0), m) == val("1"));
  }
}

TEST_CASE("special 3j") {
  CHECK(three_j_special(h(0), h(0), h(0)) == val("1"));
  CHECK(three_j_special(h(1), h(1), h(2)) == val("1*sqrt(1/6)"));
  CHECK(three_j_special(h(2), h(2), h(2)) == val("1*sqrt(1/6)"));
  for (const auto& a : three_j_tuples(6)) {
    if (a.m1 != a.j1 || a.m2 != -a.j2) continue;
    CHECK(three_j_special(a.j1, a.j2, a.j3) == oracle_three_j(a));
  }
}

TEST_CASE("vdw, wigner and oracle agree on random tuples") {
  testgen::Gen g(31);
  for (int i = 0; i < 300; ++i) {
    const ThreeJArgs a = g.three_j(9);
    const SqrtRational o = oracle_three_j(a);
    CHECK_MESSAGE(three_j_vdw(a) == o, a.str());
    CHECK_MESSAGE(three_j_wigner(a) == o, a.str());
  }
}

TEST_CASE("Regge map preserves values") {
  CHECK(regge_map(tj(0, 0, 0, 0, 0, 0)) == tj(0, 0, 0, 0, 0, 0));
  const ThreeJArgs img = regge_map(tj(1, 1, 2, 1, 1, -2));
  CHECK(three_j(img).square() == rat(1, 3));
  testgen::Gen g(32);
  for (int i = 0; i < 300; ++i) {
    const ThreeJArgs a = g.three_j(8);
    CHECK(three_j(regge_map(a)) == three_j(a));
    CHECK(from_regge_square(regge_square(a)) == a);
  }
}

TEST_CASE("classical symmetries carry the stated phase") {
  testgen::Gen g(33);
  for (int i = 0; i < 300; ++i) {
    const ThreeJArgs a = g.three_j(8);
    for (auto op : {Symmetry::cyclic, Symmetry::swap12, Symmetry::negate_m}) {
      const auto [b, phase] = classical_symmetry(a, op);
      CHECK(three_j(b) == (phase > 0 ? three_j(a) : -three_j(a)));
    }
  }
}

TEST_CASE("orthogonality sums") {
  CHECK(orthogonality_sum(h(1), h(1), h(2), h(2), h(0), h(0)) == 1);
  CHECK(orthogonality_sum(h(1), h(1), h(2), h(0), h(0), h(0)) == 0);
  CHECK(orthogonality_sum(h(0), h(0), h(0), h(0), h(0), h(0)) == 1);
}

TEST_CASE("6j examples") {
  CHECK(six_j(sj(2, 2, 2, 0, 2, 2)) == val("-1/3"));
  CHECK(six_j(sj(4, 0, 2, 0, 2, 2)).is_zero());
  CHECK(six_j(sj(2, 2, 2, 2, 2, 2)) == six_j_triple_sum(sj(2, 2, 2, 2, 2, 2)));
  CHECK(six_j(sj(2, 2, 2, 2, 2, 2)) == val("1/6"));
}

TEST_CASE("6j with a zero entry reduces") {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c) {
        if (!triangle_ok(h(a), h(b), h(c))) continue;
        const int64_t J = (a + b + c) / 2;
        const SqrtRational expect = SqrtRational::signed_sqrt(J % 2 == 0 ? 1 : -1, rat(1, (b + 1) * (c + 1)));
        CHECK(six_j(sj(a, b, c, 0, c, b)) == expect);
      }
}

TEST_CASE("6j tetrahedral images and triple sum on random arguments") {
  const auto all = six_j_tuples(4, true);
  testgen::Gen g(34);
  for (int i = 0; i < 100; ++i) {
    const SixJArgs& a = all[static_cast<size_t>(g.range(0, static_cast<int64_t>(all.size()) - 1))];
    const SqrtRational v = six_j(a);
    CHECK(v == six_j_triple_sum(a));
    for (const auto& b : tetrahedral_images(a)) CHECK(six_j(b) == v);
  }
}

TEST_CASE("clebsch-gordan completeness") {
  // sum over J,M of <j1 m1 j2 m2|J M>^2 = 1
  for (int m1 = -2; m1 <= 2; m1 += 2)
    for (int m2 = -1; m2 <= 1; m2 += 2) {
      BigRational s = 0;
      for (int J = 1; J <= 3; J += 2) {
        if (std::abs(m1 + m2) > J) continue;
        s += clebsch_gordan(h(2), h(m1), h(1), h(m2), h(J), h(m1 + m2)).square();
      }
      CHECK(s == 1);
    }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(three_j_special(h(1), h(1), h(1)), Error);
  CHECK(three_j(tj(1, 1, 2, 3, -1, -2)).is_zero());
}
