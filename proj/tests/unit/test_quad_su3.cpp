// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include <cmath>
#include <numbers>
#include <set>

#include "core/errors.hpp"
#include "doctest.h"
#include "gen.hpp"
#include "quad/integral_reps.hpp"
#include "quad/quadrature.hpp"
#include "su2/su2.hpp"
#include "su3/su3.hpp"

using namespace amx;
using std::numbers::pi;

namespace {
HalfInt h(int64_t twice) { return HalfInt::from_twice(twice); }
ThreeJArgs tj(int a, int b, int c, int ma, int mb, int mc) { return {h(a), h(b), h(c), h(ma), h(mb), h(mc)}; }
SixJArgs sj(int a, int b, int c, int d, int e, int f) { return {h(a), h(b), h(c), h(d), h(e), h(f)}; }
}  // namespace

TEST_CASE("gauss-legendre rule") {
  const auto r2 = gauss_legendre(2);
  CHECK(r2->nodes.size() == 2);
  CHECK(std::fabs(std::fabs(r2->nodes[0]) - 1 / std::sqrt(3.0)) < 1e-15);
  CHECK(r2->weights[0] == doctest::Approx(1.0));
  for (int n : {2, 5, 32, 96, 512}) {
    const auto r = gauss_legendre(n);
    double s = 0;
    for (double w : r->weights) s += w;
    CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
    // exact for degree 2n-1
    double m = 0;
    for (size_t i = 0; i < r->nodes.size(); ++i) m += r->weights[i] * std::pow(r->nodes[i], 2 * n - 2);
    CHECK(m == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(gauss_legendre(1), Error);
}

TEST_CASE("gauss-hermite rule") {
  const auto r = gauss_hermite(20);
  double s = 0, s2 = 0;
  for (size_t i = 0; i < r->nodes.size(); ++i) {
    s += r->weights[i];
    s2 += r->weights[i] * r->nodes[i] * r->nodes[i];
  }
  CHECK(s == doctest::Approx(std::sqrt(pi)).epsilon(1e-13));
  CHECK(s2 == doctest::Approx(std::sqrt(pi) / 2).epsilon(1e-13));
  for (int n : {120, 180, 200, 256}) {
    const auto big = gauss_hermite(n);
    double t = 0;
    for (size_t i = 0; i < big->nodes.size(); ++i) t += big->weights[i] * std::cos(big->nodes[i]);
    CHECK(t == doctest::Approx(std::sqrt(pi) * std::exp(-0.25)).epsilon(1e-13));
  }
}

TEST_CASE("3j integral representation") {
  CHECK(three_j_ir(tj(1, 1, 2, 1, 1, -2), 64) == doctest::Approx(-0.5773502691896).epsilon(1e-10));
  CHECK(three_j_ir(tj(2, 2, 0, 0, 0, 0), 64) == doctest::Approx(-0.5773502691896).epsilon(1e-10));
  CHECK(three_j_ir(tj(2, 2, 4, 0, 0, 0), 64) == doctest::Approx(0.3651483716701).epsilon(1e-10));
}

TEST_CASE("3j integral representation property") {
  testgen::Gen g(51);
  for (int i = 0; i < 100; ++i) {
    const ThreeJArgs a = g.three_j(6);
    const double exact = to_float(three_j(a));
    if (exact == 0) continue;
    CHECK(std::fabs(three_j_ir(a, 64) - exact) <= 1e-10);
  }
}

TEST_CASE("6j integral representation") {
  CHECK(std::fabs(six_j_ir(sj(2, 2, 2, 0, 2, 2), 96) + 1.0 / 3) <= 1e-8);
  CHECK(std::fabs(six_j_ir(sj(2, 2, 2, 2, 2, 2), 96) - to_float(six_j(sj(2, 2, 2, 2, 2, 2)))) <= 1e-8);
  CHECK_THROWS_AS(six_j_ir(sj(4, 0, 2, 0, 2, 2), 96), Error);
}

TEST_CASE("integral over three D matrices") {
  const ThreeJArgs x = tj(1, 1, 2, 1, 1, -2), y = tj(1, 1, 2, 1, -1, 0);
  const double ref = to_float(three_j(x)) * to_float(three_j(y));
  CHECK(ref == doctest::Approx(-0.2357022603955).epsilon(1e-12));
  CHECK(std::fabs(gaunt_triple_d({x.j1, x.j2, x.j3}, {x.m1, x.m2, x.m3}, {y.m1, y.m2, y.m3}, 32, 9) - ref) <= 1e-9);
  CHECK(std::fabs(gaunt_triple_d({h(0), h(0), h(0)}, {h(0), h(0), h(0)}, {h(0), h(0), h(0)}, 32, 3) - 1) <= 1e-12);
  CHECK(std::fabs(gaunt_triple_d({h(2), h(2), h(2)}, {h(2), h(2), h(0)}, {h(0), h(0), h(0)}, 32, 9)) <= 1e-12);
}

TEST_CASE("triple spherical-harmonic integral") {
  CHECK(triple_y_integral({0, 0, 0}, {0, 0, 0}, 32, 3) == doctest::Approx(1 / std::sqrt(4 * pi)).epsilon(1e-12));
  CHECK(std::fabs(triple_y_integral({1, 1, 1}, {1, -1, 0}, 32, 7)) <= 1e-12);
  const double c = to_float(three_j(tj(2, 2, 4, 0, 0, 0)));
  CHECK(std::fabs(triple_y_integral({1, 1, 2}, {0, 0, 0}, 32, 9) - std::sqrt(3 * 3 * 5 / (4 * pi)) * c * c) <= 1e-9);
}

TEST_CASE("su3 dimensions and states") {
  CHECK(dimension({0, 0}) == 1);
  CHECK(dimension({1, 0}) == 3);
  CHECK(dimension({1, 1}) == 8);
  for (int l = 0; l <= 4; ++l)
    for (int m = 0; m <= 4; ++m) CHECK(static_cast<int64_t>(enumerate_states({l, m}).size()) == dimension({l, m}));
  const auto s10 = enumerate_states({1, 0});
  int y1 = 0, ym2 = 0;
  for (const auto& s : s10) {
    const Su3Labels lb = labels({1, 0}, s);
    if (lb.y == 1) {
      ++y1;
      CHECK(lb.t == h(1));
    }
    if (lb.y == -2) {
      ++ym2;
      CHECK(lb.t == h(0));
    }
    CHECK(state_from_labels({1, 0}, lb.y, lb.t, lb.t0) == s);
  }
  CHECK(y1 == 2);
  CHECK(ym2 == 1);
}

TEST_CASE("su3 decomposition") {
  auto d11 = decompose(1, 1);
  REQUIRE(d11.size() == 2);
  int64_t total = 0;
  for (const auto& c : d11) total += dimension(c.irrep3());
  CHECK(total == 9);
  auto d22 = decompose(2, 2);
  std::vector<Su3Irrep> got;
  total = 0;
  for (const auto& c : d22) {
    got.push_back(c.irrep3());
    total += dimension(c.irrep3());
  }
  CHECK(total == 36);
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<Su3Irrep>{{0, 2}, {2, 1}, {4, 0}});
  CHECK(decompose(3, 0).size() == 1);
}

TEST_CASE("su3 unsupported coupling") {
  try {
    make_coupling({1, 1}, {1, 0}, {2, 1});
    FAIL("expected unsupported");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported);
  }
}

TEST_CASE("su3 trivial coupling") {
  const Su3Coupling c = make_coupling({0, 0}, {0, 0}, {0, 0});
  CHECK(su3_three_j(c, {}, {}, {}).square() == 1);
  const auto o = su3_oracle(c);
  REQUIRE(o.size() == 1);
  CHECK(o.begin()->second.square() == 1);
}

TEST_CASE("su3 closed form equals oracle and has unit norm") {
  for (int l1 = 0; l1 <= 2; ++l1)
    for (int l2 = 0; l2 <= 2; ++l2)
      for (const auto& c : decompose(l1, l2)) {
        const auto o = su3_oracle(c);
        BigRational norm = 0;
        for (const auto& s1 : enumerate_states(c.irrep1()))
          for (const auto& s2 : enumerate_states(c.irrep2()))
            for (const auto& s3 : enumerate_states(c.irrep3())) {
              const SqrtRational v = su3_three_j(c, s1, s2, s3);
              const auto it = o.find({s1, s2, s3});
              CHECK(v == (it == o.end() ? SqrtRational() : it->second));
              norm += v.square();
            }
        CHECK_MESSAGE(norm == 1, c.str());
      }
}

TEST_CASE("su3 oracle budget") {
  const Su3Coupling c = make_coupling({2, 0}, {2, 0}, {2, 1});
  CHECK_THROWS_AS(su3_oracle(c, 3), Error);
}

TEST_CASE("su3 bracket sum matches its hypergeometric form") {
  for (const auto& c : decompose(2, 3))
    for (int tt1 = 0; tt1 <= c.lambda1; ++tt1)
      for (int tt3 = 0; tt3 <= c.lambda3() + c.mu3; ++tt3) {
        const HalfInt t1 = h(tt1), t3 = h(tt3);
        for (int64_t T = 0; T <= 8; ++T) {
          BigRational a, b;
          bool ea = false, eb = false;
          try {
            a = su3_bracket_sum(c, t1, t3, T);
          } catch (const Error&) {
            ea = true;
          }
          try {
            b = su3_bracket_hyp(c, t1, t3, T);
          } catch (const Error&) {
            eb = true;
          }
          CHECK(ea == eb);
          if (!ea && !eb) CHECK(a == b);
        }
      }
}

TEST_CASE("su3 conjugation is an involution") {
  for (const Su3Irrep r : {Su3Irrep{0, 0}, Su3Irrep{1, 0}, Su3Irrep{2, 1}, Su3Irrep{3, 2}})
    for (const auto& s : enumerate_states(r)) {
      const Conjugate c1 = r_conjugate(r, s);
      CHECK(c1.irrep == Su3Irrep{r.mu, r.lambda});
      const Conjugate c2 = r_conjugate(c1.irrep, c1.state);
      CHECK(c2.state == s);
      CHECK(std::abs(c1.phase) == 1);
    }
  const Conjugate triv = r_conjugate({0, 0}, {});
  CHECK(triv.phase == 1);
}

TEST_CASE("su3 isoscalar factors") {
  const Su3Coupling anti = make_coupling({1, 0}, {1, 0}, {0, 1});
  const SqrtRational f1 = isoscalar_factor(anti, -2, h(0), 1, h(1), -1, h(1));
  const SqrtRational f2 = isoscalar_factor(anti, 1, h(1), -2, h(0), -1, h(1));
  CHECK(f1.square() == f2.square());
}

TEST_CASE("su3 isoscalar factors are normalized for every target (y, t)") {
  // sum over constituent (y, t) pairs of IF^2 * dim3 / (2 t3 + 1) = 1
  for (int l1 = 0; l1 <= 3; ++l1)
    for (int l2 = 0; l2 <= 3; ++l2)
      for (const auto& c : decompose(l1, l2)) {
        std::set<std::pair<int, int64_t>> ones, twos, threes;
        for (const auto& s : enumerate_states(c.irrep1())) ones.insert({labels(c.irrep1(), s).y, labels(c.irrep1(), s).t.twice()});
        for (const auto& s : enumerate_states(c.irrep2())) twos.insert({labels(c.irrep2(), s).y, labels(c.irrep2(), s).t.twice()});
        for (const auto& s : enumerate_states(c.irrep3())) threes.insert({labels(c.irrep3(), s).y, labels(c.irrep3(), s).t.twice()});
        for (const auto& [y3, t3] : threes) {
          BigRational sum = 0;
          for (const auto& [y1, t1] : ones)
            for (const auto& [y2, t2] : twos) {
              if (y1 + y2 != y3 || !triangle_ok(h(t1), h(t2), h(t3))) continue;
              sum += isoscalar_factor(c, y1, h(t1), y2, h(t2), y3, h(t3)).square();
            }
          CHECK_MESSAGE(sum * dimension(c.irrep3()) / (t3 + 1) == 1, c.str(), " y3=", y3, " 2t3=", t3);
        }
      }
}
