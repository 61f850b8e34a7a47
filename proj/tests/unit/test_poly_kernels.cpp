// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "doctest.h"
#include "gen.hpp"
#include "hyp/hypergeometric.hpp"
#include "kernels/kernels.hpp"
#include "poly/special.hpp"

using namespace amx;
using std::numbers::pi;

namespace {
HalfInt h(int64_t twice) { return HalfInt::from_twice(twice); }
}  // namespace

TEST_CASE("hermite, legendre, gegenbauer, jacobi values") {
  CHECK(hermite(0, rat(5, 7)) == 1);
  CHECK(hermite(1, rat(3, 2)) == 3);
  CHECK(hermite(3, rat(1)) == -4);
  CHECK(legendre(0, rat(2, 9)) == 1);
  CHECK(legendre(1, rat(2, 9)) == rat(2, 9));
  CHECK(legendre(2, rat(1, 2)) == rat(-1, 8));
  CHECK(gegenbauer(0, 1, rat(1, 3)) == 1);
  CHECK(gegenbauer(1, 1, rat(1, 3)) == rat(2, 3));
  CHECK(gegenbauer(2, 1, rat(0)) == -1);
  CHECK(jacobi(0, 2, 3, rat(1, 5)) == 1);
  CHECK(jacobi(1, 0, 0, rat(1, 5)) == rat(1, 5));
  CHECK(jacobi(2, 1, 1, rat(0)) == 3 * hyp2f1_terminating(rat(-2), rat(5), rat(2), rat(1, 2)));
  CHECK(jacobi(2, 1, 1, rat(0)) == rat(-3, 4));
}

TEST_CASE("jacobi realizations agree") {
  testgen::Gen g(41);
  for (int i = 0; i < 300; ++i) {
    const int n = static_cast<int>(g.range(0, 8)), a = static_cast<int>(g.range(0, 4)),
              b = static_cast<int>(g.range(0, 4));
    const BigRational x = g.rational(6, 6);
    const BigRational ref = jacobi(n, a, b, x);
    CHECK(jacobi_cos_form(n, a, b, x) == ref);
    CHECK(jacobi_general(n, a, b, x) == ref);
    CHECK(jacobi_eval(n, a, b, x.get_d()) == doctest::Approx(ref.get_d()).epsilon(1e-9));
  }
}

TEST_CASE("legendre equals jacobi(0,0); gegenbauer matches its recurrence") {
  testgen::Gen g(42);
  for (int i = 0; i < 200; ++i) {
    const int l = static_cast<int>(g.range(0, 10));
    const BigRational x = g.rational(9, 9);
    CHECK(legendre(l, x) == jacobi(l, 0, 0, x));
    const int m = static_cast<int>(g.range(1, 3));
    CHECK(gegenbauer(l, m, x) == gegenbauer_recurrence(l, m, x));
  }
}

TEST_CASE("little d") {
  for (double th : {0.0, 0.4, 2.1}) {
    CHECK(wigner_little_d(h(1), h(1), h(1), th) == doctest::Approx(std::cos(th / 2)));
    CHECK(wigner_little_d(h(2), h(0), h(0), th) == doctest::Approx(std::cos(th)));
  }
  CHECK(wigner_little_d(h(2), h(2), h(0), 0.0) == doctest::Approx(0.0));
  CHECK(wigner_little_d(h(4), h(2), h(2), 0.0) == doctest::Approx(1.0));
}

TEST_CASE("little d is orthogonal property") {
  // sum_m d^j_{m' m} d^j_{m'' m} = delta
  testgen::Gen g(43);
  for (int i = 0; i < 50; ++i) {
    const int tj = static_cast<int>(g.range(0, 8));
    const double th = g.real(0, pi);
    for (int a = -tj; a <= tj; a += 2)
      for (int b = -tj; b <= tj; b += 2) {
        double s = 0;
        for (int m = -tj; m <= tj; m += 2) s += wigner_little_d(h(tj), h(a), h(m), th) * wigner_little_d(h(tj), h(b), h(m), th);
        CHECK(s == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12).scale(1.0));
      }
  }
}

TEST_CASE("spherical harmonics") {
  CHECK(std::abs(spherical_harmonic(0, 0, 1.1, 0.3) - 1 / std::sqrt(4 * pi)) < 1e-15);
  CHECK(std::abs(spherical_harmonic(1, 0, 0.7, 0.2) - std::sqrt(3 / (4 * pi)) * std::cos(0.7)) < 1e-15);
  CHECK(std::abs(spherical_harmonic(1, 1, pi / 2, 0) + std::sqrt(3 / (8 * pi))) < 1e-15);
}

TEST_CASE("radial norm") {
  CHECK(std::fabs(radial_norm(0, 0).to_double() - std::sqrt(4 * pi)) < 1e-14);
  CHECK(std::fabs(radial_norm(1, 0).to_double() + std::sqrt(2 * pi / 3)) < 1e-14);
  CHECK(std::fabs(radial_norm(0, 1).to_double() - std::sqrt(4 * pi / 3)) < 1e-14);
}

TEST_CASE("generating functions") {
  std::vector<BigRational> xs{rat(1, 3), rat(-1, 2), rat(2)};
  CHECK(gf_check_legendre(8, xs).passed);
  CHECK(gf_check_gegenbauer(8, 3, xs).passed);
  CHECK_FALSE(gf_check_gegenbauer(8, 3, xs, Form::as_printed).passed);
  CHECK(gf_check_hermite(10, {-1.0, 0.2, 1.7}).passed);
  CHECK(gf_check_hermite_exact(10, xs).passed);
  CHECK(gf_check_character(8, {{0.3, 0.5}, {1.2, -0.4}}).passed);
  CHECK(gf_check_spherical(5, {{0.4, 0.1}, {2.0, 1.3}}).passed);
}

TEST_CASE("oscillator wavefunctions") {
  CHECK(oscillator_wavefn(0, 0) == doctest::Approx(0.7511255444649425).epsilon(1e-15));
  CHECK(oscillator_wavefn(1, 0) == 0.0);
  const auto v = oscillator_wavefns(30, 0.8);
  for (int n = 0; n < 30; ++n) CHECK(v[n] == doctest::Approx(oscillator_wavefn(n, 0.8)).epsilon(1e-13));
}

TEST_CASE("delta kernel smears toward the test function") {
  const auto r = delta_smeared(SmearTest::gaussian, 0.3, {12, 50, 200});
  CHECK(r.exact == doctest::Approx(std::exp(-0.09)));
  CHECK(r.errors[1] <= r.errors[0]);
  CHECK(r.errors[2] <= r.errors[1]);
}

TEST_CASE("propagator closed form vs Abel-regularized spectral sum") {
  KernelParams p;
  p.alpha = 1.0;
  const cplx closed = propagator_closed(p, 0.5, -0.5);
  CHECK(std::abs(propagator_abel(p, 0.5, -0.5) - closed) <= 1e-6);
}

TEST_CASE("propagator modulus is constant in x") {
  KernelParams p;
  p.alpha = 0.7;
  const double ref = std::norm(propagator_closed(p, 0.0, 0.0));
  for (double x : {-2.0, 0.3, 1.9}) CHECK(std::norm(propagator_closed(p, x, 0.4)) == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("propagator composition") {
  KernelParams p;
  CHECK(propagator_composition_check(p, 0.5, 0.5, 0.0, 0.0, 200) <= 1e-6);
  CHECK(propagator_composition_check(p, 0.3, 0.9, 1.0, -1.0, 200) <= 1e-6);
  try {
    propagator_composition_check(p, pi / 2, pi / 2, 0.0, 0.0, 200);
    FAIL("expected a caustic error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::caustic);
  }
}

TEST_CASE("closed propagator at a caustic") {
  KernelParams p;
  p.alpha = pi;
  try {
    propagator_closed(p, 0.1, 0.2);
    FAIL("expected a caustic error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::caustic);
  }
}

TEST_CASE("spectral sum picks up a sign under alpha -> alpha + 2 pi") {
  for (double damping : {0.05, 0.01}) {
    const cplx a(-0.2, -damping), b(2 * pi - 0.2, -damping);
    const cplx ka = propagator_spectral_scaled(a, 300, 0.5, -0.5);
    const cplx kb = propagator_spectral_scaled(b, 300, 0.5, -0.5);
    CHECK(std::abs(ka + kb) <= 1e-12 * std::abs(ka));
  }
}
