// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <random>
#include <set>

#include "core/errors.hpp"
#include "core/parallel.hpp"
#include "hyp/hypergeometric.hpp"
#include "kernels/kernels.hpp"
#include "poly/special.hpp"
#include "quad/integral_reps.hpp"
#include "su2/su2.hpp"
#include "su3/su3.hpp"
#include "verify/errata.hpp"
#include "verify/sweeps.hpp"
#include "verify/verify.hpp"

namespace amx {

bool CriterionReport::passed() const {
  if (time_limit > 0 && seconds > time_limit) return false;
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

size_t CriterionReport::cases() const {
  size_t n = 0;
  for (const auto& c : checks) n += c.cases;
  return n;
}

namespace {

// Thread-safe tally for one check. Exact checks leave tolerance at 0.
class Tally {
 public:
  Tally(std::string name, double tol = 0) {
    r_.name = std::move(name);
    r_.tolerance = tol;
  }

  void exact(bool ok, const std::string& label) {
    std::lock_guard<std::mutex> lock(mu_);
    ++r_.cases;
    if (!ok) fail_locked(label);
  }
  void close(double dev, const std::string& label) {
    std::lock_guard<std::mutex> lock(mu_);
    ++r_.cases;
    if (std::isnan(dev)) dev = INFINITY;
    r_.max_deviation = std::max(r_.max_deviation, dev);
    if (!(dev <= r_.tolerance)) fail_locked(label);
  }
  CheckResult result() {
    r_.passed = r_.failures == 0 && r_.cases > 0;
    if (r_.cases == 0) r_.detail = "no cases";
    return r_;
  }

 private:
  void fail_locked(const std::string& label) {
    if (r_.failures == 0) r_.detail = "first failure: " + label;
    ++r_.failures;
  }
  std::mutex mu_;
  CheckResult r_;
};

// Runs body(i) in parallel; an exception thrown for case i is recorded as a failure.
template <class Body>
void sweep(Tally& t, size_t n, Body body, const std::function<std::string(size_t)>& label) {
  parallel_for(n, [&](size_t i) {
    try {
      body(i);
    } catch (const Error& e) {
      t.exact(false, label(i) + ": " + e.what());
    }
  });
}

CheckResult gf_result(const std::string& name, const GfReport& g, double tol) {
  CheckResult r;
  r.name = name;
  r.cases = g.checks;
  r.failures = g.passed ? 0 : std::max<size_t>(1, g.exact_mismatches);
  r.max_deviation = g.max_deviation;
  r.tolerance = tol;
  r.passed = g.passed && g.checks > 0;
  r.detail = g.detail;
  return r;
}

// ---- SU(2) ----

CriterionReport oracle_equivalence(bool quick) {
  CriterionReport rep{1, "SU(2) oracle equivalence", {}, 0, 60};
  const auto tuples = three_j_tuples(quick ? 5 : 7);
  Tally eq("oracle = van der Waerden = Wigner sum, exact");
  sweep(
      eq, tuples.size(),
      [&](size_t i) {
        const auto& x = tuples[i];
        const SqrtRational o = oracle_three_j(x);
        eq.exact(o == three_j_vdw(x) && o == three_j_wigner(x), x.str());
      },
      [&](size_t i) { return tuples[i].str(); });
  rep.checks.push_back(eq.result());

  Tally zero("selection-rule zeros on all three paths");
  const int top = quick ? 3 : 5;
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b)
      for (int c = 0; c <= top; ++c) {
        const HalfInt j1 = HalfInt::from_twice(a), j2 = HalfInt::from_twice(b), j3 = HalfInt::from_twice(c);
        for (HalfInt m1 = -j1; m1 <= j1; m1 += 1)
          for (HalfInt m2 = -j2; m2 <= j2; m2 += 1)
            for (HalfInt m3 = -j3; m3 <= j3; m3 += 1) {
              const ThreeJArgs x{j1, j2, j3, m1, m2, m3};
              if (three_j_allowed(x)) continue;
              zero.exact(oracle_three_j(x).is_zero() && three_j_vdw(x).is_zero() && three_j_wigner(x).is_zero(),
                         x.str());
            }
      }
  rep.checks.push_back(zero.result());
  return rep;
}

CriterionReport orthogonality(bool quick) {
  CriterionReport rep{2, "3j orthogonality (exact)", {}, 0, 0};
  Tally t("orthogonality_sum is the Kronecker delta");
  const int top = quick ? 3 : 4;
  struct Case {
    HalfInt j1, j2, j3, j3p, m3, m3p;
  };
  std::vector<Case> cases;
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b) {
      const HalfInt j1 = HalfInt::from_twice(a), j2 = HalfInt::from_twice(b);
      for (HalfInt j3 = j1 > j2 ? j1 - j2 : j2 - j1; j3 <= j1 + j2; j3 += 1)
        for (HalfInt j3p = j1 > j2 ? j1 - j2 : j2 - j1; j3p <= j1 + j2; j3p += 1)
          for (HalfInt m3 = -j3; m3 <= j3; m3 += 1)
            for (HalfInt m3p = -j3p; m3p <= j3p; m3p += 1) cases.push_back({j1, j2, j3, j3p, m3, m3p});
    }
  auto label = [&](size_t i) {
    const auto& c = cases[i];
    return "j1=" + c.j1.str() + " j2=" + c.j2.str() + " (" + c.j3.str() + "," + c.m3.str() + ") (" + c.j3p.str() + "," +
           c.m3p.str() + ")";
  };
  sweep(
      t, cases.size(),
      [&](size_t i) {
        const auto& c = cases[i];
        const BigRational expect((c.j3 == c.j3p && c.m3 == c.m3p) ? 1 : 0);
        t.exact(orthogonality_sum(c.j1, c.j2, c.j3, c.j3p, c.m3, c.m3p) == expect, label(i));
      },
      label);
  rep.checks.push_back(t.result());
  return rep;
}

CriterionReport symmetries(bool quick) {
  CriterionReport rep{3, "Regge and classical symmetries", {}, 0, 0};
  const auto tuples = three_j_tuples(quick ? 4 : 6);
  Tally regge("Regge image has equal value (and modulus)");
  Tally classical("classical symmetries with their phases");
  auto label = [&](size_t i) { return tuples[i].str(); };
  sweep(
      regge, tuples.size(),
      [&](size_t i) {
        const auto& x = tuples[i];
        const SqrtRational v = three_j(x);
        const SqrtRational w = three_j(regge_map(x));
        regge.exact(w.square() == v.square() && w == v, x.str());
      },
      label);
  sweep(
      classical, tuples.size(),
      [&](size_t i) {
        const auto& x = tuples[i];
        const SqrtRational v = three_j(x, ThreeJMethod::oracle);
        for (Symmetry op : {Symmetry::cyclic, Symmetry::swap12, Symmetry::negate_m}) {
          const auto [y, phase] = classical_symmetry(x, op);
          classical.exact(three_j(y, ThreeJMethod::oracle) == v * BigRational(phase), x.str());
        }
      },
      label);
  rep.checks.push_back(regge.result());
  rep.checks.push_back(classical.result());
  return rep;
}

CriterionReport sixj(bool quick) {
  CriterionReport rep{4, "6j contraction, symmetries, orthogonality", {}, 0, 90};
  {
    const auto all = six_j_tuples(quick ? 2 : 4, false);
    Tally t("reduced single sum = full triple sum, exact");
    auto label = [&](size_t i) { return all[i].str(); };
    sweep(
        t, all.size(), [&](size_t i) { t.exact(six_j(all[i]) == six_j_triple_sum(all[i]), all[i].str()); }, label);
    rep.checks.push_back(t.result());
  }
  {
    const auto valid = six_j_tuples(quick ? 3 : 5, true);
    Tally t("invariance under the 24 tetrahedral symmetries");
    auto label = [&](size_t i) { return valid[i].str(); };
    sweep(
        t, valid.size(),
        [&](size_t i) {
          const SqrtRational v = six_j(valid[i]);
          bool ok = true;
          for (const auto& img : tetrahedral_images(valid[i])) ok = ok && six_j(img) == v;
          t.exact(ok, valid[i].str());
        },
        label);
    rep.checks.push_back(t.result());
  }
  {
    // Sum over j3 of (2j3+1)(2l3+1) {..l3}{..l3'} = delta(l3, l3').
    struct Case {
      HalfInt j1, j2, l1, l2, l3, l3p;
    };
    std::vector<Case> cases;
    const int top = quick ? 2 : 4;
    for (int a = 0; a <= top; ++a)
      for (int b = 0; b <= top; ++b)
        for (int c = 0; c <= top; ++c)
          for (int d = 0; d <= top; ++d) {
            const HalfInt j1 = HalfInt::from_twice(a), j2 = HalfInt::from_twice(b), l1 = HalfInt::from_twice(c),
                          l2 = HalfInt::from_twice(d);
            std::vector<HalfInt> l3s;
            for (int e = 0; e <= top; ++e) {
              const HalfInt l3 = HalfInt::from_twice(e);
              if (triangle_ok(j1, l2, l3) && triangle_ok(l1, j2, l3)) l3s.push_back(l3);
            }
            for (HalfInt x : l3s)
              for (HalfInt y : l3s) cases.push_back({j1, j2, l1, l2, x, y});
          }
    Tally t("6j orthogonality, exact");
    auto label = [&](size_t i) {
      const auto& c = cases[i];
      return SixJArgs{c.j1, c.j2, HalfInt(0), c.l1, c.l2, c.l3}.str() + " l3'=" + c.l3p.str();
    };
    sweep(
        t, cases.size(),
        [&](size_t i) {
          const auto& c = cases[i];
          SqrtAccumulator acc;
          const HalfInt lo = c.j1 > c.j2 ? c.j1 - c.j2 : c.j2 - c.j1;
          for (HalfInt j3 = lo; j3 <= c.j1 + c.j2; j3 += 1) {
            const SqrtRational a = six_j({c.j1, c.j2, j3, c.l1, c.l2, c.l3});
            const SqrtRational b = six_j({c.j1, c.j2, j3, c.l1, c.l2, c.l3p});
            acc.add(sqrt_mul(sqrt_mul(a, b), SqrtRational(BigRational(j3.twice() + 1), BigRational(1))));
          }
          const SqrtRational weight(BigRational(1), BigRational((c.l3.twice() + 1) * (c.l3p.twice() + 1)));
          const SqrtRational total = sqrt_mul(acc.value(), weight);
          const SqrtRational expect = SqrtRational::rational(BigRational(c.l3 == c.l3p ? 1 : 0));
          t.exact(total == expect, label(i));
        },
        label);
    rep.checks.push_back(t.result());
  }
  return rep;
}

// ---- integral representations ----

CriterionReport integrals(bool quick) {
  CriterionReport rep{5, "integral representations", {}, 0, 0};
  {
    const auto tuples = three_j_tuples(quick ? 2 : 4);
    Tally t("3j integral, Gauss order 64", 1e-10);
    sweep(
        t, tuples.size(),
        [&](size_t i) { t.close(std::abs(three_j_ir(tuples[i], 64) - to_float(three_j(tuples[i]))), tuples[i].str()); },
        [&](size_t i) { return tuples[i].str(); });
    rep.checks.push_back(t.result());
  }
  {
    const auto tuples = six_j_tuples(quick ? 2 : 4, true);
    Tally t("6j integral, Gauss order 96", 1e-8);
    sweep(
        t, tuples.size(),
        [&](size_t i) { t.close(std::abs(six_j_ir(tuples[i], 96) - to_float(six_j(tuples[i]))), tuples[i].str()); },
        [&](size_t i) { return tuples[i].str(); });
    rep.checks.push_back(t.result());
  }
  {
    // Pairs of valid projection rows sharing the same j triple.
    const auto tuples = three_j_tuples(quick ? 2 : 3);
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t a = 0; a < tuples.size(); ++a)
      for (size_t b = 0; b < tuples.size(); ++b)
        if (tuples[a].j1 == tuples[b].j1 && tuples[a].j2 == tuples[b].j2 && tuples[a].j3 == tuples[b].j3)
          pairs.emplace_back(a, b);
    Tally t("triple-D integral = product of 3j symbols", 1e-9);
    auto label = [&](size_t i) { return tuples[pairs[i].first].str() + " x " + tuples[pairs[i].second].str(); };
    sweep(
        t, pairs.size(),
        [&](size_t i) {
          const auto& x = tuples[pairs[i].first];
          const auto& y = tuples[pairs[i].second];
          const int phi = static_cast<int>(x.J().twice()) + 1;
          const double v = gaunt_triple_d({x.j1, x.j2, x.j3}, {x.m1, x.m2, x.m3}, {y.m1, y.m2, y.m3}, 32, phi);
          t.close(std::abs(v - to_float(three_j(x)) * to_float(three_j(y))), label(i));
        },
        label);
    rep.checks.push_back(t.result());
  }
  {
    const auto tuples = three_j_tuples(quick ? 4 : 6);
    std::vector<ThreeJArgs> integer;
    for (const auto& x : tuples)
      if (x.j1.is_integer() && x.j2.is_integer() && x.j3.is_integer()) integer.push_back(x);
    Tally t("triple spherical-harmonic integral", 1e-9);
    sweep(
        t, integer.size(),
        [&](size_t i) {
          const auto& x = integer[i];
          const std::array<int, 3> l{int(ival(x.j1)), int(ival(x.j2)), int(ival(x.j3))};
          const std::array<int, 3> m{int(ival(x.m1)), int(ival(x.m2)), int(ival(x.m3))};
          const double v = triple_y_integral(l, m, 32, 2 * (l[0] + l[1] + l[2]) + 1);
          const double pref = std::sqrt((2 * l[0] + 1) * (2 * l[1] + 1) * (2 * l[2] + 1) / (4 * M_PI));
          const double ref = pref * to_float(three_j({x.j1, x.j2, x.j3, 0, 0, 0})) * to_float(three_j(x));
          t.close(std::abs(v - ref), x.str());
        },
        [&](size_t i) { return integer[i].str(); });
    rep.checks.push_back(t.result());
  }
  return rep;
}

// ---- generating functions ----

BigRational random_rational(std::mt19937_64& rng, int num_span, int max_den) {
  std::uniform_int_distribution<int> n(-num_span, num_span), d(1, max_den);
  return rat(n(rng), d(rng));
}

BigRational random_non_integer(std::mt19937_64& rng) {
  for (;;) {
    BigRational q = random_rational(rng, 17, 7);
    if (q.get_den() != 1) return q;
  }
}

CriterionReport generating_functions(bool quick) {
  CriterionReport rep{6, "generating functions and series identities", {}, 0, 0};
  const std::vector<BigRational> xs{rat(1, 3), rat(-2, 5), rat(3, 4)};
  rep.checks.push_back(gf_result("Legendre coefficients through degree 12, exact", gf_check_legendre(12, xs), 0));
  rep.checks.push_back(gf_result("Hermite through n = 10 at 3 points", gf_check_hermite(10, {0.7, -1.3, 2.1}, 1e-12), 1e-12));
  rep.checks.push_back(gf_result("Hermite coefficients through n = 10, exact", gf_check_hermite_exact(10, xs), 0));
  rep.checks.push_back(gf_result("SU(2) characters through j = 4",
                                 gf_check_character(8, {{M_PI / 2, 0.0}, {1.0, 0.7}, {2.0, 1.9}}, Form::corrected, 1e-10),
                                 1e-10));
  rep.checks.push_back(gf_result("Gegenbauer through degree 8, exact",
                                 gf_check_gegenbauer(8, 3, {rat(1, 3), rat(-1, 2), BigRational(2)}), 0));
  rep.checks.push_back(gf_result("spherical harmonics from the vector generating function",
                                 gf_check_spherical(quick ? 4 : 6, {{1.1, 0.6}, {0.3, 2.0}, {2.5, -0.8}}, 1e-12), 1e-12));

  const int instances = quick ? 60 : 250;
  std::mt19937_64 rng(20260418);
  {
    Tally t("series reversal identity on random terminating series");
    for (int done = 0; done < instances;) {
      std::uniform_int_distribution<int> nd(0, 8), pd(1, 3), qd(0, 2);
      HypParams p;
      p.num.push_back(BigRational(-nd(rng)));
      const int extra_num = pd(rng);
      for (int i = 0; i < extra_num; ++i) p.num.push_back(random_non_integer(rng));
      const int dens = qd(rng);
      for (int i = 0; i < dens; ++i) p.den.push_back(random_non_integer(rng));
      do p.z = random_rational(rng, 9, 5);
      while (p.z == 0);
      try {
        const auto [pref, rev] = reverse_series(p);
        t.exact(hyp_eval(p) == pref * hyp_eval(rev), "reversal");
        ++done;
      } catch (const Error&) {
        continue;  // vanishing prefactor: draw again
      }
    }
    rep.checks.push_back(t.result());
  }
  {
    Tally t("Euler transformation on random terminating series");
    std::uniform_int_distribution<int> nd(0, 8), kd(0, 6);
    for (int i = 0; i < instances; ++i) {
      const BigRational a(-nd(rng));
      const BigRational b = random_non_integer(rng);
      const BigRational c = b - BigRational(kd(rng));
      BigRational z;
      do z = random_rational(rng, 9, 5);
      while (z == 0 || z == 1);
      t.exact(euler_transform_check(a, b, c, z), "a=" + a.get_str() + " b=" + b.get_str() + " c=" + c.get_str());
    }
    rep.checks.push_back(t.result());
  }
  return rep;
}

// ---- kernels ----

CriterionReport kernels(bool quick) {
  CriterionReport rep{7, "oscillator kernels", {}, 0, 60};
  {
    Tally t("closed form vs Abel-regularized spectral sum", 1e-6);
    KernelParams p;
    for (double a : {0.5, 1.0, 2.0})
      for (double x : {-1.0, 0.3, 1.2}) {
        p.alpha = a;
        t.close(std::abs(propagator_abel(p, x, 0.7) - propagator_closed(p, x, 0.7)),
                "alpha=" + std::to_string(a) + " x=" + std::to_string(x));
      }
    rep.checks.push_back(t.result());
  }
  {
    Tally t("composition residual", 1e-6);
    KernelParams p;
    const std::vector<std::pair<double, double>> pts{{0, 0}, {1, -1}, {2, -2}, {-2, 1.5}};
    for (double a1 : {0.3, 0.5, 0.9})
      for (double a2 : {0.3, 0.5, 0.9})
        for (auto [x, xp] : pts)
          t.close(propagator_composition_check(p, a1, a2, x, xp, 120),
                  "a1=" + std::to_string(a1) + " a2=" + std::to_string(a2));
    rep.checks.push_back(t.result());
  }
  {
    Tally t("|K|^2 constant in x, x'", 1e-12);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2, 2);
    for (KernelParams p : {KernelParams{1, 1, 1, 0.7}, KernelParams{1.3, 0.8, 1.1, 2.3}}) {
      const double expect = p.mass * p.omega / (2 * M_PI * p.hbar * std::abs(std::sin(p.alpha)));
      for (int i = 0; i < 5; ++i) {
        const double v = std::norm(propagator_closed(p, u(rng), u(rng)));
        t.close(std::abs(v - expect) / expect, "alpha=" + std::to_string(p.alpha));
      }
    }
    rep.checks.push_back(t.result());
  }
  {
    // err(200) threshold fixed from a convergence run with two orders of magnitude of margin.
    Tally t("smeared delta kernel converges monotonically");
    const std::vector<int> cutoffs = quick ? std::vector<int>{12, 50} : std::vector<int>{12, 50, 200};
    const char* names[] = {"gaussian", "odd gaussian", "cosine gaussian"};
    int k = 0;
    for (SmearTest f : {SmearTest::gaussian, SmearTest::odd_gaussian, SmearTest::cosine_gaussian}) {
      const SmearResult r = delta_smeared(f, 0.3, cutoffs);
      bool ok = std::is_sorted(r.errors.rbegin(), r.errors.rend()) &&
                std::adjacent_find(r.errors.begin(), r.errors.end()) == r.errors.end();
      if (!quick) ok = ok && r.errors.back() < 1e-30;
      t.exact(ok, names[k++]);
    }
    rep.checks.push_back(t.result());
  }
  return rep;
}

// ---- SU(3) ----

std::vector<Su3Coupling> couplings_up_to(int top) {
  std::vector<Su3Coupling> out;
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b)
      for (const auto& c : decompose(a, b)) out.push_back(c);
  return out;
}

CriterionReport su3(bool quick) {
  CriterionReport rep{8, "SU(3) multiplicity-free coupling", {}, 0, 120};
  {
    Tally t("state count = dimension, labels distinct");
    for (int l = 0; l <= 6; ++l)
      for (int m = 0; m <= 6; ++m) {
        const Su3Irrep r{l, m};
        const auto states = enumerate_states(r);
        std::set<std::tuple<int, int64_t, int64_t>> seen;
        for (const auto& s : states) {
          const Su3Labels lb = labels(r, s);
          seen.insert({lb.y, lb.t.twice(), lb.t0.twice()});
        }
        t.exact(static_cast<int64_t>(states.size()) == dimension(r) && seen.size() == states.size(), r.str());
      }
    rep.checks.push_back(t.result());
  }
  {
    Tally t("decomposition dimension sums");
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; b <= 8; ++b) {
        int64_t total = 0;
        for (const auto& c : decompose(a, b)) total += dimension(c.irrep3());
        t.exact(total == dimension({a, 0}) * dimension({b, 0}), std::to_string(a) + "x" + std::to_string(b));
      }
    rep.checks.push_back(t.result());
  }
  const auto couplings = couplings_up_to(quick ? 2 : 3);
  auto clabel = [&](size_t i) { return couplings[i].str(); };
  // Warm the oracle cache in parallel; every check below reads from it.
  parallel_for(couplings.size(), [&](size_t i) { su3_oracle(couplings[i]); });
  {
    Tally t("unit norm of every coupling");
    sweep(
        t, couplings.size(),
        [&](size_t i) {
          BigRational total(0);
          for (const auto& [k, v] : su3_oracle(couplings[i])) total += v.square();
          t.exact(total == 1, couplings[i].str());
        },
        clabel);
    rep.checks.push_back(t.result());
  }
  {
    Tally t("per-state orthonormality in both outer irreps");
    sweep(
        t, couplings.size(),
        [&](size_t i) {
          const auto& c = couplings[i];
          std::map<Su3State, BigRational> by3, by1;
          for (const auto& [k, v] : su3_oracle(c)) {
            by3[std::get<2>(k)] += v.square();
            by1[std::get<0>(k)] += v.square();
          }
          bool ok = by3.size() == static_cast<size_t>(dimension(c.irrep3())) &&
                    by1.size() == static_cast<size_t>(dimension(c.irrep1()));
          for (const auto& [s, v] : by3) ok = ok && v * BigRational(dimension(c.irrep3())) == 1;
          for (const auto& [s, v] : by1) ok = ok && v * BigRational(dimension(c.irrep1())) == 1;
          t.exact(ok, c.str());
        },
        clabel);
    rep.checks.push_back(t.result());
  }
  {
    Tally closed("closed form = generating-function oracle, exact");
    Tally rules("selection-rule zeros");
    sweep(
        closed, couplings.size(),
        [&](size_t i) {
          const auto& c = couplings[i];
          const auto values = su3_oracle(c);
          for (const auto& s1 : enumerate_states(c.irrep1()))
            for (const auto& s2 : enumerate_states(c.irrep2()))
              for (const auto& s3 : enumerate_states(c.irrep3())) {
                auto it = values.find({s1, s2, s3});
                const SqrtRational o = it == values.end() ? SqrtRational() : it->second;
                const SqrtRational v = su3_three_j(c, s1, s2, s3);
                const std::string label = c.str() + " " + s1.str() + s2.str() + s3.str();
                closed.exact(v == o, label);
                const Su3Labels l1 = labels(c.irrep1(), s1), l2 = labels(c.irrep2(), s2), l3 = labels(c.irrep3(), s3);
                if (l1.y + l2.y != l3.y || l1.t0 + l2.t0 != l3.t0) rules.exact(v.is_zero() && o.is_zero(), label);
              }
        },
        clabel);
    rep.checks.push_back(closed.result());
    rep.checks.push_back(rules.result());
  }
  {
    Tally t("isoscalar factor independent of isospin projections");
    sweep(
        t, couplings.size(),
        [&](size_t i) {
          const auto& c = couplings[i];
          std::set<std::tuple<int, int64_t, int, int64_t, int, int64_t>> triples;
          for (const auto& s1 : enumerate_states(c.irrep1()))
            for (const auto& s2 : enumerate_states(c.irrep2()))
              for (const auto& s3 : enumerate_states(c.irrep3())) {
                const Su3Labels l1 = labels(c.irrep1(), s1), l2 = labels(c.irrep2(), s2), l3 = labels(c.irrep3(), s3);
                if (l1.y + l2.y == l3.y && triangle_ok(l1.t, l2.t, l3.t))
                  triples.insert({l1.y, l1.t.twice(), l2.y, l2.t.twice(), l3.y, l3.t.twice()});
              }
          for (const auto& [y1, t1, y2, t2, y3, t3] : triples) {
            const std::string label = c.str() + " y/t " + std::to_string(y1) + "," + std::to_string(t1) + " " +
                                      std::to_string(y2) + "," + std::to_string(t2) + " " + std::to_string(y3) + "," +
                                      std::to_string(t3);
            try {
              isoscalar_factor(c, y1, HalfInt::from_twice(t1), y2, HalfInt::from_twice(t2), y3, HalfInt::from_twice(t3));
              t.exact(true, label);
            } catch (const Error& e) {
              // Every SU(2) factor vanishing is a legitimate outcome; a dependence on t0 is not.
              t.exact(e.code() == ErrorCode::domain, label);
            }
          }
        },
        clabel);
    rep.checks.push_back(t.result());
  }
  return rep;
}

// ---- errata ----

CriterionReport errata(const VerifyOptions& opt) {
  CriterionReport rep{9, "errata ledger completeness", {}, 0, 0};
  const std::string path = opt.ledger_path.empty() ? default_ledger_path() : opt.ledger_path;
  std::map<std::string, std::string> ledger;
  std::string ledger_error;
  try {
    ledger = read_ledger(path);
  } catch (const Error& e) {
    ledger_error = e.what();
  }
  const auto& reg = errata_registry();
  std::vector<ErratumProbe> probes(reg.size());
  parallel_for(reg.size(), [&](size_t i) { probes[i] = reg[i].probe(opt.quick); });
  for (size_t i = 0; i < reg.size(); ++i) {
    const auto& e = reg[i];
    const auto& p = probes[i];
    CheckResult r;
    r.name = e.id + " [" + e.sweep + "]";
    r.cases = p.cases;
    r.failures = p.corrected_disagreements;
    std::string why;
    if (p.corrected_disagreements > 0) why = "shipped form disagrees with its oracle";
    if (p.printed_disagreements > 0) {
      auto it = ledger.find(e.id);
      if (!ledger_error.empty()) {
        why = ledger_error;
      } else if (it == ledger.end()) {
        why = "printed form disagrees on " + std::to_string(p.printed_disagreements) + " cases with no ledger entry";
      } else if (it->second.find(e.sweep) == std::string::npos) {
        why = "ledger entry does not name the sweep " + e.sweep;
      }
      if (!why.empty()) ++r.failures;
    }
    r.passed = r.failures == 0 && r.cases > 0;
    r.detail = why.empty() ? "printed form differs on " + std::to_string(p.printed_disagreements) + "/" +
                                 std::to_string(p.cases) + (p.example.empty() ? "" : ", e.g. " + p.example)
                           : why;
    rep.checks.push_back(r);
  }
  return rep;
}

}  // namespace

CriterionReport run_criterion(int id, const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  CriterionReport rep;
  switch (id) {
    case 1: rep = oracle_equivalence(opt.quick); break;
    case 2: rep = orthogonality(opt.quick); break;
    case 3: rep = symmetries(opt.quick); break;
    case 4: rep = sixj(opt.quick); break;
    case 5: rep = integrals(opt.quick); break;
    case 6: rep = generating_functions(opt.quick); break;
    case 7: rep = kernels(opt.quick); break;
    case 8: rep = su3(opt.quick); break;
    case 9: rep = errata(opt); break;
    default: fail(ErrorCode::domain, "no criterion " + std::to_string(id));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9};
  if (suite == "su2") return {1, 2, 3, 4};
  if (suite == "ir") return {5};
  if (suite == "gf") return {6};
  if (suite == "kernels") return {7};
  if (suite == "su3") return {8};
  if (suite == "errata") return {9};
  fail(ErrorCode::domain, "unknown suite '" + suite + "' (all, su2, su3, kernels, gf, ir, errata)");
}

}  // namespace amx
