// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include "verify/errata.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"
#include "core/factorial.hpp"
#include "kernels/kernels.hpp"
#include "poly/special.hpp"
#include "quad/integral_reps.hpp"
#include "su2/su2.hpp"
#include "su3/su3.hpp"
#include "verify/sweeps.hpp"

#ifndef AMX_SOURCE_DIR
#define AMX_SOURCE_DIR "."
#endif

namespace amx {

namespace {

// Counts one case; a throwing printed path counts as a disagreement.
template <class Printed, class Corrected>
void tally(ErratumProbe& r, const std::string& label, Printed printed_ok, Corrected corrected_ok) {
  ++r.cases;
  bool ok = false;
  try {
    ok = printed_ok();
  } catch (const Error&) {
    ok = false;
  }
  if (!ok) {
    if (r.printed_disagreements == 0) r.example = label;
    ++r.printed_disagreements;
  }
  if (!corrected_ok()) ++r.corrected_disagreements;
}

ErratumProbe probe_oracle_denominator(bool quick) {
  ErratumProbe r;
  for (const auto& x : three_j_tuples(quick ? 4 : 7)) {
    const SqrtRational o = oracle_three_j(x);
    tally(r, x.str(), [&] { return oracle_three_j(x, Form::as_printed) == o; },
          [&] { return three_j_wigner(x) == o; });
  }
  return r;
}

ErratumProbe probe_vdw(bool quick) {
  ErratumProbe r;
  for (const auto& x : three_j_tuples(quick ? 4 : 7)) {
    const SqrtRational o = oracle_three_j(x);
    tally(r, x.str(), [&] { return three_j_vdw(x, Form::as_printed) == o; }, [&] { return three_j_vdw(x) == o; });
  }
  return r;
}

ErratumProbe probe_wigner(bool quick) {
  ErratumProbe r;
  for (const auto& x : three_j_tuples(quick ? 4 : 7)) {
    const SqrtRational o = oracle_three_j(x);
    tally(r, x.str(), [&] { return three_j_wigner(x, Form::as_printed) == o; },
          [&] { return three_j_wigner(x) == o; });
  }
  return r;
}

ErratumProbe probe_stretched(bool quick) {
  ErratumProbe r;
  const int top = quick ? 4 : 7;
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b)
      for (int c = 0; c <= top; ++c) {
        const HalfInt j1 = HalfInt::from_twice(a), j2 = HalfInt::from_twice(b), j3 = HalfInt::from_twice(c);
        if (!triangle_ok(j1, j2, j3)) continue;
        const SqrtRational o = oracle_three_j({j1, j2, j3, j1, -j2, j2 - j1});
        tally(r, ThreeJArgs{j1, j2, j3, j1, -j2, j2 - j1}.str(),
              [&] { return three_j_special(j1, j2, j3, Form::as_printed) == o; },
              [&] { return three_j_special(j1, j2, j3) == o; });
      }
  return r;
}

ErratumProbe probe_regge(bool quick) {
  ErratumProbe r;
  for (const auto& x : three_j_tuples(quick ? 4 : 6)) {
    const SqrtRational v = three_j(x);
    tally(
        r, x.str(),
        [&] {
          const ThreeJArgs y = regge_map_as_printed(x);
          return three_j(y).square() == v.square() && three_j_allowed(y);
        },
        [&] { return three_j(regge_map(x)) == v; });
  }
  return r;
}

ErratumProbe probe_threej_ir(bool quick) {
  ErratumProbe r;
  for (const auto& x : three_j_tuples(quick ? 2 : 4)) {
    const double e = to_float(three_j(x));
    tally(r, x.str(), [&] { return std::abs(three_j_ir(x, 64, Form::as_printed) - e) <= 1e-10; },
          [&] { return std::abs(three_j_ir(x, 64) - e) <= 1e-10; });
  }
  return r;
}

ErratumProbe probe_sixj_ir(bool quick) {
  ErratumProbe r;
  for (const auto& s : six_j_tuples(quick ? 2 : 4, true)) {
    const double e = to_float(six_j(s));
    tally(r, s.str(), [&] { return std::abs(six_j_ir(s, 96, Form::as_printed) - e) <= 1e-8; },
          [&] { return std::abs(six_j_ir(s, 96) - e) <= 1e-8; });
  }
  return r;
}

ErratumProbe probe_ylm(bool quick) {
  ErratumProbe r;
  const std::vector<std::pair<double, double>> angles{{0.3, 0.0}, {0.9, 0.4}, {2.2, -1.7}};
  for (int l = 0; l <= (quick ? 3 : 6); ++l)
    for (int m = -l; m <= l; ++m)
      for (auto [th, ph] : angles) {
        std::complex<double> ref = std::sph_legendre(l, std::abs(m), th) * std::polar(1.0, m * ph);
        if (m < 0 && (m % 2) != 0) ref = -ref;
        const std::string label = "l=" + std::to_string(l) + " m=" + std::to_string(m);
        tally(r, label, [&] { return std::abs(spherical_harmonic(l, m, th, ph, Form::as_printed) - ref) <= 1e-12; },
              [&] { return std::abs(spherical_harmonic(l, m, th, ph) - ref) <= 1e-12; });
      }
  return r;
}

std::vector<std::pair<double, double>> character_points() { return {{M_PI / 2, 0.0}, {1.0, 0.7}, {2.0, 1.9}}; }

ErratumProbe probe_character(bool quick) {
  ErratumProbe r;
  const int top = quick ? 4 : 8;
  const GfReport p = gf_check_character(top, character_points(), Form::as_printed);
  const GfReport c = gf_check_character(top, character_points());
  r.cases = c.checks;
  r.printed_disagreements = p.passed ? 0 : 1;
  r.corrected_disagreements = c.passed ? 0 : 1;
  if (!p.passed) r.example = "max deviation " + std::to_string(p.max_deviation);
  return r;
}

std::vector<BigRational> gegenbauer_points() { return {rat(1, 3), rat(-1, 2), BigRational(2)}; }

ErratumProbe probe_gegenbauer(bool quick) {
  ErratumProbe r;
  const int top = quick ? 5 : 8;
  const GfReport p = gf_check_gegenbauer(top, 3, gegenbauer_points(), Form::as_printed);
  const GfReport c = gf_check_gegenbauer(top, 3, gegenbauer_points());
  r.cases = c.checks;
  r.printed_disagreements = p.exact_mismatches;
  r.corrected_disagreements = c.exact_mismatches;
  r.example = p.detail;
  return r;
}

ErratumProbe probe_jacobi(bool quick) {
  ErratumProbe r;
  const std::vector<BigRational> xs{BigRational(0), rat(1, 2), rat(-1, 2), BigRational(1),
                                    BigRational(-1)};
  for (int n = 0; n <= (quick ? 5 : 8); ++n)
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b)
        for (const auto& x : xs) {
          const BigRational ref = jacobi(n, a, b, x);
          const std::string label = "P_" + std::to_string(n) + "^(" + std::to_string(a) + "," + std::to_string(b) +
                                    ")(" + x.get_str() + ")";
          tally(r, label, [&] { return jacobi_cos_form(n, a, b, x, Form::as_printed) == ref; },
                [&] { return jacobi_cos_form(n, a, b, x) == ref; });
        }
  return r;
}

std::vector<Su3Coupling> su3_sweep(bool quick) {
  std::vector<Su3Coupling> out;
  const int top = quick ? 2 : 3;
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b)
      for (const auto& c : decompose(a, b)) out.push_back(c);
  return out;
}

// Per target state: dim3 * sum over (a1, a2) of 3j^2 must be 1; weights rescale each squared value.
template <class Weight>
bool su3_orthonormal(const Su3Coupling& c, const std::map<Su3Triple, SqrtRational>& values, Weight weight) {
  std::map<Su3State, BigRational> per;
  for (const auto& [k, v] : values) per[std::get<2>(k)] += v.square() * weight(k);
  const BigRational dim(dimension(c.irrep3()));
  if (per.size() != static_cast<size_t>(dimension(c.irrep3()))) return false;
  for (const auto& [s, v] : per)
    if (v * dim != 1) return false;
  return true;
}

BigRational norm_sq(const Su3Irrep& r, const Su3State& s, Form f) { return basis_norm(r, s, f).square(); }

ErratumProbe probe_su3_basis_norm(bool quick) {
  ErratumProbe r;
  for (const auto& c : su3_sweep(quick)) {
    const auto values = su3_oracle(c);
    auto printed_weight = [&](const Su3Triple& k) {
      const Conjugate cb = r_conjugate(c.irrep3(), std::get<2>(k));
      BigRational w = norm_sq(c.irrep1(), std::get<0>(k), Form::corrected) *
                      norm_sq(c.irrep2(), std::get<1>(k), Form::corrected) *
                      norm_sq(cb.irrep, cb.state, Form::corrected);
      w /= norm_sq(c.irrep1(), std::get<0>(k), Form::as_printed) * norm_sq(c.irrep2(), std::get<1>(k), Form::as_printed) *
           norm_sq(cb.irrep, cb.state, Form::as_printed);
      return w;
    };
    tally(r, c.str(), [&] { return su3_orthonormal(c, values, printed_weight); },
          [&] { return su3_orthonormal(c, values, [](const Su3Triple&) { return BigRational(1); }); });
  }
  return r;
}

ErratumProbe probe_su3_closed(bool quick) {
  ErratumProbe r;
  for (const auto& c : su3_sweep(quick)) {
    const auto values = su3_oracle(c);
    for (const auto& s1 : enumerate_states(c.irrep1()))
      for (const auto& s2 : enumerate_states(c.irrep2()))
        for (const auto& s3 : enumerate_states(c.irrep3())) {
          auto it = values.find({s1, s2, s3});
          const SqrtRational o = it == values.end() ? SqrtRational() : it->second;
          tally(r, c.str() + " " + s1.str() + s2.str() + s3.str(),
                [&] { return su3_three_j(c, s1, s2, s3, Form::as_printed) == o; },
                [&] { return su3_three_j(c, s1, s2, s3) == o; });
        }
  }
  return r;
}

ErratumProbe probe_su3_invariant_norm(bool quick) {
  ErratumProbe r;
  for (const auto& c : su3_sweep(quick)) {
    BigRational total(0);
    for (const auto& [k, v] : su3_oracle(c)) total += v.square();
    const BigRational alt = invariant_norm(c, NormReading::factorial_of_double).square() / invariant_norm(c).square();
    tally(r, c.str(), [&] { return total * alt == 1; }, [&] { return total == 1; });
  }
  return r;
}

ErratumProbe probe_propagator(bool quick) {
  ErratumProbe r;
  KernelParams p;
  const std::vector<double> alphas = quick ? std::vector<double>{1.0} : std::vector<double>{0.5, 1.0, 2.0};
  for (double a : alphas)
    for (double x : {-1.0, 0.3, 1.2}) {
      p.alpha = a;
      const cplx ref = propagator_closed(p, x, 0.7);
      tally(r, "alpha=" + std::to_string(a) + " x=" + std::to_string(x),
            [&] { return std::abs(propagator_abel(p, x, 0.7, {}, Form::as_printed) - ref) <= 1e-6; },
            [&] { return std::abs(propagator_abel(p, x, 0.7) - ref) <= 1e-6; });
    }
  return r;
}

}  // namespace

const std::vector<Erratum>& errata_registry() {
  static const std::vector<Erratum> reg{
      {"threej-invariant-denominator", "su2-coupling", "su2-threej-all-tuples", probe_oracle_denominator},
      {"vdw-3f2-form", "su2-coupling", "su2-threej-all-tuples", probe_vdw},
      {"wigner-3f2-form", "su2-coupling", "su2-threej-all-tuples", probe_wigner},
      {"stretched-3j", "su2-coupling", "su2-stretched-triangles", probe_stretched},
      {"regge-map", "su2-coupling", "su2-regge-sweep", probe_regge},
      {"threej-integral", "quadrature-ir", "ir-threej-order64", probe_threej_ir},
      {"sixj-integral", "quadrature-ir", "ir-sixj-order96", probe_sixj_ir},
      {"ylm-from-d", "special-poly", "ylm-sph-legendre-grid", probe_ylm},
      {"su2-character-gf", "special-poly", "gf-character-j4", probe_character},
      {"gegenbauer-gf-sign", "special-poly", "gf-gegenbauer-degree8", probe_gegenbauer},
      {"jacobi-cos-form", "special-poly", "jacobi-two-forms", probe_jacobi},
      {"su3-basis-norm", "su3-coupling", "su3-state-orthonormality", probe_su3_basis_norm},
      {"su3-closed-form", "su3-coupling", "su3-closed-vs-oracle", probe_su3_closed},
      {"su3-invariant-norm", "su3-coupling", "su3-unit-norm", probe_su3_invariant_norm},
      {"propagator-prefactor", "kernels", "kernel-abel-grid", probe_propagator},
  };
  return reg;
}

const Erratum& find_erratum(const std::string& id) {
  for (const auto& e : errata_registry())
    if (e.id == id) return e;
  fail(ErrorCode::domain, "unknown erratum " + id);
}

std::string default_ledger_path() {
  if (const char* env = std::getenv("AMX_ERRATA_FILE")) return env;
  return std::string(AMX_SOURCE_DIR) + "/docs/errata.md";
}

std::map<std::string, std::string> read_ledger(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::domain, "cannot read errata ledger " + path);
  std::map<std::string, std::string> out;
  std::string line, current;
  while (std::getline(in, line)) {
    if (line.rfind("## ", 0) == 0) {
      current = line.substr(3);
      while (!current.empty() && (current.back() == ' ' || current.back() == '\r')) current.pop_back();
      out[current];
    } else if (!current.empty()) {
      out[current] += line + "\n";
    }
  }
  return out;
}

}  // namespace amx
