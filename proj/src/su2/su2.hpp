// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <array>
#include <string>
#include <utility>

#include "core/halfint.hpp"
#include "core/sqrt_rational.hpp"

namespace amx {

// Which reading of a published closed form to evaluate. `corrected` is what the library
// uses; `as_printed` exists so the errata checks can show where and why the two differ.
enum class Form { corrected, as_printed };

struct ThreeJArgs {
  HalfInt j1, j2, j3, m1, m2, m3;
  HalfInt J() const { return j1 + j2 + j3; }
  std::array<int64_t, 6> key() const {
    return {j1.twice(), j2.twice(), j3.twice(), m1.twice(), m2.twice(), m3.twice()};
  }
  bool operator==(const ThreeJArgs&) const = default;
  std::string str() const;
};

struct SixJArgs {
  HalfInt j1, j2, j3, l1, l2, l3;
  bool operator==(const SixJArgs&) const = default;
  std::string str() const;
};

using ReggeSquare = std::array<std::array<HalfInt, 3>, 3>;

enum class ThreeJMethod { automatic, vdw, wigner, oracle };
enum class Symmetry { cyclic, swap12, negate_m };

bool triangle_ok(HalfInt j1, HalfInt j2, HalfInt j3);
// Every condition for a possibly nonzero 3j: magnitudes, projections, m-sum and triangle.
bool three_j_allowed(const ThreeJArgs& a);

// Coefficient extraction from the expanded invariant of three spinor brackets.
SqrtRational oracle_three_j(const ThreeJArgs& a, Form form = Form::corrected);
SqrtRational three_j_vdw(const ThreeJArgs& a, Form form = Form::corrected);
SqrtRational three_j_wigner(const ThreeJArgs& a, Form form = Form::corrected);
// (j1 j2 j3; j1, -j2, j2-j1). Domain error if the triangle fails.
SqrtRational three_j_special(HalfInt j1, HalfInt j2, HalfInt j3, Form form = Form::corrected);
// Memoized entry point.
SqrtRational three_j(const ThreeJArgs& a, ThreeJMethod method = ThreeJMethod::automatic);

ReggeSquare regge_square(const ThreeJArgs& a);
// Inverse of regge_square; domain error if the square does not come from valid arguments.
ThreeJArgs from_regge_square(const ReggeSquare& r);
// Anti-transposition of the square (reflection in the anti-diagonal). The symbol value
// is unchanged, sign included.
ThreeJArgs regge_map(const ThreeJArgs& a);
// Literal transcription of the published substitution, kept for the errata check only.
ThreeJArgs regge_map_as_printed(const ThreeJArgs& a);

std::pair<ThreeJArgs, int> classical_symmetry(const ThreeJArgs& a, Symmetry op);

// Single sum over mu3 divided by the stretched 3j.
SqrtRational six_j(const SixJArgs& a);
// Unrestricted triple sum over (mu1, mu2, mu3) built on the expansion oracle.
SqrtRational six_j_triple_sum(const SixJArgs& a);
bool six_j_triads_ok(const SixJArgs& a);

BigRational orthogonality_sum(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j3p, HalfInt m3, HalfInt m3p);

// <j1 m1 j2 m2 | J M> in the Condon-Shortley convention.
SqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

// Cache statistics for diagnostics.
size_t three_j_cache_size();
void three_j_cache_clear();

}  // namespace amx
