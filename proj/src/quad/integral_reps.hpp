// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <array>

#include "su2/su2.hpp"

namespace amx {

// theta-integral of half-angle powers times a Jacobi polynomial.
double three_j_ir(const ThreeJArgs& a, int order, Form form = Form::corrected);
// theta-integral with a little-d and a terminating 2F1 in -tan^2(theta/2).
double six_j_ir(const SixJArgs& a, int order, Form form = Form::corrected);

// Integral of three D matrices over SU(2) with Haar measure of total mass 1.
// D^j_{mp,m} = exp(-i mp psi) d^j_{mp,m}(theta) exp(-i m phi).
double gaunt_triple_d(const std::array<HalfInt, 3>& j, const std::array<HalfInt, 3>& m,
                      const std::array<HalfInt, 3>& mp, int theta_order, int phi_points);

// Integral of three unconjugated spherical harmonics over the unit sphere.
double triple_y_integral(const std::array<int, 3>& l, const std::array<int, 3>& m, int theta_order, int phi_points);

}  // namespace amx
