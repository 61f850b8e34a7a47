// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <array>
#include <vector>

#include "su2/su2.hpp"

namespace amx {

// Every valid (j; m) with 2j_i <= max_twice_j, in lexicographic order of (2j, 2m).
std::vector<ThreeJArgs> three_j_tuples(int max_twice_j);
// Every argument list with entries 2j <= max_twice; triads_only keeps those with all four triads valid.
std::vector<SixJArgs> six_j_tuples(int max_twice, bool triads_only);
// The 24 tetrahedral images, identity first.
std::array<SixJArgs, 24> tetrahedral_images(const SixJArgs& a);

}  // namespace amx
