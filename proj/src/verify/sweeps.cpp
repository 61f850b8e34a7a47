// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include "verify/sweeps.hpp"

namespace amx {

std::vector<ThreeJArgs> three_j_tuples(int max_twice_j) {
  std::vector<ThreeJArgs> out;
  for (int a = 0; a <= max_twice_j; ++a)
    for (int b = 0; b <= max_twice_j; ++b)
      for (int c = 0; c <= max_twice_j; ++c) {
        const HalfInt j1 = HalfInt::from_twice(a), j2 = HalfInt::from_twice(b), j3 = HalfInt::from_twice(c);
        if (!triangle_ok(j1, j2, j3)) continue;
        for (HalfInt m1 = -j1; m1 <= j1; m1 += 1)
          for (HalfInt m2 = -j2; m2 <= j2; m2 += 1) {
            const HalfInt m3 = -(m1 + m2);
            if (m3 > j3 || -m3 > j3) continue;
            out.push_back({j1, j2, j3, m1, m2, m3});
          }
      }
  return out;
}

std::vector<SixJArgs> six_j_tuples(int max_twice, bool triads_only) {
  std::vector<SixJArgs> out;
  const int base = max_twice + 1;
  int total = 1;
  for (int i = 0; i < 6; ++i) total *= base;
  for (int t = 0; t < total; ++t) {
    std::array<HalfInt, 6> v;
    int u = t;
    for (int i = 5; i >= 0; --i) {
      v[i] = HalfInt::from_twice(u % base);
      u /= base;
    }
    SixJArgs s{v[0], v[1], v[2], v[3], v[4], v[5]};
    if (triads_only && !six_j_triads_ok(s)) continue;
    out.push_back(s);
  }
  return out;
}

std::array<SixJArgs, 24> tetrahedral_images(const SixJArgs& a) {
  static constexpr std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
  const std::array<std::pair<HalfInt, HalfInt>, 3> cols{{{a.j1, a.l1}, {a.j2, a.l2}, {a.j3, a.l3}}};
  // Flip patterns: none, or upper/lower swapped in exactly two columns.
  static constexpr std::array<std::array<bool, 3>, 4> flips{{{false, false, false}, {true, true, false}, {true, false, true}, {false, true, true}}};
  std::array<SixJArgs, 24> out;
  size_t n = 0;
  for (const auto& p : perms)
    for (const auto& f : flips) {
      std::array<std::pair<HalfInt, HalfInt>, 3> c;
      for (int i = 0; i < 3; ++i) {
        c[i] = cols[p[i]];
        if (f[i]) std::swap(c[i].first, c[i].second);
      }
      out[n++] = SixJArgs{c[0].first, c[1].first, c[2].first, c[0].second, c[1].second, c[2].second};
    }
  return out;
}

}  // namespace amx
