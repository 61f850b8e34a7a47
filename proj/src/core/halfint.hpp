// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace amx {

// Angular-momentum style number stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int value) : twice_(2 * static_cast<int64_t>(value)) {}  // NOLINT: implicit on purpose

  static constexpr HalfInt from_twice(int64_t t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }
  // Accepts "p" or "p/2" in lowest terms, optional leading '-'.
  static HalfInt parse(std::string_view text);

  constexpr int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  // Throws a domain error when the value is half-odd.
  int64_t to_int() const;
  double to_double() const { return static_cast<double>(twice_) / 2.0; }
  std::string str() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  constexpr auto operator<=>(const HalfInt&) const = default;
  friend constexpr HalfInt operator*(int64_t k, HalfInt h) { return from_twice(k * h.twice_); }

 private:
  int64_t twice_ = 0;
};

// Integer value of a sum that the caller knows to be integral.
inline int64_t ival(HalfInt h) { return h.to_int(); }

// (-1)^n for an integral HalfInt.
inline int parity_sign(HalfInt h) { return (h.to_int() % 2 == 0) ? 1 : -1; }

}  // namespace amx

template <>
struct std::hash<amx::HalfInt> {
  size_t operator()(const amx::HalfInt& h) const noexcept { return std::hash<int64_t>{}(h.twice()); }
};
