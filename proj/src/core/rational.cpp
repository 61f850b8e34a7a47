// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include "core/rational.hpp"

#include <cctype>

#include "core/errors.hpp"

namespace amx {

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

int64_t to_i64(const BigRational& q) {
  if (!is_integer(q)) fail(ErrorCode::domain, "expected an integer, got " + rat_str(q));
  if (!q.get_num().fits_slong_p()) fail(ErrorCode::domain, "integer out of range: " + rat_str(q));
  return q.get_num().get_si();
}

std::string rat_str(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational parse_rat(std::string_view text) {
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    fail(ErrorCode::parse, "malformed rational '" + std::string(text) + "'");
  BigInt d{std::string(den)};
  if (d == 0) fail(ErrorCode::parse, "zero denominator in '" + std::string(text) + "'");
  BigRational q(BigInt(std::string(num)), d);
  q.canonicalize();
  return q;
}

}  // namespace amx
