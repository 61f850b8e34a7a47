// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include "core/halfint.hpp"

#include <charconv>

#include "core/errors.hpp"

namespace amx {

namespace {

int64_t parse_int(std::string_view s, std::string_view whole) {
  if (s.empty()) fail(ErrorCode::parse, "malformed half-integer '" + std::string(whole) + "'");
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail(ErrorCode::parse, "malformed half-integer '" + std::string(whole) + "'");
  return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && body.front() == '-') {
    neg = true;
    body.remove_prefix(1);
  }
  if (body.empty() || body.front() == '+' || body.front() == '-')
    fail(ErrorCode::parse, "malformed half-integer '" + std::string(text) + "'");
  int64_t twice = 0;
  if (auto slash = body.find('/'); slash == std::string_view::npos) {
    twice = 2 * parse_int(body, text);
  } else {
    int64_t num = parse_int(body.substr(0, slash), text);
    int64_t den = parse_int(body.substr(slash + 1), text);
    if (den != 2 || num % 2 == 0)
      fail(ErrorCode::parse, "half-integer must be p or p/2 in lowest terms: '" + std::string(text) + "'");
    twice = num;
  }
  return from_twice(neg ? -twice : twice);
}

int64_t HalfInt::to_int() const {
  if (twice_ % 2 != 0) fail(ErrorCode::domain, "half-odd value " + str() + " used where an integer is required");
  return twice_ / 2;
}

std::string HalfInt::str() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ok: return "ok";
    case ErrorCode::domain: return "domain error";
    case ErrorCode::pole: return "pole error";
    case ErrorCode::incompatible_radicand: return "incompatible radicand";
    case ErrorCode::parse: return "parse error";
    case ErrorCode::budget: return "budget exceeded";
    case ErrorCode::caustic: return "caustic";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::internal: return "internal error";
  }
  return "unknown error";
}

}  // namespace amx
