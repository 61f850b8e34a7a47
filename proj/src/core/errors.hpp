// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <stdexcept>
#include <string>

namespace amx {

// Numeric values are part of the C ABI (see include/amx/amx.h).
enum class ErrorCode : int {
  ok = 0,
  domain = 1,
  pole = 2,
  incompatible_radicand = 3,
  parse = 4,
  budget = 5,
  caustic = 6,
  unsupported = 7,
  internal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

const char* error_name(ErrorCode code) noexcept;

}  // namespace amx
