// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <string>
#include <vector>

namespace amx {

struct CheckResult {
  std::string name;
  size_t cases = 0;
  size_t failures = 0;
  double max_deviation = 0;  // 0 for exact checks
  double tolerance = 0;
  bool passed = false;
  std::string detail;  // first failing case, or a short summary
};

struct CriterionReport {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;
  double seconds = 0;
  double time_limit = 0;  // 0: no limit
  bool passed() const;
  size_t cases() const;
};

struct VerifyOptions {
  bool quick = false;
  std::string ledger_path;  // empty: default_ledger_path()
};

constexpr int kCriterionCount = 9;

CriterionReport run_criterion(int id, const VerifyOptions& opt);
// all, su2, su3, kernels, gf, ir, errata. Domain error for anything else.
std::vector<int> suite_criteria(const std::string& suite);

}  // namespace amx
