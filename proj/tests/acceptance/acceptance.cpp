// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
//
// Runs every acceptance criterion at full size and prints one PASS/FAIL line each.
// Pass --quick for the reduced sweeps and --verbose for per-check lines.
#include <cstdio>
#include <cstring>

#include "amx/amx.h"

int main(int argc, char** argv) {
  int quick = 0;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) quick = 1;
    if (std::strcmp(argv[i], "--verbose") == 0) verbose = true;
  }
  int failed = 0;
  for (int id = 1; id <= amx_criterion_count(); ++id) {
    amx_report* rep = nullptr;
    if (amx_verify(id, quick, nullptr, &rep) != AMX_OK) {
      std::printf("FAIL %d error: %s\n", id, amx_last_error());
      ++failed;
      continue;
    }
    const bool ok = amx_report_passed(rep);
    size_t total = 0;
    for (size_t i = 0; i < amx_report_check_count(rep); ++i) {
      size_t cases = 0;
      amx_report_check(rep, i, nullptr, &cases, nullptr, nullptr, nullptr, nullptr, nullptr);
      total += cases;
    }
    std::printf("%s %d %s (cases=%zu, %.2fs)\n", ok ? "PASS" : "FAIL", id, amx_report_title(rep), total,
                amx_report_seconds(rep));
    if (verbose || !ok) {
      for (size_t i = 0; i < amx_report_check_count(rep); ++i) {
        const char* name = nullptr;
        const char* detail = nullptr;
        size_t cases = 0, failures = 0;
        double dev = 0, tol = 0;
        int passed = 0;
        amx_report_check(rep, i, &name, &cases, &failures, &dev, &tol, &passed, &detail);
        std::printf("    %s %s cases=%zu failures=%zu max_dev=%.3g tol=%.3g %s\n", passed ? "ok  " : "FAIL", name,
                    cases, failures, dev, tol, detail ? detail : "");
      }
    }
    if (!ok) ++failed;
    amx_report_free(rep);
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
