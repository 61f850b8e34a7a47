// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace amx {

struct ErratumProbe {
  size_t cases = 0;
  size_t printed_disagreements = 0;    // literal transcription vs its oracle
  size_t corrected_disagreements = 0;  // shipped form vs the same oracle
  std::string example;                 // first printed disagreement
};

// One formula that ships in a corrected form next to its literal transcription.
struct Erratum {
  std::string id;
  std::string module;
  std::string sweep;  // name of the sweep that exposes the difference
  std::function<ErratumProbe(bool quick)> probe;
};

const std::vector<Erratum>& errata_registry();
const Erratum& find_erratum(const std::string& id);

// AMX_ERRATA_FILE if set, else docs/errata.md in the source tree.
std::string default_ledger_path();
// Entries keyed by their "## <id>" heading; the value is the text up to the next heading.
std::map<std::string, std::string> read_ledger(const std::string& path);

}  // namespace amx
