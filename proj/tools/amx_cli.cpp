// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
//
// Command-line front end. Talks to the library only through amx/amx.h.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "amx/amx.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

struct CliError {
  amx_status status;
  std::string message;
};

void check(amx_status s, const std::string& context = {}) {
  if (s == AMX_OK) return;
  std::string msg = amx_last_error();
  if (!context.empty()) msg = context + ": " + msg;
  throw CliError{s, msg};
}

struct ValueDeleter {
  void operator()(amx_value* v) const { amx_value_free(v); }
};
using Value = std::unique_ptr<amx_value, ValueDeleter>;

struct ReportDeleter {
  void operator()(amx_report* r) const { amx_report_free(r); }
};
using Report = std::unique_ptr<amx_report, ReportDeleter>;

std::string render(const amx_value* v) {
  size_t needed = 0;
  check(amx_value_str(v, nullptr, 0, &needed));
  std::string s(needed, '\0');
  check(amx_value_str(v, s.data(), s.size(), &needed));
  s.resize(needed - 1);
  return s;
}

std::string render_half(int64_t twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

std::string render_float(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::vector<int64_t> parse_halves(const std::string& text, size_t count, const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() != count)
    throw CliError{AMX_ERR_PARSE, what + ": expected " + std::to_string(count) + " comma-separated values"};
  std::vector<int64_t> out;
  for (const auto& p : parts) {
    int64_t t = 0;
    check(amx_halfint_parse(p.c_str(), &t), what + " '" + p + "'");
    out.push_back(t);
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text, size_t count, const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() != count)
    throw CliError{AMX_ERR_PARSE, what + ": expected " + std::to_string(count) + " comma-separated integers"};
  std::vector<int> out;
  for (const auto& p : parts) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(p, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != p.size()) throw CliError{AMX_ERR_PARSE, what + ": not an integer: '" + p + "'"};
    out.push_back(v);
  }
  return out;
}

// One computed symbol, in the shape shared by text, json and csv output.
struct Record {
  json inputs;
  std::vector<std::string> csv_inputs;
  std::optional<std::string> value_exact;  // absent for quadrature results
  double value_float = 0;
  std::string method;
  std::vector<std::string> errata;
};

void emit(const Record& r, const std::string& format, const std::string& csv_header, bool with_header) {
  if (format == "json") {
    json j;
    j["inputs"] = r.inputs;
    j["value_exact"] = r.value_exact ? json(*r.value_exact) : json(nullptr);
    j["value_float"] = r.value_float;
    j["method"] = r.method;
    j["errata_applied"] = r.errata;
    std::cout << j.dump() << '\n';
  } else if (format == "csv") {
    if (with_header) std::cout << csv_header << '\n';
    for (const auto& s : r.csv_inputs) std::cout << s << ',';
    std::cout << r.value_exact.value_or("") << ',' << render_float(r.value_float) << '\n';
  } else {
    std::cout << r.value_exact.value_or("-") << "  " << render_float(r.value_float) << "  method=" << r.method
              << '\n';
  }
}

Value three_j_value(const int64_t j[3], const int64_t m[3], amx_method method) {
  amx_value* out = nullptr;
  check(amx_three_j(j, m, method, &out));
  return Value(out);
}

std::vector<std::string> three_j_errata(const std::string& method) {
  if (method == "wigner") return {"wigner-3f2-form"};
  if (method == "oracle") return {"threej-invariant-denominator"};
  if (method == "ir") return {"threej-integral"};
  return {"vdw-3f2-form"};
}

amx_method method_code(const std::string& m) {
  if (m == "vdw") return AMX_METHOD_VDW;
  if (m == "wigner") return AMX_METHOD_WIGNER;
  if (m == "oracle") return AMX_METHOD_ORACLE;
  return AMX_METHOD_AUTO;
}

constexpr int kIrOrder = 64;
constexpr double kIrTolerance = 1e-10;

int cmd_3j(const std::string& jtext, const std::string& mtext, const std::string& method, const std::string& format,
           bool cross_check) {
  const auto j = parse_halves(jtext, 3, "--j");
  const auto m = parse_halves(mtext, 3, "--m");
  Record r;
  r.inputs = {{"j", {render_half(j[0]), render_half(j[1]), render_half(j[2])}},
              {"m", {render_half(m[0]), render_half(m[1]), render_half(m[2])}}};
  for (auto t : j) r.csv_inputs.push_back(render_half(t));
  for (auto t : m) r.csv_inputs.push_back(render_half(t));
  r.method = method;
  r.errata = three_j_errata(method);

  const Value exact = three_j_value(j.data(), m.data(), AMX_METHOD_AUTO);
  if (method == "ir") {
    // The quadrature route has no exact output; selection-rule zeros are reported directly.
    if (!amx_value_is_zero(exact.get())) check(amx_three_j_integral(j.data(), m.data(), kIrOrder, &r.value_float));
  } else {
    const Value v = three_j_value(j.data(), m.data(), method_code(method));
    r.value_exact = render(v.get());
    r.value_float = amx_value_to_double(v.get());
  }
  emit(r, format, "j1,j2,j3,m1,m2,m3,exact,float", true);

  if (!cross_check) return kExitOk;
  bool ok = true;
  for (const char* alt : {"vdw", "wigner", "oracle"}) {
    const Value v = three_j_value(j.data(), m.data(), method_code(alt));
    if (!amx_value_equal(v.get(), exact.get())) {
      std::cerr << "mismatch: " << alt << " gives " << render(v.get()) << ", expected "
                << render(exact.get()) << '\n';
      ok = false;
    }
  }
  if (!amx_value_is_zero(exact.get())) {
    double q = 0;
    check(amx_three_j_integral(j.data(), m.data(), kIrOrder, &q));
    const double ref = amx_value_to_double(exact.get());
    if (!(std::fabs(q - ref) <= kIrTolerance)) {
      std::cerr << "mismatch: quadrature gives " << render_float(q) << ", expected " << render_float(ref) << '\n';
      ok = false;
    }
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_6j(const std::string& args, const std::string& format, bool cross_check) {
  const auto t = parse_halves(args, 6, "--args");
  amx_value* raw = nullptr;
  check(amx_six_j(t.data(), &raw));
  const Value v(raw);
  Record r;
  json in = json::array();
  for (auto x : t) {
    in.push_back(render_half(x));
    r.csv_inputs.push_back(render_half(x));
  }
  r.inputs = {{"args", in}};
  r.value_exact = render(v.get());
  r.value_float = amx_value_to_double(v.get());
  r.method = "reduced";
  r.errata = {"stretched-3j"};
  emit(r, format, "j1,j2,j3,l1,l2,l3,exact,float", true);
  if (!cross_check) return kExitOk;
  check(amx_six_j_triple_sum(t.data(), &raw));
  const Value w(raw);
  if (!amx_value_equal(v.get(), w.get())) {
    std::cerr << "mismatch: triple sum gives " << render(w.get()) << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_su3_3j(const std::vector<std::string>& coupling, const std::vector<std::string>& states,
               const std::string& format) {
  if (coupling.size() != 3) throw CliError{AMX_ERR_PARSE, "--coupling takes L1 L2 L3,MU3"};
  // L1 and L2 may carry an explicit mu (L1,MU1); only mu = 0 is supported by the library.
  auto irrep = [](const std::string& text, bool mu_optional) {
    const bool has_mu = text.find(',') != std::string::npos;
    if (!has_mu && mu_optional) return std::vector<int>{parse_ints(text, 1, "--coupling")[0], 0};
    return parse_ints(text, 2, "--coupling");
  };
  const auto first = irrep(coupling[0], true), second = irrep(coupling[1], true), third = irrep(coupling[2], false);
  const int l1 = first[0], l2 = second[0];
  if (states.size() != 3) throw CliError{AMX_ERR_PARSE, "--states takes three p,q,r triples"};
  std::vector<std::vector<int>> s;
  for (const auto& st : states) s.push_back(parse_ints(st, 3, "--states"));
  const int irreps[6] = {first[0], first[1], second[0], second[1], third[0], third[1]};
  amx_value* raw = nullptr;
  check(amx_su3_three_j(irreps, s[0].data(), s[1].data(), s[2].data(), &raw));
  const Value v(raw);
  Record r;
  r.inputs = {{"coupling", {l1, l2, {third[0], third[1]}}}, {"states", s}};
  r.csv_inputs = {std::to_string(l1), std::to_string(l2), std::to_string(third[0]), std::to_string(third[1])};
  for (const auto& st : s)
    r.csv_inputs.push_back(std::to_string(st[0]) + " " + std::to_string(st[1]) + " " + std::to_string(st[2]));
  r.value_exact = render(v.get());
  r.value_float = amx_value_to_double(v.get());
  r.method = "closed";
  r.errata = {"su3-closed-form", "su3-basis-norm", "su3-invariant-norm"};
  emit(r, format, "lambda1,lambda2,lambda3,mu3,state1,state2,state3,exact,float", true);
  return kExitOk;
}

int cmd_su3_decompose(int l1, int l2, const std::string& format) {
  size_t count = 0;
  check(amx_su3_decompose(l1, l2, nullptr, 0, &count));
  std::vector<amx_su3_coupling> cs(count);
  check(amx_su3_decompose(l1, l2, cs.data(), cs.size(), &count));
  if (format == "json") {
    json arr = json::array();
    for (const auto& c : cs)
      arr.push_back({{"irrep", {c.lambda3, c.mu3}}, {"dim", c.dimension}, {"k", {c.k1, c.k2, c.k3}}});
    std::cout << arr.dump() << '\n';
  } else {
    for (const auto& c : cs)
      std::cout << '(' << c.lambda3 << ',' << c.mu3 << ") dim=" << c.dimension << " k=(" << c.k1 << ',' << c.k2
                << ',' << c.k3 << ")\n";
  }
  return kExitOk;
}

// Rows with j1 <= j2 <= j3 and a nonzero value, ordered lexicographically on (j, m).
int cmd_table(const std::string& max_j, const std::string& out_path) {
  int64_t tmax = 0;
  check(amx_halfint_parse(max_j.c_str(), &tmax), "--max-j");
  if (tmax < 0) throw CliError{AMX_ERR_DOMAIN, "--max-j must be nonnegative"};
  std::ostringstream csv;
  csv << "j1,j2,j3,m1,m2,m3,exact,float\n";
  for (int64_t a = 0; a <= tmax; ++a)
    for (int64_t b = a; b <= tmax; ++b)
      for (int64_t c = b; c <= tmax; ++c) {
        if ((a + b + c) % 2 != 0 || c > a + b) continue;
        for (int64_t ma = -a; ma <= a; ma += 2)
          for (int64_t mb = -b; mb <= b; mb += 2) {
            const int64_t mc = -ma - mb;
            if (mc < -c || mc > c) continue;
            const int64_t j[3] = {a, b, c};
            const int64_t m[3] = {ma, mb, mc};
            const Value v = three_j_value(j, m, AMX_METHOD_AUTO);
            if (amx_value_is_zero(v.get())) continue;
            csv << render_half(a) << ',' << render_half(b) << ',' << render_half(c) << ',' << render_half(ma) << ','
                << render_half(mb) << ',' << render_half(mc) << ',' << render(v.get()) << ','
                << render_float(amx_value_to_double(v.get())) << '\n';
          }
      }
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw CliError{AMX_ERR_DOMAIN, "cannot open " + out_path};
    f << csv.str();
  }
  return kExitOk;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "all") {
    std::vector<int> all;
    for (int i = 1; i <= amx_criterion_count(); ++i) all.push_back(i);
    return all;
  }
  if (suite == "su2") return {1, 2, 3, 4};
  if (suite == "ir") return {5};
  if (suite == "gf") return {6};
  if (suite == "kernels") return {7};
  if (suite == "su3") return {8};
  if (suite == "errata") return {9};
  throw CliError{AMX_ERR_DOMAIN, "unknown suite '" + suite + "'"};
}

int cmd_verify(const std::string& suite, bool quick, const std::string& ledger) {
  bool all_ok = true;
  size_t total_cases = 0;
  for (int id : suite_criteria(suite)) {
    amx_report* raw = nullptr;
    check(amx_verify(id, quick ? 1 : 0, ledger.empty() ? nullptr : ledger.c_str(), &raw));
    const Report rep(raw);
    const bool ok = amx_report_passed(rep.get());
    all_ok = all_ok && ok;
    size_t crit_cases = 0;
    std::ostringstream lines;
    for (size_t i = 0; i < amx_report_check_count(rep.get()); ++i) {
      const char* name = nullptr;
      const char* detail = nullptr;
      size_t cases = 0, failures = 0;
      double dev = 0, tol = 0;
      int passed = 0;
      check(amx_report_check(rep.get(), i, &name, &cases, &failures, &dev, &tol, &passed, &detail));
      crit_cases += cases;
      lines << "  " << (passed ? "ok  " : "FAIL") << ' ' << name << " cases=" << cases << " failures=" << failures
            << " max_dev=" << render_float(dev) << " tol=" << render_float(tol);
      if (detail && *detail) lines << "  " << detail;
      lines << '\n';
    }
    total_cases += crit_cases;
    char secs[64];
    const double limit = amx_report_time_limit(rep.get());
    if (limit > 0)
      std::snprintf(secs, sizeof secs, "%.2fs (limit %.0fs)", amx_report_seconds(rep.get()), limit);
    else
      std::snprintf(secs, sizeof secs, "%.2fs", amx_report_seconds(rep.get()));
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << amx_report_title(rep.get())
              << " cases=" << crit_cases << ' ' << secs << '\n'
              << lines.str();
  }
  std::cout << (all_ok ? "PASS" : "FAIL") << ' ' << suite << " total_cases=" << total_cases << '\n';
  return all_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact SU(2) and SU(3) coupling coefficients"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(amx_version()));

  std::string format = "text";
  const auto formats = CLI::IsMember({"text", "json", "csv"});

  auto* c3j = app.add_subcommand("3j", "Wigner 3j symbol");
  std::string jtext, mtext, method = "auto";
  bool check3 = false;
  c3j->add_option("--j", jtext, "J1,J2,J3")->required();
  c3j->add_option("--m", mtext, "M1,M2,M3")->required();
  c3j->add_option("--method", method)->check(CLI::IsMember({"auto", "vdw", "wigner", "oracle", "ir"}));
  c3j->add_option("--format", format)->check(formats);
  c3j->add_flag("--check", check3, "compare against every other route; exit 2 on mismatch");

  auto* c6j = app.add_subcommand("6j", "Wigner 6j symbol");
  std::string args6;
  bool check6 = false;
  c6j->add_option("--args", args6, "J1,J2,J3,L1,L2,L3")->required();
  c6j->add_option("--format", format)->check(formats);
  c6j->add_flag("--check", check6, "compare against the triple-3j sum; exit 2 on mismatch");

  auto* su3 = app.add_subcommand("su3", "SU(3) couplings with mu1 = mu2 = 0");
  su3->require_subcommand(1);
  auto* su3j = su3->add_subcommand("3j", "SU(3) 3j symbol");
  std::vector<std::string> coupling, states;
  su3j->add_option("--coupling", coupling, "L1[,MU1] L2[,MU2] L3,MU3")->required()->expected(3);
  su3j->add_option("--states", states, "p,q,r p,q,r p,q,r")->required()->expected(3);
  su3j->add_option("--format", format)->check(formats);
  auto* su3d = su3->add_subcommand("decompose", "irreps in (L1,0) x (L2,0)");
  int dl1 = 0, dl2 = 0;
  su3d->add_option("L1", dl1)->required()->check(CLI::NonNegativeNumber);
  su3d->add_option("L2", dl2)->required()->check(CLI::NonNegativeNumber);
  su3d->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* table = app.add_subcommand("table", "CSV table of nonzero symbols");
  std::string table_kind, max_j, out_path;
  table->add_option("kind", table_kind)->required()->check(CLI::IsMember({"3j"}));
  table->add_option("--max-j", max_j)->required();
  table->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "run acceptance suites");
  std::string suite;
  bool quick = false;
  std::string ledger;
  verify->add_option("suite", suite)->required()->check(
      CLI::IsMember({"all", "su2", "su3", "kernels", "gf", "ir", "errata"}));
  verify->add_flag("--quick", quick);
  verify->add_option("--ledger", ledger, "errata ledger markdown file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    if (*c3j) return cmd_3j(jtext, mtext, method, format, check3);
    if (*c6j) return cmd_6j(args6, format, check6);
    if (*su3j) return cmd_su3_3j(coupling, states, format);
    if (*su3d) return cmd_su3_decompose(dl1, dl2, format);
    if (*table) return cmd_table(max_j, out_path);
    if (*verify) return cmd_verify(suite, quick, ledger);
  } catch (const CliError& e) {
    std::cerr << "error (" << amx_status_name(e.status) << "): " << e.message << '\n';
    return kExitError;
  }
  return kExitError;
}
