// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "amx/amx.h"
#include "core/sqrt_rational.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

std::string value_str(const amx_value* v) {
  char buf[256];
  size_t needed = 0;
  REQUIRE(amx_value_str(v, buf, sizeof buf, &needed) == AMX_OK);
  return buf;
}

struct Run {
  int code;
  std::string out;
};

// stderr is dropped; only stdout and the exit status are compared.
Run cli(const std::string& args) {
  const std::string cmd = std::string(AMX_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("C API: 3j values and statuses") {
  const int64_t j[3] = {2, 2, 0}, m[3] = {0, 0, 0};
  for (amx_method meth : {AMX_METHOD_AUTO, AMX_METHOD_VDW, AMX_METHOD_WIGNER, AMX_METHOD_ORACLE}) {
    amx_value* v = nullptr;
    REQUIRE(amx_three_j(j, m, meth, &v) == AMX_OK);
    CHECK(value_str(v) == "-1*sqrt(1/3)");
    CHECK(amx_value_to_double(v) == doctest::Approx(-0.5773502691896258));
    amx_value_free(v);
  }
  double q = 0;
  CHECK(amx_three_j_integral(j, m, 64, &q) == AMX_OK);
  CHECK(q == doctest::Approx(-0.5773502691896258).epsilon(1e-10));
  amx_value* v = nullptr;
  CHECK(amx_three_j(j, m, static_cast<amx_method>(42), &v) == AMX_ERR_DOMAIN);
  CHECK(std::string(amx_last_error()).size() > 0);
  CHECK(amx_three_j(nullptr, m, AMX_METHOD_AUTO, &v) == AMX_ERR_DOMAIN);
}

TEST_CASE("C API: truncated string output reports the full size") {
  amx_value* v = nullptr;
  REQUIRE(amx_value_parse("-1/3*sqrt(2)", &v) == AMX_OK);
  char small[4];
  size_t needed = 0;
  CHECK(amx_value_str(v, small, sizeof small, &needed) == AMX_OK);
  CHECK(needed == 13);
  CHECK(std::string(small) == "-1/");
  amx_value* w = nullptr;
  REQUIRE(amx_value_parse(value_str(v).c_str(), &w) == AMX_OK);
  CHECK(amx_value_equal(v, w));
  amx_value_free(v);
  amx_value_free(w);
  CHECK(amx_value_parse("sqrt(", &v) == AMX_ERR_PARSE);
}

TEST_CASE("C API: half-integers") {
  int64_t t = 0;
  CHECK(amx_halfint_parse("-3/2", &t) == AMX_OK);
  CHECK(t == -3);
  CHECK(amx_halfint_parse("1.5", &t) == AMX_ERR_PARSE);
  CHECK(std::string(amx_status_name(AMX_ERR_PARSE)).size() > 0);
}

TEST_CASE("C API: 6j") {
  const int64_t a[6] = {2, 2, 2, 0, 2, 2};
  amx_value *v = nullptr, *w = nullptr;
  REQUIRE(amx_six_j(a, &v) == AMX_OK);
  REQUIRE(amx_six_j_triple_sum(a, &w) == AMX_OK);
  CHECK(amx_value_equal(v, w));
  CHECK(amx_value_to_double(v) == doctest::Approx(-1.0 / 3));
  amx_value_free(v);
  amx_value_free(w);
  const int64_t bad[6] = {2, -2, 2, 0, 2, 2};
  CHECK(amx_six_j(bad, &v) == AMX_ERR_DOMAIN);
}

TEST_CASE("C API: SU(3)") {
  int64_t d = 0;
  CHECK(amx_su3_dimension(1, 1, &d) == AMX_OK);
  CHECK(d == 8);
  size_t count = 0;
  amx_su3_coupling cs[4];
  CHECK(amx_su3_decompose(2, 2, cs, 4, &count) == AMX_OK);
  CHECK(count == 3);
  int64_t total = 0;
  for (size_t i = 0; i < count; ++i) total += cs[i].dimension;
  CHECK(total == 36);
  CHECK(amx_su3_decompose(2, 2, nullptr, 0, &count) == AMX_OK);
  CHECK(count == 3);
  const int irreps[6] = {0, 0, 0, 0, 0, 0}, s[3] = {0, 0, 0};
  amx_value* v = nullptr;
  REQUIRE(amx_su3_three_j(irreps, s, s, s, &v) == AMX_OK);
  CHECK(std::abs(amx_value_to_double(v)) == doctest::Approx(1.0));
  amx_value_free(v);
  const int mixed[6] = {1, 1, 1, 0, 2, 1};
  CHECK(amx_su3_three_j(mixed, s, s, s, &v) == AMX_ERR_UNSUPPORTED);
}

TEST_CASE("C API: verify reports") {
  CHECK(amx_criterion_count() == 9);
  amx_report* r = nullptr;
  REQUIRE(amx_verify(2, 1, nullptr, &r) == AMX_OK);
  CHECK(amx_report_passed(r));
  REQUIRE(amx_report_check_count(r) >= 1);
  const char* name = nullptr;
  size_t cases = 0;
  int passed = 0;
  CHECK(amx_report_check(r, 0, &name, &cases, nullptr, nullptr, nullptr, &passed, nullptr) == AMX_OK);
  CHECK(cases > 0);
  CHECK(passed == 1);
  CHECK(amx_report_check(r, 999, &name, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr) == AMX_ERR_DOMAIN);
  amx_report_free(r);
  CHECK(amx_verify(0, 1, nullptr, &r) == AMX_ERR_DOMAIN);
}

TEST_CASE("C API: errata criterion fails against an empty ledger") {
  const std::string path = "amx_empty_ledger_test.md";
  std::ofstream(path) << "# nothing\n";
  amx_report* r = nullptr;
  REQUIRE(amx_verify(9, 1, path.c_str(), &r) == AMX_OK);
  CHECK_FALSE(amx_report_passed(r));
  amx_report_free(r);
  std::remove(path.c_str());
}

TEST_CASE("CLI: 3j") {
  auto r = cli("3j --j 1,1,0 --m 0,0,0");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("-1*sqrt(1/3)", 0) == 0);
  CHECK(cli("3j --j 1,1,1 --m 1,1,1").out.rfind("0 ", 0) == 0);
  r = cli("3j --j 1/2,1/2,1 --m 1/2,1/2,-1 --method ir --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["value_float"].get<double>() + 0.5773502692) <= 1e-10);
  CHECK(j["method"] == "ir");
  CHECK(j["errata_applied"].size() == 1);
  r = cli("3j --j 1,1,2 --m 0,0,0 --format json --check");
  CHECK(r.code == 0);
  const auto k = nlohmann::json::parse(r.out);
  CHECK(k["value_exact"] == "1*sqrt(2/15)");
  CHECK(k["value_float"].get<double>() == amx::to_float(amx::SqrtRational::parse("1*sqrt(2/15)")));
  CHECK(cli("3j --j 1.5,1,1 --m 0,0,0").code == 1);
  CHECK(cli("3j --j 2/4,1,1 --m 0,0,0").code == 1);
  CHECK(cli("3j --j 1,1 --m 0,0,0").code == 1);
  CHECK(cli("3j --j 1,1,0 --m 0,0,0 --method nope").code == 1);
}

TEST_CASE("CLI: 6j and SU(3)") {
  auto r = cli("6j --args 1,1,1,0,1,1 --check");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("-1/3*sqrt(1)", 0) == 0);
  r = cli("su3 decompose 1 1");
  CHECK(r.code == 0);
  CHECK(r.out == "(2,0) dim=6 k=(0,1,1)\n(0,1) dim=3 k=(1,0,0)\n");
  r = cli("su3 3j --coupling 1,1 1 2,1 --states 0,0,0 0,0,0 0,0,0");
  CHECK(r.code == 1);
  r = cli("su3 3j --coupling 1 1 0,1 --states 1,0,0 0,0,0 0,0,0 --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["errata_applied"].size() == 3);
}

TEST_CASE("CLI: table is stable and round-trips") {
  const auto a = cli("table 3j --max-j 1");
  const auto b = cli("table 3j --max-j 1");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream in(a.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "j1,j2,j3,m1,m2,m3,exact,float");
  int rows = 0;
  std::set<std::string> keys;
  std::string prev;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    REQUIRE(f.size() == 8);
    const auto v = amx::SqrtRational::parse(f[6]);
    CHECK(v.str() == f[6]);
    CHECK(std::stod(f[7]) == amx::to_float(v));
    keys.insert(f[0] + f[1] + f[2] + f[3] + f[4] + f[5]);
  }
  CHECK(rows == 16);
  CHECK(keys.size() == 16);
  const std::string path = "amx_table_test.csv";
  CHECK(cli("table 3j --max-j 3/2 --out " + path).code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().rfind("j1,j2,j3,m1,m2,m3,exact,float\n", 0) == 0);
  std::remove(path.c_str());
}

TEST_CASE("CLI: verify") {
  auto r = cli("verify su2 --quick");
  CHECK(r.code == 0);
  const auto pos = r.out.find("total_cases=");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stoul(r.out.substr(pos + 12)) >= 1000);
  const std::string path = "amx_empty_ledger_cli.md";
  std::ofstream(path) << "\n";
  CHECK(cli("verify errata --quick --ledger " + path).code == 2);
  std::remove(path.c_str());
  CHECK(cli("verify nothing").code == 1);
}
