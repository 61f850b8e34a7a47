// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "amx/amx.h"
#include "core/errors.hpp"
#include "core/halfint.hpp"
#include "core/sqrt_rational.hpp"
#include "quad/integral_reps.hpp"
#include "su2/su2.hpp"
#include "su3/su3.hpp"
#include "verify/verify.hpp"

struct amx_value {
  amx::SqrtRational v;
};

struct amx_report {
  amx::CriterionReport r;
};

namespace {

thread_local std::string g_last_error;

amx_status record(amx_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs fn and converts every exception into a status code.
template <class Fn>
amx_status guarded(Fn&& fn) {
  try {
    fn();
    return AMX_OK;
  } catch (const amx::Error& e) {
    return record(static_cast<amx_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(AMX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(AMX_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (!p) amx::fail(amx::ErrorCode::domain, std::string("null argument: ") + what);
}

amx::HalfInt half(int64_t twice) { return amx::HalfInt::from_twice(twice); }

amx::ThreeJArgs three_j_args(const int64_t j[3], const int64_t m[3]) {
  require(j, "twice_j");
  require(m, "twice_m");
  return {half(j[0]), half(j[1]), half(j[2]), half(m[0]), half(m[1]), half(m[2])};
}

amx::SixJArgs six_j_args(const int64_t t[6]) {
  require(t, "twice");
  for (int i = 0; i < 6; ++i)
    if (t[i] < 0) amx::fail(amx::ErrorCode::domain, "6j entries must be nonnegative");
  return {half(t[0]), half(t[1]), half(t[2]), half(t[3]), half(t[4]), half(t[5])};
}

amx_value* wrap(amx::SqrtRational v) { return new amx_value{std::move(v)}; }

}  // namespace

extern "C" {

const char* amx_version(void) { return "0.1.0"; }

const char* amx_last_error(void) { return g_last_error.c_str(); }

const char* amx_status_name(amx_status s) { return amx::error_name(static_cast<amx::ErrorCode>(s)); }

amx_status amx_halfint_parse(const char* text, int64_t* twice) {
  return guarded([&] {
    require(text, "text");
    require(twice, "twice");
    *twice = amx::HalfInt::parse(text).twice();
  });
}

amx_status amx_value_parse(const char* text, amx_value** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(amx::SqrtRational::parse(text));
  });
}

amx_status amx_value_str(const amx_value* v, char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    require(v, "value");
    const std::string s = v->v.str();
    if (needed) *needed = s.size() + 1;
    if (buf && cap > 0) {
      const size_t n = std::min(cap - 1, s.size());
      std::memcpy(buf, s.data(), n);
      buf[n] = '\0';
    }
  });
}

double amx_value_to_double(const amx_value* v) { return v ? amx::to_float(v->v) : 0.0; }

int amx_value_is_zero(const amx_value* v) { return v ? v->v.is_zero() : 1; }

int amx_value_equal(const amx_value* a, const amx_value* b) { return a && b && a->v == b->v; }

void amx_value_free(amx_value* v) { delete v; }

amx_status amx_three_j(const int64_t twice_j[3], const int64_t twice_m[3], amx_method method, amx_value** out) {
  return guarded([&] {
    require(out, "out");
    const amx::ThreeJArgs a = three_j_args(twice_j, twice_m);
    amx::ThreeJMethod m = amx::ThreeJMethod::automatic;
    switch (method) {
      case AMX_METHOD_AUTO: m = amx::ThreeJMethod::automatic; break;
      case AMX_METHOD_VDW: m = amx::ThreeJMethod::vdw; break;
      case AMX_METHOD_WIGNER: m = amx::ThreeJMethod::wigner; break;
      case AMX_METHOD_ORACLE: m = amx::ThreeJMethod::oracle; break;
      default: amx::fail(amx::ErrorCode::domain, "unknown method");
    }
    *out = wrap(amx::three_j(a, m));
  });
}

amx_status amx_three_j_integral(const int64_t twice_j[3], const int64_t twice_m[3], int order, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = amx::three_j_ir(three_j_args(twice_j, twice_m), order);
  });
}

amx_status amx_six_j(const int64_t twice[6], amx_value** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(amx::six_j(six_j_args(twice)));
  });
}

amx_status amx_six_j_triple_sum(const int64_t twice[6], amx_value** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(amx::six_j_triple_sum(six_j_args(twice)));
  });
}

amx_status amx_su3_dimension(int lambda, int mu, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = amx::dimension({lambda, mu});
  });
}

amx_status amx_su3_decompose(int lambda1, int lambda2, amx_su3_coupling* out, size_t cap, size_t* count) {
  return guarded([&] {
    require(count, "count");
    const auto cs = amx::decompose(lambda1, lambda2);
    *count = cs.size();
    for (size_t i = 0; i < cs.size() && i < cap && out; ++i) {
      const auto& c = cs[i];
      out[i] = {c.lambda3(), c.mu3, c.k1(), c.k2(), c.k3(), amx::dimension(c.irrep3())};
    }
  });
}

amx_status amx_su3_three_j(const int irreps[6], const int s1[3], const int s2[3], const int s3[3], amx_value** out) {
  return guarded([&] {
    require(irreps, "irreps");
    require(s1, "s1");
    require(s2, "s2");
    require(s3, "s3");
    require(out, "out");
    const amx::Su3Coupling c =
        amx::make_coupling({irreps[0], irreps[1]}, {irreps[2], irreps[3]}, {irreps[4], irreps[5]});
    *out = wrap(amx::su3_three_j(c, {s1[0], s1[1], s1[2]}, {s2[0], s2[1], s2[2]}, {s3[0], s3[1], s3[2]}));
  });
}

int amx_criterion_count(void) { return amx::kCriterionCount; }

amx_status amx_verify(int criterion, int quick, const char* ledger_path, amx_report** out) {
  return guarded([&] {
    require(out, "out");
    amx::VerifyOptions opt;
    opt.quick = quick != 0;
    if (ledger_path) opt.ledger_path = ledger_path;
    *out = new amx_report{amx::run_criterion(criterion, opt)};
  });
}

int amx_report_passed(const amx_report* r) { return r && r->r.passed(); }

const char* amx_report_title(const amx_report* r) { return r ? r->r.title.c_str() : ""; }

double amx_report_seconds(const amx_report* r) { return r ? r->r.seconds : 0.0; }

double amx_report_time_limit(const amx_report* r) { return r ? r->r.time_limit : 0.0; }

size_t amx_report_check_count(const amx_report* r) { return r ? r->r.checks.size() : 0; }

amx_status amx_report_check(const amx_report* r, size_t index, const char** name, size_t* cases, size_t* failures,
                            double* max_deviation, double* tolerance, int* passed, const char** detail) {
  return guarded([&] {
    require(r, "report");
    if (index >= r->r.checks.size()) amx::fail(amx::ErrorCode::domain, "check index out of range");
    const auto& c = r->r.checks[index];
    if (name) *name = c.name.c_str();
    if (cases) *cases = c.cases;
    if (failures) *failures = c.failures;
    if (max_deviation) *max_deviation = c.max_deviation;
    if (tolerance) *tolerance = c.tolerance;
    if (passed) *passed = c.passed;
    if (detail) *detail = c.detail.c_str();
  });
}

void amx_report_free(amx_report* r) { delete r; }

}  // extern "C"
