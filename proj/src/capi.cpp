// Copyright 2026 The qcdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcdesign/qcdesign.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "qcdesign/design.hpp"
#include "qcdesign/error.hpp"
#include "qcdesign/fixtures.hpp"
#include "qcdesign/linalg.hpp"
#include "qcdesign/parallel.hpp"

struct qcd_design {
  qcd::Design design;
  std::string kind;
};

struct qcd_report {
  bool passed = false;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string g_last_error;

qcd_status status_of(qcd::ErrorCode c) {
  switch (c) {
    case qcd::ErrorCode::kVerificationFailed: return QCD_VERIFY_FAILED;
    case qcd::ErrorCode::kInvalidArgument:
    case qcd::ErrorCode::kDimensionMismatch: return QCD_INVALID_ARGUMENT;
    case qcd::ErrorCode::kNotPrimePower: return QCD_NOT_PRIME_POWER;
    case qcd::ErrorCode::kParse: return QCD_PARSE_ERROR;
    case qcd::ErrorCode::kIo: return QCD_IO_ERROR;
    case qcd::ErrorCode::kUnknownName: return QCD_UNKNOWN_NAME;
    case qcd::ErrorCode::kIllegalConversion: return QCD_ILLEGAL_CONVERSION;
  }
  return QCD_INTERNAL_ERROR;
}

template <typename F>
qcd_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const qcd::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return QCD_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QCD_INTERNAL_ERROR;
  }
}

qcd_status null_arg(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return QCD_INVALID_ARGUMENT;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

qcd_design* wrap(qcd::Design d) {
  auto* h = new qcd_design{std::move(d), {}};
  h->kind = qcd::kind_name(h->design.kind);
  return h;
}

double tol_or_default(double tol) { return tol < 0 ? qcd::default_tolerance() : tol; }

}  // namespace

extern "C" {

const char* qcd_version(void) { return "1.0.0"; }
const char* qcd_last_error(void) { return g_last_error.c_str(); }
double qcd_default_tolerance(void) { return qcd::default_tolerance(); }
void qcd_set_threads(unsigned n) { qcd::set_max_threads(n); }

qcd_status qcd_design_load(const char* path, qcd_design** out) {
  if (!path || !out) return null_arg("path/out");
  return guarded([&] {
    *out = wrap(qcd::load_design(path));
    return QCD_OK;
  });
}

qcd_status qcd_design_parse(const char* text, qcd_design** out) {
  if (!text || !out) return null_arg("text/out");
  return guarded([&] {
    *out = wrap(qcd::parse_design(text));
    return QCD_OK;
  });
}

qcd_status qcd_design_save(const qcd_design* d, const char* path, int indent) {
  if (!d || !path) return null_arg("design/path");
  return guarded([&] {
    qcd::save_design(d->design, path, indent);
    return QCD_OK;
  });
}

qcd_status qcd_design_serialize(const qcd_design* d, int indent, char** out) {
  if (!d || !out) return null_arg("design/out");
  return guarded([&] {
    *out = dup(qcd::serialize(d->design, indent));
    return QCD_OK;
  });
}

const char* qcd_design_kind(const qcd_design* d) { return d ? d->kind.c_str() : ""; }
void qcd_design_free(qcd_design* d) { delete d; }
void qcd_string_free(char* s) { std::free(s); }

qcd_status qcd_example(const char* ref, qcd_design** out) {
  if (!ref || !out) return null_arg("ref/out");
  return guarded([&] {
    *out = wrap(qcd::example_design(ref));
    return QCD_OK;
  });
}

qcd_status qcd_example_list(char** json_out) {
  if (!json_out) return null_arg("out");
  return guarded([&] {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& i : qcd::fixtures::catalog())
      j.push_back({{"name", i.name}, {"kind", i.kind}, {"parts", i.parts},
                   {"description", i.description}});
    *json_out = dup(j.dump());
    return QCD_OK;
  });
}

qcd_status qcd_construct(const char* method, const char* params_json,
                         const qcd_design* const* inputs, size_t n_inputs, double tol,
                         qcd_design** out) {
  if (!method || !out || (n_inputs && !inputs)) return null_arg("method/inputs/out");
  return guarded([&] {
    nlohmann::json params = nlohmann::json::object();
    if (params_json && *params_json) {
      try {
        params = nlohmann::json::parse(params_json);
      } catch (const nlohmann::json::exception& e) {
        qcd::fail(qcd::ErrorCode::kParse, std::string("parameters: ") + e.what());
      }
    }
    std::vector<qcd::Design> in;
    for (size_t i = 0; i < n_inputs; ++i) {
      qcd::require(inputs[i] != nullptr, qcd::ErrorCode::kInvalidArgument, "null input design");
      in.push_back(inputs[i]->design);
    }
    *out = wrap(qcd::construct_design(method, params, in, tol_or_default(tol)));
    return QCD_OK;
  });
}

qcd_status qcd_convert(const qcd_design* d, const char* to_kind, double tol, qcd_design** out) {
  if (!d || !to_kind || !out) return null_arg("design/to/out");
  return guarded([&] {
    *out = wrap(qcd::convert_design(d->design, to_kind, tol_or_default(tol)));
    return QCD_OK;
  });
}

qcd_status qcd_verify(const qcd_design* d, const char* property, int k, double tol,
                      qcd_report** report) {
  if (!d || !report) return null_arg("design/report");
  return guarded([&] {
    const qcd::Report r =
        qcd::verify_design(d->design, property ? property : "", k, tol_or_default(tol));
    *report = new qcd_report{r.verdict.passed, qcd::report_text(r), qcd::report_json(r).dump()};
    if (!r.verdict.passed) {
      g_last_error = r.verdict.summary();
      return QCD_VERIFY_FAILED;
    }
    return QCD_OK;
  });
}

int qcd_report_passed(const qcd_report* r) { return r && r->passed ? 1 : 0; }
const char* qcd_report_text(const qcd_report* r) { return r ? r->text.c_str() : ""; }
const char* qcd_report_json(const qcd_report* r) { return r ? r->json.c_str() : "{}"; }
void qcd_report_free(qcd_report* r) { delete r; }

qcd_status qcd_capability(int d, char** json_out, char** text_out) {
  return guarded([&] {
    qcd::require(d >= 2, qcd::ErrorCode::kInvalidArgument, "d must be at least 2");
    if (json_out) *json_out = dup(qcd::capability_json(d).dump());
    if (text_out) *text_out = dup(qcd::capability_text(d));
    return QCD_OK;
  });
}

qcd_status qcd_witness(const qcd_design* d, double tol, char** json_out) {
  if (!d || !json_out) return null_arg("design/out");
  return guarded([&] {
    int grid = -1;
    auto w = qcd::design_witness(d->design, tol_or_default(tol), &grid);
    nlohmann::json j{{"found", w.has_value()}};
    if (w) {
      j["grid"] = grid;
      j["first"] = w->first;
      j["second"] = w->second;
      j["value"] = w->value;
    }
    *json_out = dup(j.dump());
    return QCD_OK;
  });
}

}  // extern "C"
