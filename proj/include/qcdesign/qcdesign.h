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

/* C interface to the qcdesign library. Every function returns a status code;
 * on failure qcd_last_error() describes the cause for the calling thread.
 * Objects are opaque and owned by the caller once returned. */
#ifndef QCDESIGN_QCDESIGN_H_
#define QCDESIGN_QCDESIGN_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcd_status {
  QCD_OK = 0,
  QCD_VERIFY_FAILED = 1,     /* a verifier or self-check rejected the input */
  QCD_INVALID_ARGUMENT = 2,
  QCD_PARSE_ERROR = 3,
  QCD_IO_ERROR = 4,
  QCD_UNKNOWN_NAME = 5,
  QCD_ILLEGAL_CONVERSION = 6,
  QCD_NOT_PRIME_POWER = 7,
  QCD_INTERNAL_ERROR = 8
} qcd_status;

typedef struct qcd_design qcd_design;
typedef struct qcd_report qcd_report;

const char* qcd_version(void);
const char* qcd_last_error(void);
double qcd_default_tolerance(void);
/* 0 = hardware concurrency */
void qcd_set_threads(unsigned n);

qcd_status qcd_design_load(const char* path, qcd_design** out);
qcd_status qcd_design_parse(const char* text, qcd_design** out);
/* indent < 0 writes compact JSON */
qcd_status qcd_design_save(const qcd_design* d, const char* path, int indent);
qcd_status qcd_design_serialize(const qcd_design* d, int indent, char** out);
/* "ls", "oa", "qls", "qlc", "iqls", "gmoqls", "gmoqlc", "qoa" or "state";
 * valid until the design is freed */
const char* qcd_design_kind(const qcd_design* d);
void qcd_design_free(qcd_design* d);
void qcd_string_free(char* s);

/* name or name:part; qcd_example_list returns a JSON catalog */
qcd_status qcd_example(const char* ref, qcd_design** out);
qcd_status qcd_example_list(char** json_out);

/* params_json: object with method options, may be NULL */
qcd_status qcd_construct(const char* method, const char* params_json,
                         const qcd_design* const* inputs, size_t n_inputs,
                         double tol, qcd_design** out);
qcd_status qcd_convert(const qcd_design* d, const char* to_kind, double tol,
                       qcd_design** out);

/* property NULL or "" infers one from the design; k <= 0 uses the natural
 * strength; tol < 0 uses the default. The report is produced whenever the
 * check ran; the status is QCD_OK or QCD_VERIFY_FAILED accordingly. */
qcd_status qcd_verify(const qcd_design* d, const char* property, int k,
                      double tol, qcd_report** report);
int qcd_report_passed(const qcd_report* r);
const char* qcd_report_text(const qcd_report* r);
const char* qcd_report_json(const qcd_report* r);
void qcd_report_free(qcd_report* r);

qcd_status qcd_capability(int d, char** json_out, char** text_out);
/* JSON object {"found": bool, ...}; found=false means no certificate */
qcd_status qcd_witness(const qcd_design* d, double tol, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* QCDESIGN_QCDESIGN_H_ */
