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

// qcdesign command-line tool. Talks to the library only through the C API.
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcdesign/qcdesign.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct DesignDeleter {
  void operator()(qcd_design* d) const { qcd_design_free(d); }
};
struct ReportDeleter {
  void operator()(qcd_report* r) const { qcd_report_free(r); }
};
using DesignPtr = std::unique_ptr<qcd_design, DesignDeleter>;
using ReportPtr = std::unique_ptr<qcd_report, ReportDeleter>;

struct Globals {
  double tol = -1.0;
  unsigned threads = 0;
  std::optional<unsigned long> seed;
  bool json = false;
};

// Thrown to unwind with a given exit code after the message is printed.
struct Exit {
  int code;
};

int exit_code(qcd_status s) { return s == QCD_VERIFY_FAILED ? kExitFail : kExitUsage; }

void check(qcd_status s, const std::string& what) {
  if (s == QCD_OK) return;
  std::cerr << "qcdesign: " << what << ": " << qcd_last_error() << "\n";
  throw Exit{exit_code(s)};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  qcd_string_free(s);
  return out;
}

DesignPtr load(const std::string& path) {
  qcd_design* d = nullptr;
  check(qcd_design_load(path.c_str(), &d), "reading " + path);
  return DesignPtr(d);
}

void emit(const qcd_design* d, const std::string& out) {
  if (out.empty() || out == "-") {
    char* s = nullptr;
    check(qcd_design_serialize(d, -1, &s), "serializing");
    std::cout << take(s) << "\n";
  } else {
    check(qcd_design_save(d, out.c_str(), -1), "writing " + out);
  }
}

// Runs a verifier and prints the report; returns the exit code.
int report(const qcd_design* d, const std::string& property, int k, const Globals& g,
           bool to_stderr) {
  qcd_report* raw = nullptr;
  const qcd_status s = qcd_verify(d, property.c_str(), k, g.tol, &raw);
  ReportPtr r(raw);
  if (!r) check(s, "verifying");
  std::ostream& os = to_stderr ? std::cerr : std::cout;
  os << (g.json ? qcd_report_json(r.get()) : qcd_report_text(r.get())) << "\n";
  return qcd_report_passed(r.get()) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, convert and verify quantum Latin squares, cubes and "
               "quantum orthogonal arrays"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tol", g.tol, "comparison tolerance (default 1e-9 or $QCDESIGN_TOL)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "worker threads for verification (0 = all cores)");
  app.add_option("--seed", g.seed, "seed for randomized property checks; the CLI itself runs none");
  app.add_flag("--json", g.json, "machine-readable verdicts");

  // construct
  auto* construct = app.add_subcommand("construct", "build a design and self-verify it");
  std::string method, out_path, pattern, unitaries;
  std::optional<int> q, lam, d1, d2, strength;
  std::vector<std::string> inputs;
  construct->add_option("method", method, "mols sols hsols hmols molc oa ls-product moqls "
                        "moqls-product moqlc moqlc-product fill-holes soqls-fill weighting "
                        "hsoqls-product qoa state")->required();
  construct->add_option("--q", q, "field order");
  construct->add_option("--lam", lam, "field element for sols");
  construct->add_option("--d1", d1, "outer order");
  construct->add_option("--d2", d2, "inner order");
  construct->add_option("--strength", strength, "OA strength (2 or 3)");
  construct->add_option("--pattern", pattern, "default | fixture | identity | all-u");
  construct->add_option("--unitaries", unitaries, "fourier | moqls12 | soqls16");
  construct->add_option("-i,--input,--from", inputs, "input design file(s), in order");
  construct->add_option("-o,--output", out_path, "output file (stdout if omitted)");

  // verify
  auto* verify = app.add_subcommand("verify", "check a design file");
  std::string verify_path, property;
  int k = 0;
  bool uniform = false;
  verify->add_option("file", verify_path, "design file")->required();
  verify->add_option("--property", property, "property to check (inferred by default)");
  verify->add_option("--k", k, "strength / uniformity level");
  verify->add_flag("--uniform", uniform, "check k-uniformity of a state");

  // example
  auto* example = app.add_subcommand("example", "write a built-in worked example");
  std::string example_name, example_out;
  bool list = false;
  example->add_option("name", example_name, "NAME or NAME:PART");
  example->add_option("-o,--output", example_out, "output file (stdout if omitted)");
  example->add_flag("--list", list, "list available examples");

  // convert
  auto* convert = app.add_subcommand("convert", "convert between design kinds");
  std::string convert_path, to_kind, convert_out;
  convert->add_option("file", convert_path, "design file")->required();
  convert->add_option("--to", to_kind, "target kind")->required();
  convert->add_option("-o,--output", convert_out, "output file (stdout if omitted)");

  // capability
  auto* cap = app.add_subcommand("capability", "known lower bounds for order d");
  int cap_d = 0;
  cap->add_option("d", cap_d, "order")->required();

  // witness
  auto* witness = app.add_subcommand("witness", "find a non-classicality certificate");
  std::string witness_path;
  witness->add_option("file", witness_path, "design file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  qcd_set_threads(g.threads);
  try {
    if (*construct) {
      nlohmann::json params = nlohmann::json::object();
      if (q) params["q"] = *q;
      if (lam) params["lam"] = *lam;
      if (d1) params["d1"] = *d1;
      if (d2) params["d2"] = *d2;
      if (strength) params["strength"] = *strength;
      if (!pattern.empty()) params["pattern"] = pattern;
      if (!unitaries.empty()) params["unitaries"] = unitaries;
      std::vector<DesignPtr> owned;
      std::vector<const qcd_design*> raw;
      for (const auto& p : inputs) {
        owned.push_back(load(p));
        raw.push_back(owned.back().get());
      }
      qcd_design* d = nullptr;
      check(qcd_construct(method.c_str(), params.dump().c_str(), raw.data(), raw.size(), g.tol,
                          &d),
            "construct " + method);
      DesignPtr result(d);
      const bool to_stdout = out_path.empty() || out_path == "-";
      const int code = report(result.get(), "", 0, g, to_stdout);
      if (code != kExitPass) return code;
      emit(result.get(), out_path);
      return kExitPass;
    }
    if (*verify) {
      DesignPtr d = load(verify_path);
      std::string prop = property;
      if (uniform) prop = "k-uniform";
      return report(d.get(), prop, k, g, false);
    }
    if (*example) {
      if (list) {
        char* s = nullptr;
        check(qcd_example_list(&s), "listing examples");
        auto j = nlohmann::json::parse(take(s));
        if (g.json) {
          std::cout << j.dump(2) << "\n";
        } else {
          for (const auto& e : j) {
            std::cout << e["name"].get<std::string>() << "  (" << e["kind"].get<std::string>()
                      << ")  parts:";
            for (const auto& p : e["parts"]) std::cout << " " << p.get<std::string>();
            std::cout << "\n    " << e["description"].get<std::string>() << "\n";
          }
        }
        return kExitPass;
      }
      if (example_name.empty()) {
        std::cerr << "qcdesign: example needs a NAME (or --list)\n";
        return kExitUsage;
      }
      qcd_design* d = nullptr;
      check(qcd_example(example_name.c_str(), &d), "example " + example_name);
      DesignPtr result(d);
      emit(result.get(), example_out);
      return kExitPass;
    }
    if (*convert) {
      DesignPtr d = load(convert_path);
      qcd_design* c = nullptr;
      check(qcd_convert(d.get(), to_kind.c_str(), g.tol, &c), "convert to " + to_kind);
      DesignPtr result(c);
      emit(result.get(), convert_out);
      return kExitPass;
    }
    if (*cap) {
      char* js = nullptr;
      char* text = nullptr;
      check(qcd_capability(cap_d, &js, &text), "capability");
      const std::string j = take(js), t = take(text);
      std::cout << (g.json ? j + "\n" : t);
      return kExitPass;
    }
    if (*witness) {
      DesignPtr d = load(witness_path);
      char* js = nullptr;
      check(qcd_witness(d.get(), g.tol, &js), "witness");
      auto j = nlohmann::json::parse(take(js));
      if (g.json) {
        std::cout << j.dump() << "\n";
      } else if (!j["found"].get<bool>()) {
        std::cout << "no witness: every cell overlap is 0 or 1\n";
      } else {
        auto addr = [](const nlohmann::json& a) {
          std::string s = "(";
          for (std::size_t i = 0; i < a.size(); ++i)
            s += (i ? "," : "") + std::to_string(a[i].get<int>());
          return s + ")";
        };
        std::printf("grid %d: |<%s|%s>| = %.16g\n", j["grid"].get<int>(),
                    addr(j["first"]).c_str(), addr(j["second"]).c_str(),
                    j["value"].get<double>());
      }
      return kExitPass;
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}
