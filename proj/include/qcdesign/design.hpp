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

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcdesign/classical.hpp"
#include "qcdesign/qdesign.hpp"
#include "qcdesign/qoa.hpp"
#include "qcdesign/verdict.hpp"

namespace qcd {

enum class DesignKind { kLs, kOa, kQls, kQlc, kIqls, kGmoqls, kGmoqlc, kQoa, kState };

std::string kind_name(DesignKind k);
DesignKind parse_kind(const std::string& name);

// Any object the file format can hold. Exactly one payload is populated,
// selected by kind: latin (ls), oa, grids (qls/qlc/iqls/gmoqls/gmoqlc), qoa,
// state.
struct Design {
  DesignKind kind = DesignKind::kLs;
  std::vector<LatinDesign> latin;
  std::optional<OrthogonalArray> oa;
  std::vector<QuantumGrid> grids;
  std::optional<QuantumOrthogonalArray> qoa;
  std::optional<PureState> state;
  std::map<std::string, std::string> metadata;

  static Design of_latin(std::vector<LatinDesign> ls);
  static Design of_oa(OrthogonalArray a);
  static Design of_grids(DesignKind kind, std::vector<QuantumGrid> gs);
  static Design of_qoa(QuantumOrthogonalArray q);
  static Design of_state(PureState s);
};

// File format 1. Complex numbers are [re, im]; holes are null.
nlohmann::json to_json(const Design& d);
Design from_json(const nlohmann::json& j);
std::string serialize(const Design& d, int indent = -1);
Design parse_design(const std::string& text);
Design load_design(const std::string& path);
void save_design(const Design& d, const std::string& path, int indent = -1);

struct Report {
  std::string property;
  Verdict verdict;
  std::string detail;  // extra line, e.g. subset count
};
nlohmann::json report_json(const Report& r);
std::string report_text(const Report& r);

// Property names: latin mols sols hsols molc oa qls moqls soqls diagonal qlc
// moqlc iqls imoqls hsoqls gmoqls gmoqlc qoa k-uniform. Empty = inferred.
std::vector<std::string> property_names();
std::string infer_property(const Design& d);
Report verify_design(const Design& d, std::string property, int k, double tol);

// Construction methods, see construct_methods() for names. params carries
// method options (q, lam, d1, d2, pattern, unitaries, strength).
std::vector<std::string> construct_methods();
Design construct_design(const std::string& method, const nlohmann::json& params,
                        std::span<const Design> inputs, double tol);

Design convert_design(const Design& d, const std::string& to, double tol);

// name or name:part
Design example_design(const std::string& ref);

nlohmann::json capability_json(int d);
std::string capability_text(int d);

// First non-classicality certificate across the grids of d.
std::optional<Witness> design_witness(const Design& d, double tol, int* grid_index);

}  // namespace qcd
