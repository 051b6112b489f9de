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

#include "qcdesign/design.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qcdesign/error.hpp"

namespace qcd {

using nlohmann::json;

namespace {

constexpr int kFormat = 1;
// Dense vectors up to this size are written as plain [re, im] lists.
constexpr std::uint64_t kDenseLimit = 4096;

const std::pair<DesignKind, const char*> kKindNames[] = {
    {DesignKind::kLs, "ls"},         {DesignKind::kOa, "oa"},
    {DesignKind::kQls, "qls"},       {DesignKind::kQlc, "qlc"},
    {DesignKind::kIqls, "iqls"},     {DesignKind::kGmoqls, "gmoqls"},
    {DesignKind::kGmoqlc, "gmoqlc"}, {DesignKind::kQoa, "qoa"},
    {DesignKind::kState, "state"}};

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_of(const json& j) {
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
          ErrorCode::kParse, "complex number must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json sparse_json(const SparseVector& v) {
  json s = json::array();
  for (const auto& e : v.entries)
    s.push_back(json::array({e.index, e.value.real(), e.value.imag()}));
  return json{{"support", std::move(s)}};
}

SparseVector sparse_of(const json& j, std::uint64_t dim) {
  SparseVector v{dim, {}};
  for (const auto& e : j.at("support")) {
    require(e.is_array() && e.size() == 3, ErrorCode::kParse,
            "support entry must be [index, re, im]");
    const auto idx = e[0].get<std::uint64_t>();
    require(idx < dim, ErrorCode::kParse, "support index out of range");
    v.entries.push_back({idx, {e[1].get<double>(), e[2].get<double>()}});
  }
  std::sort(v.entries.begin(), v.entries.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  return v;
}

json dense_json(std::span<const Complex> v) {
  json a = json::array();
  for (Complex z : v) a.push_back(complex_json(z));
  return a;
}

// Cells with few nonzeros go sparse; everything else dense.
json cell_json(const QuantumGrid& g, std::size_t idx) {
  if (g.is_hole(idx)) return nullptr;
  auto c = g.cell(idx);
  std::size_t nz = 0;
  for (Complex z : c) nz += z != Complex{};
  if (c.size() > 16 && nz * 4 < c.size()) return sparse_json(SparseVector::from_dense(c));
  return dense_json(c);
}

json holes_json(const std::vector<std::vector<int>>& holes) {
  json h = json::array();
  for (const auto& x : holes) h.push_back(x);
  return h;
}

std::vector<std::vector<int>> holes_of(const json& j) {
  if (!j.contains("holes")) return {};
  return j.at("holes").get<std::vector<std::vector<int>>>();
}

void check_format(const json& j) {
  require(j.is_object(), ErrorCode::kParse, "design file must be a JSON object");
  require(j.contains("format") && j.at("format").is_number_integer() &&
              j.at("format").get<int>() == kFormat,
          ErrorCode::kParse, "unsupported or missing \"format\" (expected 1)");
  require(j.contains("kind") && j.at("kind").is_string(), ErrorCode::kParse,
          "missing \"kind\"");
}

QuantumGrid grid_of(const json& j, int arity, int order, std::size_t cell_dim, int parties,
                    const std::vector<std::vector<int>>& holes) {
  const auto& cells = j.at("cells");
  require(cells.is_array(), ErrorCode::kParse, "\"cells\" must be a list");
  std::vector<std::optional<ComplexVector>> out;
  out.reserve(cells.size());
  for (const auto& c : cells) {
    if (c.is_null()) {
      out.emplace_back(std::nullopt);
    } else if (c.is_object()) {
      out.emplace_back(sparse_of(c, cell_dim).to_dense());
    } else {
      require(c.is_array() && c.size() == cell_dim, ErrorCode::kParse,
              "cell must hold cell_dim complex entries");
      std::vector<Complex> v;
      v.reserve(cell_dim);
      for (const auto& z : c) v.push_back(complex_of(z));
      out.emplace_back(ComplexVector(std::move(v)));
    }
  }
  return QuantumGrid(arity, order, cell_dim, std::move(out), holes, parties);
}

}  // namespace

std::string kind_name(DesignKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

DesignKind parse_kind(const std::string& name) {
  for (const auto& [kind, n] : kKindNames)
    if (name == n) return kind;
  fail(ErrorCode::kUnknownName, "unknown design kind '" + name + "'");
}

Design Design::of_latin(std::vector<LatinDesign> ls) {
  require(!ls.empty(), ErrorCode::kInvalidArgument, "empty design list");
  Design d;
  d.kind = DesignKind::kLs;
  d.latin = std::move(ls);
  return d;
}

Design Design::of_oa(OrthogonalArray a) {
  Design d;
  d.kind = DesignKind::kOa;
  d.oa = std::move(a);
  return d;
}

Design Design::of_grids(DesignKind kind, std::vector<QuantumGrid> gs) {
  require(!gs.empty(), ErrorCode::kInvalidArgument, "empty grid list");
  Design d;
  d.kind = kind;
  d.grids = std::move(gs);
  return d;
}

Design Design::of_qoa(QuantumOrthogonalArray q) {
  Design d;
  d.kind = DesignKind::kQoa;
  d.qoa = std::move(q);
  return d;
}

Design Design::of_state(PureState s) {
  Design d;
  d.kind = DesignKind::kState;
  d.state = std::move(s);
  return d;
}

json to_json(const Design& d) {
  json j{{"format", kFormat}, {"kind", kind_name(d.kind)}};
  switch (d.kind) {
    case DesignKind::kLs: {
      const auto& f = d.latin.front();
      j["arity"] = f.arity();
      j["order"] = f.order();
      j["holes"] = holes_json(f.holes());
      json ds = json::array();
      for (const auto& l : d.latin) {
        json cells = json::array();
        for (int c : l.cells()) cells.push_back(c == LatinDesign::kHole ? json(nullptr) : json(c));
        ds.push_back(json{{"cells", std::move(cells)}});
      }
      j["designs"] = std::move(ds);
      break;
    }
    case DesignKind::kOa: {
      const auto& a = *d.oa;
      j["rows"] = a.rows();
      j["factors"] = a.factors();
      j["levels"] = a.levels();
      j["strength"] = a.strength();
      json body = json::array();
      for (int r = 0; r < a.rows(); ++r)
        body.push_back(std::vector<int>(a.body().begin() + r * a.factors(),
                                        a.body().begin() + (r + 1) * a.factors()));
      j["body"] = std::move(body);
      break;
    }
    case DesignKind::kQls:
    case DesignKind::kQlc:
    case DesignKind::kIqls:
    case DesignKind::kGmoqls:
    case DesignKind::kGmoqlc: {
      const auto& f = d.grids.front();
      j["arity"] = f.arity();
      j["order"] = f.order();
      j["cell_dim"] = f.cell_dim();
      j["parties"] = f.parties();
      j["holes"] = holes_json(f.holes());
      json ds = json::array();
      for (const auto& g : d.grids) {
        json cells = json::array();
        for (std::size_t c = 0; c < g.cell_count(); ++c) cells.push_back(cell_json(g, c));
        ds.push_back(json{{"cells", std::move(cells)}});
      }
      j["designs"] = std::move(ds);
      break;
    }
    case DesignKind::kQoa: {
      const auto& q = *d.qoa;
      j["parties"] = q.parties();
      j["local_dim"] = q.local_dim();
      j["strength"] = q.strength();
      json rows = json::array();
      for (const auto& r : q.rows()) rows.push_back(sparse_json(r));
      j["rows"] = std::move(rows);
      break;
    }
    case DesignKind::kState: {
      const auto& s = *d.state;
      j["parties"] = s.parties();
      j["local_dim"] = s.local_dim();
      if (s.amplitudes().dim <= kDenseLimit)
        j["amplitudes"] = dense_json(s.dense().view());
      else
        j["support"] = sparse_json(s.amplitudes()).at("support");
      break;
    }
  }
  if (!d.metadata.empty()) j["metadata"] = d.metadata;
  return j;
}

Design from_json(const json& j) {
  try {
    check_format(j);
    Design d;
    const DesignKind kind = parse_kind(j.at("kind").get<std::string>());
    switch (kind) {
      case DesignKind::kLs: {
        const int arity = j.at("arity").get<int>(), order = j.at("order").get<int>();
        const auto holes = holes_of(j);
        std::vector<LatinDesign> ls;
        for (const auto& x : j.at("designs")) {
          std::vector<int> cells;
          for (const auto& c : x.at("cells"))
            cells.push_back(c.is_null() ? LatinDesign::kHole : c.get<int>());
          ls.emplace_back(arity, order, std::move(cells), holes);
        }
        d = Design::of_latin(std::move(ls));
        break;
      }
      case DesignKind::kOa: {
        std::vector<int> body;
        for (const auto& r : j.at("body")) {
          auto row = r.get<std::vector<int>>();
          require(int(row.size()) == j.at("factors").get<int>(), ErrorCode::kParse,
                  "OA row length differs from factors");
          body.insert(body.end(), row.begin(), row.end());
        }
        d = Design::of_oa(OrthogonalArray(j.at("rows").get<int>(), j.at("factors").get<int>(),
                                          j.at("levels").get<int>(),
                                          j.at("strength").get<int>(), std::move(body)));
        break;
      }
      case DesignKind::kQoa: {
        const int n = j.at("parties").get<int>(), ld = j.at("local_dim").get<int>();
        require(n >= 1 && ld >= 1, ErrorCode::kParse, "parties and local_dim must be positive");
        std::vector<SparseVector> rows;
        for (const auto& r : j.at("rows")) rows.push_back(sparse_of(r, ipow(ld, n)));
        d = Design::of_qoa(
            QuantumOrthogonalArray(n, ld, j.at("strength").get<int>(), std::move(rows)));
        break;
      }
      case DesignKind::kState: {
        const int n = j.at("parties").get<int>(), ld = j.at("local_dim").get<int>();
        require(n >= 1 && ld >= 1, ErrorCode::kParse, "parties and local_dim must be positive");
        if (j.contains("amplitudes")) {
          std::vector<Complex> v;
          for (const auto& z : j.at("amplitudes")) v.push_back(complex_of(z));
          d = Design::of_state(PureState(n, ld, ComplexVector(std::move(v))));
        } else {
          d = Design::of_state(
              PureState(n, ld, sparse_of(json{{"support", j.at("support")}}, ipow(ld, n))));
        }
        break;
      }
      default: {
        const int arity = j.at("arity").get<int>(), order = j.at("order").get<int>();
        const auto cell_dim = j.at("cell_dim").get<std::size_t>();
        const int parties = j.value("parties", 1);
        const auto holes = holes_of(j);
        std::vector<QuantumGrid> gs;
        for (const auto& x : j.at("designs"))
          gs.push_back(grid_of(x, arity, order, cell_dim, parties, holes));
        d = Design::of_grids(kind, std::move(gs));
      }
    }
    if (j.contains("metadata"))
      d.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
    return d;
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, std::string("malformed design file: ") + e.what());
  }
}

std::string serialize(const Design& d, int indent) { return to_json(d).dump(indent); }

Design parse_design(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

Design load_design(const std::string& path) {
  std::ifstream in(path);
  require(bool(in), ErrorCode::kIo, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_design(ss.str());
}

void save_design(const Design& d, const std::string& path, int indent) {
  std::ofstream out(path);
  require(bool(out), ErrorCode::kIo, "cannot write '" + path + "'");
  out << serialize(d, indent) << '\n';
  require(bool(out), ErrorCode::kIo, "write to '" + path + "' failed");
}

json report_json(const Report& r) {
  json j{{"property", r.property},
         {"passed", r.verdict.passed},
         {"checks", r.verdict.checks}};
  if (!r.verdict.passed) {
    j["condition"] = r.verdict.condition;
    j["where"] = r.verdict.where;
    j["deviation"] = r.verdict.deviation;
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

std::string report_text(const Report& r) {
  std::string s = r.property + ": " + r.verdict.summary();
  if (!r.detail.empty()) s += "\n" + r.detail;
  return s;
}

}  // namespace qcd
