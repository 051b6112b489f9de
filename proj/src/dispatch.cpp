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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "qcdesign/construct.hpp"
#include "qcdesign/design.hpp"
#include "qcdesign/error.hpp"
#include "qcdesign/fixtures.hpp"

namespace qcd {

using nlohmann::json;

namespace {

bool is_grid_kind(DesignKind k) {
  return k == DesignKind::kQls || k == DesignKind::kQlc || k == DesignKind::kIqls ||
         k == DesignKind::kGmoqls || k == DesignKind::kGmoqlc;
}

// Quantum view of a design; classical designs are embedded.
std::vector<QuantumGrid> grids_of(const Design& d) {
  if (is_grid_kind(d.kind)) return d.grids;
  if (d.kind == DesignKind::kLs) {
    std::vector<QuantumGrid> out;
    for (const auto& l : d.latin) out.push_back(embed_classical(l));
    return out;
  }
  fail(ErrorCode::kInvalidArgument, "a " + kind_name(d.kind) + " design has no grids");
}

const std::vector<LatinDesign>& latin_of(const Design& d) {
  require(d.kind == DesignKind::kLs, ErrorCode::kInvalidArgument,
          "expected a classical (ls) design, got " + kind_name(d.kind));
  return d.latin;
}

DesignKind grid_kind(const std::vector<QuantumGrid>& gs) {
  if (!gs.front().holes().empty()) return DesignKind::kIqls;
  return gs.front().arity() == 3 ? DesignKind::kQlc : DesignKind::kQls;
}

Design grids_design(std::vector<QuantumGrid> gs) {
  const DesignKind k = grid_kind(gs);
  return Design::of_grids(k, std::move(gs));
}

int param_int(const json& p, const char* key) {
  require(p.contains(key) && p.at(key).is_number_integer(), ErrorCode::kInvalidArgument,
          std::string("missing integer parameter '") + key + "'");
  return p.at(key).get<int>();
}

std::string param_str(const json& p, const char* key, const std::string& dflt) {
  if (!p.contains(key) || p.at(key).is_null()) return dflt;
  require(p.at(key).is_string(), ErrorCode::kInvalidArgument,
          std::string("parameter '") + key + "' must be a string");
  return p.at(key).get<std::string>();
}

void need_inputs(std::span<const Design> inputs, std::size_t n, const std::string& method) {
  require(inputs.size() == n, ErrorCode::kInvalidArgument,
          method + " takes " + std::to_string(n) + " input design(s), got " +
              std::to_string(inputs.size()));
}

std::vector<LatinDesign> first_n(std::vector<LatinDesign> v, std::size_t n,
                                 const std::string& what) {
  require(v.size() >= n, ErrorCode::kInvalidArgument,
          what + " gives only " + std::to_string(v.size()) + " design(s), need " +
              std::to_string(n));
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(n), v.end());
  return v;
}

std::vector<LatinDesign> prime_power_mols(int q, std::size_t n) {
  require(prime_power(q).has_value(), ErrorCode::kNotPrimePower,
          std::to_string(q) + " is not a prime power");
  return first_n(mols_prime_power(q), n, "order " + std::to_string(q));
}

std::vector<LatinDesign> prime_power_molc(int q, std::size_t n) {
  return first_n(oa_to_molc(oa_strength3_rs(q)), n, "order " + std::to_string(q));
}

std::vector<TauPattern> patterns_for(const std::string& name,
                                     const std::vector<LatinDesign>& outer) {
  if (name == "default") return default_patterns(outer);
  std::vector<TauPattern> out;
  for (const auto& l : outer) {
    if (name == "identity")
      out.push_back(identity_pattern(l.arity(), l.order()));
    else if (name == "all-u")
      out.push_back(all_u_pattern(l.arity(), l.order()));
    else
      fail(ErrorCode::kUnknownName, "unknown pattern '" + name + "'");
  }
  return out;
}

// Cyclic QLS(n) with Fourier cells: (a,b) -> F|a+b mod n>.
QuantumGrid fourier_qls(int n) {
  const ComplexMatrix f = fourier_matrix(n);
  std::vector<std::optional<ComplexVector>> cells;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) cells.emplace_back(f.column((a + b) % n));
  return QuantumGrid(2, n, std::size_t(n), std::move(cells));
}

Design lift(const std::string& method, const json& params, std::span<const Design> inputs,
            double tol) {
  const bool cube = method == "moqlc";
  const std::size_t t = cube ? 3 : 2;
  std::string pattern = param_str(params, "pattern", "default");
  std::vector<LatinDesign> outer, inner;
  std::vector<TauPattern> patterns;
  std::string preset;
  if (pattern == "fixture") {
    require(inputs.empty(), ErrorCode::kInvalidArgument,
            "the fixture pattern takes no input designs");
    if (cube) {
      const auto& f = fixtures::moqlc16();
      require(params.value("d1", 4) == 4 && params.value("d2", 4) == 4,
              ErrorCode::kInvalidArgument, "the fixture cube pattern needs d1 = d2 = 4");
      outer = inner = f.cubes;
      patterns = f.patterns;
      preset = "soqls16";
    } else {
      const auto& f = fixtures::moqls12();
      require(params.value("d1", 4) == 4 && params.value("d2", 3) == 3,
              ErrorCode::kInvalidArgument, "the fixture square pattern needs d1 = 4, d2 = 3");
      outer = f.outer;
      inner = f.inner;
      patterns = f.patterns;
      preset = "moqls12";
    }
  } else {
    if (inputs.size() == 2) {
      outer = latin_of(inputs[0]);
      inner = latin_of(inputs[1]);
    } else {
      need_inputs(inputs, 0, method);
      const int d1 = param_int(params, "d1"), d2 = param_int(params, "d2");
      outer = cube ? prime_power_molc(d1, t) : prime_power_mols(d1, t);
      inner = cube ? prime_power_molc(d2, t) : prime_power_mols(d2, t);
    }
    patterns = patterns_for(pattern, outer);
    preset = "fourier";
  }
  preset = param_str(params, "unitaries", preset);
  const BlockUnitary u =
      fixtures::unitary_preset(preset, outer.front().order(), inner.front().order());
  auto gs = cube ? moqlc_from_molc(outer, inner, u, patterns, tol)
                 : moqls_from_mols(outer, inner, u, patterns, tol);
  return grids_design(std::move(gs));
}

Design construct_impl(const std::string& method, const json& params,
                      std::span<const Design> inputs, double tol) {
  if (method == "mols") {
    need_inputs(inputs, 0, method);
    return Design::of_latin(mols_prime_power(param_int(params, "q")));
  }
  if (method == "sols") {
    need_inputs(inputs, 0, method);
    std::optional<int> lam;
    if (params.contains("lam") && !params.at("lam").is_null()) lam = param_int(params, "lam");
    return Design::of_latin({sols_prime_power(param_int(params, "q"), lam)});
  }
  if (method == "hsols") {
    need_inputs(inputs, 0, method);
    return Design::of_latin({hsols_unit_holes(param_int(params, "q"))});
  }
  if (method == "hmols") {
    need_inputs(inputs, 0, method);
    auto [a, b] = hmols_unit_holes(param_int(params, "q"));
    return Design::of_latin({a, b});
  }
  if (method == "molc") {
    need_inputs(inputs, 0, method);
    auto cubes = oa_to_molc(oa_strength3_rs(param_int(params, "q")));
    require(cubes.size() >= 3, ErrorCode::kInvalidArgument,
            "q = " + std::to_string(param_int(params, "q")) + " gives fewer than 3 cubes; use q >= 4");
    return Design::of_latin(std::move(cubes));
  }
  if (method == "oa") {
    if (inputs.size() == 1) {
      const auto& ls = latin_of(inputs[0]);
      return Design::of_oa(ls.front().arity() == 3 ? molc_to_oa(ls) : mols_to_oa(ls));
    }
    need_inputs(inputs, 0, method);
    const int q = param_int(params, "q");
    const int strength = params.value("strength", 2);
    if (strength == 3) return Design::of_oa(oa_strength3_rs(q));
    require(strength == 2, ErrorCode::kInvalidArgument, "strength must be 2 or 3");
    return Design::of_oa(mols_to_oa(mols_prime_power(q)));
  }
  if (method == "ls-product") {
    need_inputs(inputs, 2, method);
    const auto& a = latin_of(inputs[0]);
    const auto& b = latin_of(inputs[1]);
    std::vector<LatinDesign> out;
    for (std::size_t s = 0; s < std::min(a.size(), b.size()); ++s) out.push_back(direct_product_ls(a[s], b[s]));
    return Design::of_latin(std::move(out));
  }
  if (method == "moqls" || method == "moqlc") return lift(method, params, inputs, tol);
  if (method == "moqls-product" || method == "moqlc-product") {
    need_inputs(inputs, 2, method);
    auto a = grids_of(inputs[0]), b = grids_of(inputs[1]);
    // MacNeish: the product set is as large as the smaller factor set
    const std::size_t n = std::min(a.size(), b.size());
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(n), a.end());
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(n), b.end());
    return grids_design(method == "moqls-product" ? moqls_direct_product(a, b, tol)
                                                  : moqlc_direct_product(a, b, tol));
  }
  if (method == "fill-holes") {
    require(!inputs.empty(), ErrorCode::kInvalidArgument, "fill-holes needs an input square");
    const auto base = grids_of(inputs[0]);
    require(base.size() == 1, ErrorCode::kInvalidArgument,
            "fill-holes takes a single incomplete square");
    std::vector<QuantumGrid> fillers;
    for (std::size_t i = 1; i < inputs.size(); ++i)
      for (auto& g : grids_of(inputs[i])) fillers.push_back(std::move(g));
    if (fillers.empty())
      for (const auto& h : base[0].holes()) fillers.push_back(fourier_qls(int(h.size())));
    return grids_design({fill_holes(base[0], fillers, tol)});
  }
  if (method == "soqls-fill") {
    need_inputs(inputs, 2, method);
    const auto h = grids_of(inputs[0]), s = grids_of(inputs[1]);
    require(h.size() == 1 && s.size() == 1, ErrorCode::kInvalidArgument,
            "soqls-fill takes one incomplete square and one square");
    const int n = int(h[0].holes().size()), d1 = s[0].order();
    const BlockUnitary u =
        fixtures::unitary_preset(param_str(params, "unitaries", "fourier"), n, d1);
    return grids_design({soqls_fill(h[0], s[0], u, tol)});
  }
  if (method == "weighting") {
    need_inputs(inputs, 2, method);
    return grids_design(weighting(grids_of(inputs[0]), grids_of(inputs[1]), tol));
  }
  if (method == "hsoqls-product") {
    need_inputs(inputs, 2, method);
    const auto h = grids_of(inputs[0]);
    require(h.size() == 1, ErrorCode::kInvalidArgument,
            "hsoqls-product takes a single incomplete square");
    return grids_design({hsoqls_product(h[0], grids_of(inputs[1]), tol)});
  }
  if (method == "qoa") {
    need_inputs(inputs, 1, method);
    // classical inputs are embedded first; plain convert refuses them
    if (inputs[0].kind == DesignKind::kLs)
      return convert_design(grids_design(grids_of(inputs[0])), "qoa", tol);
    return convert_design(inputs[0], "qoa", tol);
  }
  if (method == "state") {
    need_inputs(inputs, 1, method);
    return convert_design(inputs[0], "state", tol);
  }
  fail(ErrorCode::kUnknownName, "unknown construction method '" + method + "'");
}

std::size_t binomial(unsigned n, unsigned k) {
  std::size_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Verdict each(const std::vector<QuantumGrid>& gs, Verdict (*f)(const QuantumGrid&, double),
             double tol) {
  Verdict v;
  for (const auto& g : gs) v.merge(f(g, tol));
  return v;
}

Verdict each_latin(const std::vector<LatinDesign>& ls, ClassicalProperty p) {
  Verdict v;
  for (const auto& l : ls) v.merge(verify_classical(std::span(&l, 1), p));
  return v;
}

}  // namespace

std::vector<std::string> property_names() {
  return {"latin", "mols", "sols",  "hsols",  "molc",   "oa",     "qls",
          "moqls", "soqls", "diagonal", "qlc", "moqlc", "iqls", "imoqls",
          "hsoqls", "gmoqls", "gmoqlc", "qoa",  "k-uniform"};
}

std::string infer_property(const Design& d) {
  if (auto it = d.metadata.find("property"); it != d.metadata.end()) return it->second;
  switch (d.kind) {
    case DesignKind::kLs: {
      const auto& f = d.latin.front();
      if (f.arity() == 3) return d.latin.size() >= 3 ? "molc" : "latin";
      if (!f.holes().empty()) {
        std::size_t covered = 0;
        for (const auto& h : f.holes()) covered += h.size();
        if (d.latin.size() == 1 && covered == std::size_t(f.order())) return "hsols";
      }
      return d.latin.size() >= 2 ? "mols" : "latin";
    }
    case DesignKind::kOa:
      return "oa";
    case DesignKind::kQls:
      return d.grids.size() >= 2 ? "moqls" : "qls";
    case DesignKind::kQlc:
      return d.grids.size() >= 3 ? "moqlc" : "qlc";
    case DesignKind::kIqls:
      return d.grids.size() >= 2 ? "imoqls" : "iqls";
    case DesignKind::kGmoqls:
      return "gmoqls";
    case DesignKind::kGmoqlc:
      return "gmoqlc";
    case DesignKind::kQoa:
      return "qoa";
    case DesignKind::kState:
      return "k-uniform";
  }
  return "";
}

Report verify_design(const Design& d, std::string property, int k, double tol) {
  if (property.empty()) property = infer_property(d);
  Report r{property, {}, {}};
  auto wrong = [&] {
    fail(ErrorCode::kInvalidArgument,
         "property '" + property + "' does not apply to a " + kind_name(d.kind) + " design");
  };
  if (property == "latin" || property == "mols" || property == "sols" ||
      property == "hsols" || property == "molc") {
    if (d.kind != DesignKind::kLs) wrong();
    if (property == "latin") r.verdict = verify_classical(d.latin, ClassicalProperty::kLatin);
    if (property == "mols") r.verdict = verify_classical(d.latin, ClassicalProperty::kMolsPairwise);
    if (property == "molc") r.verdict = verify_classical(d.latin, ClassicalProperty::kMolcWithB);
    if (property == "sols") r.verdict = each_latin(d.latin, ClassicalProperty::kSols);
    if (property == "hsols") r.verdict = each_latin(d.latin, ClassicalProperty::kHsols);
  } else if (property == "oa") {
    if (d.kind != DesignKind::kOa) wrong();
    r.verdict = verify_oa(*d.oa);
  } else if (property == "qoa") {
    if (d.kind != DesignKind::kQoa) wrong();
    const int kk = k > 0 ? k : d.qoa->strength();
    r.verdict = verify_qoa(*d.qoa, kk, tol);
    r.detail = std::to_string(binomial(d.qoa->parties(), kk)) + " subsets of " +
               std::to_string(kk) + " parties";
  } else if (property == "k-uniform") {
    if (d.kind != DesignKind::kState) wrong();
    const int kk = k > 0 ? k : d.state->parties() / 2;
    r.verdict = verify_k_uniform(*d.state, kk, tol);
    r.detail = std::to_string(binomial(d.state->parties(), kk)) + " subsets of " +
               std::to_string(kk) + " parties";
  } else {
    if (!is_grid_kind(d.kind) && d.kind != DesignKind::kLs) wrong();
    const auto gs = grids_of(d);
    if (property == "qls") r.verdict = each(gs, verify_qls, tol);
    else if (property == "qlc") r.verdict = each(gs, verify_qlc, tol);
    else if (property == "iqls") r.verdict = each(gs, verify_iqls, tol);
    else if (property == "soqls") r.verdict = each(gs, verify_soqls, tol);
    else if (property == "diagonal") r.verdict = each(gs, diagonal_basis_check, tol);
    else if (property == "hsoqls") r.verdict = each(gs, verify_hsoqls, tol);
    else if (property == "gmoqls") r.verdict = each(gs, verify_gmoqls, tol);
    else if (property == "gmoqlc") r.verdict = each(gs, verify_gmoqlc, tol);
    else if (property == "moqls") r.verdict = verify_moqls(gs, tol);
    else if (property == "moqlc") r.verdict = verify_moqlc(gs, tol);
    else if (property == "imoqls") r.verdict = verify_imoqls(gs, tol);
    else fail(ErrorCode::kUnknownName, "unknown property '" + property + "'");
  }
  return r;
}

std::vector<std::string> construct_methods() {
  return {"mols",  "sols",          "hsols",         "hmols",      "molc",
          "oa",    "ls-product",    "moqls",         "moqls-product", "moqlc",
          "moqlc-product", "fill-holes", "soqls-fill", "weighting", "hsoqls-product",
          "qoa",   "state"};
}

Design construct_design(const std::string& method, const json& params,
                        std::span<const Design> inputs, double tol) {
  Design d = construct_impl(method, params, inputs, tol);
  d.metadata["construction"] = method;
  return d;
}

Design convert_design(const Design& d, const std::string& to, double tol) {
  const DesignKind target = parse_kind(to);
  auto illegal = [&]() -> Design {
    fail(ErrorCode::kIllegalConversion,
         "cannot convert a " + kind_name(d.kind) + " design to " + to);
  };
  switch (d.kind) {
    case DesignKind::kLs: {
      const int arity = d.latin.front().arity();
      if (target == DesignKind::kOa)
        return Design::of_oa(arity == 3 ? molc_to_oa(d.latin) : mols_to_oa(d.latin));
      if ((target == DesignKind::kQls && arity == 2 && d.latin.front().holes().empty()) ||
          (target == DesignKind::kQlc && arity == 3) ||
          (target == DesignKind::kIqls && !d.latin.front().holes().empty()))
        return Design::of_grids(target, grids_of(d));
      return illegal();
    }
    case DesignKind::kOa:
      if (target != DesignKind::kLs) return illegal();
      if (d.oa->strength() == 3) return Design::of_latin(oa_to_molc(*d.oa));
      return Design::of_latin(oa_to_mols(*d.oa));
    case DesignKind::kQls:
    case DesignKind::kQlc: {
      const bool cube = d.kind == DesignKind::kQlc;
      if (target == DesignKind::kQoa)
        return Design::of_qoa(cube ? moqlc_to_qoa(d.grids, tol) : moqls_to_qoa(d.grids, tol));
      if (target == (cube ? DesignKind::kGmoqlc : DesignKind::kGmoqls)) {
        // Check the set before merging cells.
        Verdict v = cube ? (d.grids.size() >= 3 ? verify_moqlc(d.grids, tol)
                                                : each(d.grids, verify_qlc, tol))
                         : (d.grids.size() >= 2 ? verify_moqls(d.grids, tol)
                                                : each(d.grids, verify_qls, tol));
        require(v.passed, ErrorCode::kVerificationFailed, "input set: " + v.summary());
        return Design::of_grids(target, {product_cells(d.grids)});
      }
      return illegal();
    }
    case DesignKind::kGmoqls:
    case DesignKind::kGmoqlc:
      if (target != DesignKind::kQoa) return illegal();
      require(d.grids.size() == 1, ErrorCode::kInvalidArgument,
              "a generalized design file holds one grid");
      return Design::of_qoa(d.kind == DesignKind::kGmoqls ? gmoqls_to_qoa(d.grids[0], tol)
                                                          : gmoqlc_to_qoa(d.grids[0], tol));
    case DesignKind::kQoa:
      if (target == DesignKind::kGmoqls) return Design::of_grids(target, {qoa_to_gmoqls(*d.qoa, tol)});
      if (target == DesignKind::kGmoqlc) return Design::of_grids(target, {qoa_to_gmoqlc(*d.qoa, tol)});
      if (target == DesignKind::kState) return Design::of_state(state_from_qoa(*d.qoa, tol));
      return illegal();
    default:
      return illegal();
  }
}

Design example_design(const std::string& ref) {
  const auto colon = ref.find(':');
  const std::string name = ref.substr(0, colon);
  const auto& cat = fixtures::catalog();
  auto it = std::find_if(cat.begin(), cat.end(), [&](const auto& i) { return i.name == name; });
  require(it != cat.end(), ErrorCode::kUnknownName, "unknown example '" + name + "'");
  const std::string part = colon == std::string::npos ? it->parts.front() : ref.substr(colon + 1);
  require(std::find(it->parts.begin(), it->parts.end(), part) != it->parts.end(),
          ErrorCode::kUnknownName, "example '" + name + "' has no part '" + part + "'");

  Design d;
  std::string property;
  auto one = [](DesignKind k, const QuantumGrid& g) { return Design::of_grids(k, {g}); };
  if (name == "soqls14") {
    d = one(DesignKind::kQls, fixtures::soqls14());
    property = "soqls";
  } else if (name == "moqls12") {
    const auto& f = fixtures::moqls12();
    if (part == "pair") d = Design::of_grids(DesignKind::kQls, f.pair);
    if (part == "phi") d = one(DesignKind::kQls, f.pair[0]);
    if (part == "psi") d = one(DesignKind::kQls, f.pair[1]);
    if (part == "outer") d = Design::of_latin(f.outer);
    if (part == "inner") d = Design::of_latin(f.inner);
    if (f.u0_repaired) d.metadata["repair_u0"] = "1/sqrt(3) prefactor added; unitary as printed has column norm sqrt(3)";
    if (f.u2_repaired) d.metadata["repair_u2"] = "bottom-right entry 1 instead of 1/sqrt(2); unitary as printed has column norm 1/sqrt(2)";
  } else if (name == "qls4_7") {
    const auto& f = fixtures::qls4_7();
    if (part == "phi") d = one(DesignKind::kIqls, f.phi);
    if (part == "phi_filled") d = one(DesignKind::kQls, f.phi_filled);
    if (part == "psi") d = one(DesignKind::kIqls, f.psi);
    if (part == "psi_filled") d = one(DesignKind::kQls, f.psi_filled);
  } else if (name == "soqls16") {
    const auto& f = fixtures::soqls16();
    if (part == "square") d = one(DesignKind::kQls, f.square), property = "soqls";
    if (part == "hsols") d = one(DesignKind::kIqls, f.hsols), property = "hsoqls";
    if (part == "sols") d = one(DesignKind::kQls, f.sols), property = "soqls";
    d.metadata["repair_hsols"] =
        "4x4 blocks below the diagonal transposed; the tabulated grid is not orthogonal to its transpose";
  } else if (name == "hsoqls3_4") {
    const auto& f = fixtures::hsoqls3_4();
    if (part == "square") d = one(DesignKind::kIqls, f.square), property = "hsoqls";
    if (part == "psi") d = one(DesignKind::kIqls, f.psi), property = "hsoqls";
    if (part == "pair") d = Design::of_grids(DesignKind::kQls, f.pair);
    std::string diffs;
    for (const auto& t : f.table_discrepancies)
      diffs += (diffs.empty() ? "" : "; ") + std::string("(") + std::to_string(t[0]) + "," +
               std::to_string(t[1]) + ") tabulated |" + std::to_string(t[2]) + ">";
    d.metadata["table_discrepancies"] = diffs + "; construction output kept";
  } else if (name == "moqlc16") {
    const auto& f = fixtures::moqlc16();
    if (part == "triple") d = Design::of_grids(DesignKind::kQlc, f.triple);
    if (part == "phi") d = one(DesignKind::kQlc, f.triple[0]);
    if (part == "psi") d = one(DesignKind::kQlc, f.triple[1]);
    if (part == "upsilon") d = one(DesignKind::kQlc, f.triple[2]);
    if (part == "cubes") d = Design::of_latin(f.cubes);
  } else if (name == "qoa_bell") {
    d = Design::of_qoa(fixtures::qoa_bell());
  } else if (name == "qoa343") {
    d = Design::of_qoa(fixtures::qoa343());
  }
  d.metadata["example"] = name + ":" + part;
  d.metadata["description"] = it->description;
  if (!property.empty()) d.metadata["property"] = property;
  return d;
}

json capability_json(int d) {
  const Capability c = capability(d);
  auto entry = [](const BoundEntry& b) {
    return json{{"value", b.value}, {"exact", b.exact}, {"rule", b.rule}};
  };
  return json{{"d", c.d}, {"m", entry(c.m)}, {"M", entry(c.M)}, {"c", entry(c.c)},
              {"C", entry(c.C)}};
}

std::string capability_text(int d) {
  const Capability c = capability(d);
  std::ostringstream out;
  auto line = [&](const char* sym, const char* what, const BoundEntry& b) {
    out << sym << "(" << d << ") ";
    if (b.value == 0)
      out << "no bound known";
    else
      out << (b.exact ? "= " : "≥ ") << b.value;
    out << "  " << what;
    if (!b.rule.empty()) out << "  [" << b.rule << "]";
    out << "\n";
  };
  line("m", "classical MOLS", c.m);
  line("M", "non-classical MOQLS", c.M);
  line("c", "classical MOLC with property (B)", c.c);
  line("C", "non-classical MOQLC", c.C);
  return out.str();
}

std::optional<Witness> design_witness(const Design& d, double tol, int* grid_index) {
  const auto gs = grids_of(d);
  for (std::size_t i = 0; i < gs.size(); ++i)
    if (auto w = classicality_witness(gs[i], tol)) {
      if (grid_index) *grid_index = int(i);
      return w;
    }
  return std::nullopt;
}

}  // namespace qcd
