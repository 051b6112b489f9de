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

#include "qcdesign/qoa.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "qcdesign/error.hpp"
#include "qcdesign/parallel.hpp"

namespace qcd {

namespace {

constexpr double kStructuralTol = 1e-6;
constexpr double kHermiticityTol = 1e-12;

void normalize_sparse(SparseVector& v) {
  std::sort(v.entries.begin(), v.entries.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  std::vector<SparseEntry> merged;
  for (const auto& e : v.entries) {
    require(e.index < v.dim, ErrorCode::kInvalidArgument, "amplitude index out of range");
    if (!merged.empty() && merged.back().index == e.index)
      merged.back().value += e.value;
    else
      merged.push_back(e);
  }
  std::erase_if(merged, [](const auto& e) { return e.value == Complex{}; });
  v.entries = std::move(merged);
}

std::vector<std::vector<unsigned>> subsets(unsigned n, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  if (k > n) return out;
  std::vector<unsigned> idx(k);
  std::iota(idx.begin(), idx.end(), 0u);
  while (true) {
    out.push_back(idx);
    int i = int(k) - 1;
    while (i >= 0 && idx[i] == n - k + unsigned(i)) --i;
    if (i < 0) return out;
    ++idx[i];
    for (unsigned j = unsigned(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string set_str(const std::vector<unsigned>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string digits_str(std::uint64_t x, unsigned n, unsigned d) {
  std::string s(n, '0');
  std::string out = "|";
  std::vector<unsigned> dig(n);
  for (unsigned q = n; q-- > 0;) {
    dig[q] = unsigned(x % d);
    x /= d;
  }
  for (unsigned q = 0; q < n; ++q) out += (q && d > 10 ? "," : "") + std::to_string(dig[q]);
  return out + ">";
}

// Checks every kept subset of a state against scale * identity. The label
// callback names the condition for a subset.
Verdict check_reductions(const SparseVector& state, unsigned parties, unsigned d,
                         const std::vector<std::vector<unsigned>>& keeps, double scale,
                         double tol,
                         const std::function<std::string(const std::vector<unsigned>&)>& name) {
  std::vector<Verdict> parts(keeps.size());
  parallel_for(keeps.size(), [&](std::size_t s) {
    PartySplit split{parties, d, keeps[s]};
    const std::uint64_t labels = ipow(d, unsigned(keeps[s].size()));
    GramCheck gc = gram_check(split_entries(state, split), labels, scale);
    Verdict& v = parts[s];
    const std::string where = "parties " + set_str(keeps[s]);
    v.check(gc.hermiticity, kHermiticityTol, "reduced matrix Hermitian", where);
    if (!v.check(gc.deviation, tol, name(keeps[s]), where)) {
      const unsigned k = unsigned(keeps[s].size());
      v.where += " entry " + digits_str(gc.row, k, d) + "<" +
                 digits_str(gc.col, k, d).substr(1);
    }
  });
  Verdict v;
  for (const auto& p : parts) v.merge(p);
  return v;
}

// |address> (x) cell for every non-hole cell of a generalized grid.
SparseVector assemble_grid_state(const QuantumGrid& g) {
  SparseVector s;
  s.dim = g.cell_count() * g.cell_dim();
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    auto cell = g.cell(c);
    for (std::size_t x = 0; x < cell.size(); ++x)
      if (cell[x] != Complex{}) s.entries.push_back({c * g.cell_dim() + x, cell[x]});
  }
  return s;
}

int cell_parties(const QuantumGrid& g) {
  const unsigned d = unsigned(g.order());
  int t = 0;
  std::uint64_t p = 1;
  while (p < g.cell_dim()) {
    p *= d;
    ++t;
  }
  require(p == g.cell_dim() && d >= 2, ErrorCode::kDimensionMismatch,
          "cell dimension " + std::to_string(g.cell_dim()) + " is not a power of " +
              std::to_string(d));
  return t;
}

Verdict verify_generalized(const QuantumGrid& g, int arity, double tol) {
  require(g.arity() == arity, ErrorCode::kInvalidArgument,
          arity == 2 ? "expected a square grid" : "expected a cube grid");
  require(g.holes().empty(), ErrorCode::kInvalidArgument,
          "generalized designs have no holes");
  const int t = cell_parties(g);
  const unsigned n = unsigned(arity + t);
  static const char* kSquare[] = {"two-party sums", "single-party sums",
                                  "cell orthogonality"};
  static const char* kCube[] = {"three-party sums", "two-party sums",
                                "single-party sums", "cell orthogonality"};
  return check_reductions(
      assemble_grid_state(g), n, unsigned(g.order()), subsets(n, unsigned(arity)), 1.0, tol,
      [&](const std::vector<unsigned>& keep) {
        const int addr = int(std::count_if(keep.begin(), keep.end(),
                                           [&](unsigned p) { return p < unsigned(arity); }));
        return std::string(arity == 2 ? kSquare[addr] : kCube[addr]);
      });
}

QuantumGrid qoa_to_generalized(const QuantumOrthogonalArray& q, int arity, double tol) {
  const int d = q.local_dim();
  const std::size_t cells = ipow(d, arity);
  require(q.strength() == arity && q.parties() > arity && q.row_count() == cells,
          ErrorCode::kInvalidArgument,
          "need a QOA(d^" + std::to_string(arity) + ", t+" + std::to_string(arity) +
              ", d, " + std::to_string(arity) + ")");
  const int t = q.parties() - arity;
  const std::uint64_t cd = ipow(d, t);
  std::vector<Complex> amps(cells * cd);
  std::vector<bool> filled(cells, false);
  for (std::size_t r = 0; r < q.row_count(); ++r) {
    const auto& row = q.rows()[r];
    std::vector<double> mass(cells, 0.0);
    for (const auto& e : row.entries) mass[e.index / cd] += std::norm(e.value);
    const std::size_t block = std::max_element(mass.begin(), mass.end()) - mass.begin();
    double outside = 0;
    for (std::size_t b = 0; b < cells; ++b)
      if (b != block) outside += mass[b];
    require(std::sqrt(outside) <= tol, ErrorCode::kInvalidArgument,
            "row " + std::to_string(r) + " is not supported on a single address");
    require(!filled[block], ErrorCode::kInvalidArgument,
            "address " + std::to_string(block) + " appears in two rows");
    filled[block] = true;
    for (const auto& e : row.entries)
      if (e.index / cd == block) amps[block * cd + e.index % cd] = e.value;
  }
  return QuantumGrid(arity, d, cd, std::move(amps), std::vector<bool>(cells, false), {}, t);
}

QuantumOrthogonalArray generalized_to_qoa(const QuantumGrid& g, int arity) {
  const int t = cell_parties(g);
  std::vector<SparseVector> rows;
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    SparseVector row;
    row.dim = g.cell_count() * g.cell_dim();
    auto cell = g.cell(c);
    for (std::size_t x = 0; x < cell.size(); ++x)
      if (cell[x] != Complex{}) row.entries.push_back({c * g.cell_dim() + x, cell[x]});
    rows.push_back(std::move(row));
  }
  return QuantumOrthogonalArray(arity + t, g.order(), arity, std::move(rows));
}

QuantumOrthogonalArray product_rows(std::span<const QuantumGrid> gs, int arity) {
  const int d = gs.front().order();
  const int t = static_cast<int>(gs.size());
  std::vector<SparseVector> rows;
  const std::uint64_t cells = gs.front().cell_count();
  for (std::uint64_t c = 0; c < cells; ++c) {
    SparseVector row;
    row.dim = 1;
    row.entries.push_back({0, 1.0});
    for (const auto& g : gs) row = sparse_tensor(row, g.sparse_cell(c));
    const std::uint64_t cd = row.dim;
    row.dim = cells * cd;
    for (auto& e : row.entries) e.index += c * cd;
    rows.push_back(std::move(row));
  }
  return QuantumOrthogonalArray(arity + t, d, arity, std::move(rows));
}

}  // namespace

QuantumOrthogonalArray::QuantumOrthogonalArray(int parties, int local_dim, int strength,
                                               std::vector<SparseVector> rows)
    : parties_(parties), local_dim_(local_dim), strength_(strength),
      rows_(std::move(rows)) {
  require(parties >= 1 && local_dim >= 2, ErrorCode::kInvalidArgument,
          "QOA needs N >= 1 and d >= 2");
  require(strength >= 1 && strength <= parties, ErrorCode::kInvalidArgument,
          "QOA strength must lie in [1, N]");
  require(!rows_.empty(), ErrorCode::kInvalidArgument, "QOA needs at least one row");
  const std::uint64_t dim = state_dim();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    auto& row = rows_[r];
    require(row.dim == dim, ErrorCode::kDimensionMismatch,
            "row " + std::to_string(r) + " has dimension " + std::to_string(row.dim));
    normalize_sparse(row);
    require(std::abs(row.norm() - 1.0) <= kStructuralTol, ErrorCode::kInvalidArgument,
            "row " + std::to_string(r) + " is not a unit vector");
  }
}

bool QuantumOrthogonalArray::operator==(const QuantumOrthogonalArray& o) const {
  if (parties_ != o.parties_ || local_dim_ != o.local_dim_ ||
      strength_ != o.strength_ || rows_.size() != o.rows_.size())
    return false;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& a = rows_[r].entries;
    const auto& b = o.rows_[r].entries;
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].index != b[i].index || a[i].value != b[i].value) return false;
  }
  return true;
}

PureState::PureState(int parties, int local_dim, SparseVector amplitudes)
    : parties_(parties), local_dim_(local_dim), amplitudes_(std::move(amplitudes)) {
  require(parties >= 1 && local_dim >= 2, ErrorCode::kInvalidArgument,
          "state needs N >= 1 and d >= 2");
  require(amplitudes_.dim == ipow(local_dim, parties), ErrorCode::kDimensionMismatch,
          "state dimension must be d^N");
  normalize_sparse(amplitudes_);
  require(std::abs(amplitudes_.norm() - 1.0) <= kStructuralTol,
          ErrorCode::kInvalidArgument, "state is not normalized");
}

PureState::PureState(int parties, int local_dim, const ComplexVector& amplitudes)
    : PureState(parties, local_dim, SparseVector::from_dense(amplitudes.view())) {}

Verdict verify_qoa(const QuantumOrthogonalArray& q, double tol) {
  return verify_qoa(q, q.strength(), tol);
}

Verdict verify_qoa(const QuantumOrthogonalArray& q, int k, double tol) {
  require(k >= 1 && k <= q.parties(), ErrorCode::kInvalidArgument,
          "strength out of range");
  // sum_{i,j} Tr(|phi_i><phi_j|) equals the reduction of |S><S| with
  // S = sum_i phi_i.
  const SparseVector sum = sparse_sum(q.rows());
  const double scale = double(q.row_count()) / double(ipow(q.local_dim(), unsigned(k)));
  return check_reductions(sum, unsigned(q.parties()), unsigned(q.local_dim()),
                          subsets(unsigned(q.parties()), unsigned(k)), scale, tol,
                          [](const auto&) { return std::string("summed reduction"); });
}

PureState state_from_qoa(const QuantumOrthogonalArray& q, double tol) {
  SparseVector sum = sparse_sum(q.rows());
  const double r = double(q.row_count());
  const double n = sum.norm();
  require(std::abs(n / std::sqrt(r) - 1.0) <= tol, ErrorCode::kVerificationFailed,
          "rows are not mutually orthogonal: |sum| = " + std::to_string(n) +
              ", expected sqrt(" + std::to_string(q.row_count()) + ")");
  for (auto& e : sum.entries) e.value /= std::sqrt(r);
  return PureState(q.parties(), q.local_dim(), std::move(sum));
}

Verdict verify_k_uniform(const PureState& s, int k, double tol) {
  require(k >= 1 && k <= s.parties() / 2, ErrorCode::kInvalidArgument,
          "k must lie in [1, N/2]");
  const double scale = 1.0 / double(ipow(s.local_dim(), unsigned(k)));
  return check_reductions(s.amplitudes(), unsigned(s.parties()), unsigned(s.local_dim()),
                          subsets(unsigned(s.parties()), unsigned(k)), scale, tol,
                          [](const auto&) { return std::string("maximally mixed reduction"); });
}

ComplexMatrix reduced_matrix(const PureState& s, std::span<const unsigned> keep) {
  PartySplit split{unsigned(s.parties()), unsigned(s.local_dim()),
                   std::vector<unsigned>(keep.begin(), keep.end())};
  const std::uint64_t n = ipow(s.local_dim(), unsigned(keep.size()));
  require(n <= 4096, ErrorCode::kInvalidArgument, "reduced matrix too large to materialize");
  auto entries = split_entries(s.amplitudes(), split);
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.component < b.component; });
  ComplexMatrix m(n, n);
  for (std::size_t lo = 0; lo < entries.size();) {
    std::size_t hi = lo;
    while (hi < entries.size() && entries[hi].component == entries[lo].component) ++hi;
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = lo; j < hi; ++j)
        m(entries[i].label, entries[j].label) += entries[i].value * std::conj(entries[j].value);
    lo = hi;
  }
  return m;
}

Verdict verify_gmoqls(const QuantumGrid& g, double tol) {
  return verify_generalized(g, 2, tol);
}

Verdict verify_gmoqlc(const QuantumGrid& g, double tol) {
  return verify_generalized(g, 3, tol);
}

QuantumGrid qoa_to_gmoqls(const QuantumOrthogonalArray& q, double tol) {
  return qoa_to_generalized(q, 2, tol);
}

QuantumGrid qoa_to_gmoqlc(const QuantumOrthogonalArray& q, double tol) {
  return qoa_to_generalized(q, 3, tol);
}

QuantumOrthogonalArray gmoqls_to_qoa(const QuantumGrid& g, double tol) {
  Verdict v = verify_gmoqls(g, tol);
  require(v.passed, ErrorCode::kVerificationFailed, "not a GMOQLS: " + v.summary());
  return generalized_to_qoa(g, 2);
}

QuantumOrthogonalArray gmoqlc_to_qoa(const QuantumGrid& g, double tol) {
  Verdict v = verify_gmoqlc(g, tol);
  require(v.passed, ErrorCode::kVerificationFailed, "not a GMOQLC: " + v.summary());
  return generalized_to_qoa(g, 3);
}

QuantumOrthogonalArray moqls_to_qoa(std::span<const QuantumGrid> gs, double tol) {
  require(!gs.empty() && gs.front().arity() == 2, ErrorCode::kInvalidArgument,
          "expected squares");
  Verdict v = gs.size() == 1 ? verify_qls(gs[0], tol) : verify_moqls(gs, tol);
  require(v.passed, ErrorCode::kVerificationFailed, "not a MOQLS: " + v.summary());
  return product_rows(gs, 2);
}

QuantumOrthogonalArray moqlc_to_qoa(std::span<const QuantumGrid> gs, double tol) {
  require(gs.size() >= 3 && gs.front().arity() == 3, ErrorCode::kInvalidArgument,
          "expected at least three cubes");
  Verdict v = verify_moqlc(gs, tol);
  require(v.passed, ErrorCode::kVerificationFailed, "not a MOQLC: " + v.summary());
  return product_rows(gs, 3);
}

QuantumGrid product_cells(std::span<const QuantumGrid> gs) {
  require(!gs.empty(), ErrorCode::kInvalidArgument, "no grids given");
  const auto& g0 = gs.front();
  for (const auto& g : gs)
    require(g.arity() == g0.arity() && g.order() == g0.order() &&
                g.cell_dim() == std::size_t(g.order()) && g.holes().empty(),
            ErrorCode::kDimensionMismatch, "grids must share shape, without holes");
  const int t = static_cast<int>(gs.size());
  const std::uint64_t cd = ipow(g0.order(), unsigned(t));
  std::vector<Complex> amps(g0.cell_count() * cd);
  for (std::size_t c = 0; c < g0.cell_count(); ++c) {
    SparseVector w;
    w.dim = 1;
    w.entries.push_back({0, 1.0});
    for (const auto& g : gs) w = sparse_tensor(w, g.sparse_cell(c));
    for (const auto& e : w.entries) amps[c * cd + e.index] = e.value;
  }
  return QuantumGrid(g0.arity(), g0.order(), cd, std::move(amps),
                     std::vector<bool>(g0.cell_count(), false), {}, t);
}

bool same_rows(const QuantumOrthogonalArray& a, const QuantumOrthogonalArray& b,
               double tol) {
  if (a.parties() != b.parties() || a.local_dim() != b.local_dim() ||
      a.row_count() != b.row_count())
    return false;
  auto canon = [tol](const QuantumOrthogonalArray& q) {
    std::vector<std::vector<SparseEntry>> rows;
    for (const auto& r : q.rows()) {
      std::vector<SparseEntry> e;
      for (const auto& x : r.entries)
        if (std::abs(x.value) > tol) e.push_back(x);
      rows.push_back(std::move(e));
    }
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
      return std::lexicographical_compare(
          x.begin(), x.end(), y.begin(), y.end(),
          [](const auto& p, const auto& q) { return p.index < q.index; });
    });
    return rows;
  };
  const auto ra = canon(a), rb = canon(b);
  for (std::size_t r = 0; r < ra.size(); ++r) {
    if (ra[r].size() != rb[r].size()) return false;
    for (std::size_t i = 0; i < ra[r].size(); ++i)
      if (ra[r][i].index != rb[r][i].index ||
          std::abs(ra[r][i].value - rb[r][i].value) > tol)
        return false;
  }
  return true;
}

}  // namespace qcd
