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

#include "qcdesign/qdesign.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcdesign/error.hpp"

namespace qcd {

namespace {

constexpr double kStructuralTol = 1e-6;

std::string addr_str(const std::vector<int>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i)
    s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

std::size_t cells_for(int arity, int order) {
  std::size_t n = std::size_t(order) * order;
  return arity == 3 ? n * order : n;
}

}  // namespace

QuantumGrid::QuantumGrid(int arity, int order, std::size_t cell_dim,
                         std::vector<std::optional<ComplexVector>> cells,
                         std::vector<std::vector<int>> holes, int parties)
    : arity_(arity), order_(order), cell_dim_(cell_dim), parties_(parties),
      holes_(std::move(holes)) {
  require(cells.size() == cells_for(arity, order), ErrorCode::kDimensionMismatch,
          "grid needs " + std::to_string(cells_for(arity, order)) + " cells");
  amplitudes_.assign(cells.size() * cell_dim, Complex{});
  hole_mask_.assign(cells.size(), false);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (!cells[c]) {
      hole_mask_[c] = true;
      continue;
    }
    require(cells[c]->dim() == cell_dim, ErrorCode::kDimensionMismatch,
            "cell " + std::to_string(c) + " has dimension " +
                std::to_string(cells[c]->dim()) + ", expected " +
                std::to_string(cell_dim));
    std::copy(cells[c]->entries().begin(), cells[c]->entries().end(),
              amplitudes_.begin() + c * cell_dim);
  }
  validate();
}

QuantumGrid::QuantumGrid(int arity, int order, std::size_t cell_dim,
                         std::vector<Complex> amplitudes,
                         std::vector<bool> hole_mask,
                         std::vector<std::vector<int>> holes, int parties)
    : arity_(arity), order_(order), cell_dim_(cell_dim), parties_(parties),
      amplitudes_(std::move(amplitudes)), hole_mask_(std::move(hole_mask)),
      holes_(std::move(holes)) {
  require(hole_mask_.size() == cells_for(arity, order) &&
              amplitudes_.size() == hole_mask_.size() * cell_dim,
          ErrorCode::kDimensionMismatch, "flat grid buffer has the wrong size");
  validate();
}

void QuantumGrid::validate() {
  require(arity_ == 2 || arity_ == 3, ErrorCode::kInvalidArgument,
          "arity must be 2 or 3");
  require(order_ >= 1 && cell_dim_ >= 1 && parties_ >= 1,
          ErrorCode::kInvalidArgument, "grid shape must be positive");
  require(ipow(order_, parties_) == cell_dim_ || parties_ == 1,
          ErrorCode::kDimensionMismatch,
          "cell dimension must equal order^parties");
  require(arity_ == 2 || holes_.empty(), ErrorCode::kInvalidArgument,
          "holes are only supported on squares");
  hole_index_.assign(order_, -1);
  for (std::size_t h = 0; h < holes_.size(); ++h) {
    auto& hole = holes_[h];
    require(!hole.empty(), ErrorCode::kInvalidArgument, "empty hole");
    std::sort(hole.begin(), hole.end());
    for (int x : hole) {
      require(x >= 0 && x < order_, ErrorCode::kInvalidArgument,
              "hole index out of range");
      require(hole_index_[x] < 0, ErrorCode::kInvalidArgument,
              "holes must be disjoint");
      hole_index_[x] = static_cast<int>(h);
    }
  }
  for (std::size_t c = 0; c < hole_mask_.size(); ++c) {
    if (arity_ == 2) {
      const int i = static_cast<int>(c / order_), j = static_cast<int>(c % order_);
      const bool hole = hole_index_[i] >= 0 && hole_index_[i] == hole_index_[j];
      require(hole == hole_mask_[c], ErrorCode::kInvalidArgument,
              "cell " + addr_str({i, j}) +
                  (hole ? " lies in a hole but is filled" : " is empty outside the holes"));
    } else {
      require(!hole_mask_[c], ErrorCode::kInvalidArgument, "cube cells cannot be empty");
    }
    if (hole_mask_[c]) continue;
    double n = 0;
    for (const auto& z : cell(c)) n += std::norm(z);
    require(std::abs(std::sqrt(n) - 1.0) <= kStructuralTol, ErrorCode::kInvalidArgument,
            "cell " + addr_str(address(c)) + " is not a unit vector");
  }
}

ComplexVector QuantumGrid::cell_vector(std::size_t idx) const {
  auto c = cell(idx);
  return ComplexVector(std::vector<Complex>(c.begin(), c.end()));
}

SparseVector QuantumGrid::sparse_cell(std::size_t idx) const {
  return SparseVector::from_dense(cell(idx));
}

std::vector<int> QuantumGrid::address(std::size_t idx) const {
  std::vector<int> a(arity_);
  for (int q = arity_ - 1; q >= 0; --q) {
    a[q] = static_cast<int>(idx % order_);
    idx /= order_;
  }
  return a;
}

QuantumGrid embed_classical(const LatinDesign& design) {
  const int d = design.order();
  std::vector<std::optional<ComplexVector>> cells(design.size());
  for (std::size_t c = 0; c < design.size(); ++c)
    if (design.cells()[c] != LatinDesign::kHole)
      cells[c] = ComplexVector::basis(d, design.cells()[c]);
  return QuantumGrid(design.arity(), d, d, std::move(cells), design.holes());
}

namespace {

QuantumGrid remap(const QuantumGrid& g, bool conj, bool swap) {
  if (!swap) {
    std::vector<Complex> amps(g.amplitudes().begin(), g.amplitudes().end());
    if (conj)
      for (auto& a : amps) a = std::conj(a);
    std::vector<bool> mask(g.cell_count());
    for (std::size_t c = 0; c < g.cell_count(); ++c) mask[c] = g.is_hole(c);
    return QuantumGrid(g.arity(), g.order(), g.cell_dim(), std::move(amps), std::move(mask),
                       g.holes(), g.parties());
  }
  require(g.arity() == 2, ErrorCode::kInvalidArgument, "transpose applies to squares");
  const int d = g.order();
  const std::size_t cd = g.cell_dim();
  std::vector<Complex> amps(g.amplitudes().size());
  std::vector<bool> mask(g.cell_count());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const std::size_t src = g.index(i, j);
      const std::size_t dst = swap ? g.index(j, i) : src;
      mask[dst] = g.is_hole(src);
      auto c = g.cell(src);
      for (std::size_t x = 0; x < cd; ++x)
        amps[dst * cd + x] = conj ? std::conj(c[x]) : c[x];
    }
  return QuantumGrid(2, d, cd, std::move(amps), std::move(mask), g.holes(),
                     g.parties());
}

// max |<v_a|v_b> - delta_ab| over the given cells.
double line_deviation(const QuantumGrid& g, const std::vector<std::size_t>& cells,
                      std::size_t& bad_a, std::size_t& bad_b) {
  double dev = 0;
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = a; b < cells.size(); ++b) {
      const double e =
          std::abs(inner(g.cell(cells[a]), g.cell(cells[b])) - (a == b ? 1.0 : 0.0));
      if (e > dev) {
        dev = e;
        bad_a = cells[a];
        bad_b = cells[b];
      }
    }
  return dev;
}

void require_shape(const QuantumGrid& g, int arity, bool allow_holes) {
  require(g.arity() == arity, ErrorCode::kInvalidArgument,
          arity == 2 ? "expected a square grid" : "expected a cube grid");
  require(allow_holes || g.holes().empty(), ErrorCode::kInvalidArgument,
          "grid has holes; use the incomplete-design verifier");
  require(g.cell_dim() == std::size_t(g.order()), ErrorCode::kDimensionMismatch,
          "cells must live in C^order");
}

// Lines of a grid: for squares rows then columns, for cubes the three axes.
void check_lines(const QuantumGrid& g, double tol, Verdict& v) {
  const int d = g.order();
  const int n_axes = g.arity();
  const std::size_t lines_per_axis = g.cell_count() / d;
  static const char* kNames[] = {"row", "column", "file"};
  for (int axis = 0; axis < n_axes; ++axis) {
    for (std::size_t line = 0; line < lines_per_axis; ++line) {
      std::vector<std::size_t> cells;
      std::vector<int> fixed;
      int lead = -1;
      for (int t = 0; t < d; ++t) {
        std::vector<int> a(n_axes);
        std::size_t rest = line;
        for (int q = n_axes - 1; q >= 0; --q) {
          if (q == axis) continue;
          a[q] = static_cast<int>(rest % d);
          rest /= d;
        }
        a[axis] = t;
        std::size_t idx = 0;
        for (int q = 0; q < n_axes; ++q) idx = idx * d + a[q];
        if (t == 0) fixed = a;
        if (n_axes == 2) lead = a[1 - axis];
        if (!g.is_hole(idx)) cells.push_back(idx);
      }
      std::string where;
      if (n_axes == 2) {
        where = std::string(kNames[1 - axis]) + " " + std::to_string(lead);
      } else {
        fixed[axis] = -1;
        std::string s;
        for (int q = 0; q < 3; ++q)
          s += (q ? "," : "") + (fixed[q] < 0 ? std::string("*") : std::to_string(fixed[q]));
        where = std::string(kNames[axis]) + " (" + s + ")";
      }
      std::size_t ba = 0, bb = 0;
      double dev = line_deviation(g, cells, ba, bb);
      if (!v.check(dev, tol, "line orthonormality", where)) {
        v.where += " cells " + addr_str(g.address(ba)) + "," + addr_str(g.address(bb));
      }
      // Lines through a hole must avoid the hole's coordinates.
      if (n_axes == 2) {
        const int h = g.hole_of(lead);
        if (h >= 0) {
          double leak = 0;
          for (std::size_t c : cells)
            for (int x : g.holes()[h]) leak = std::max(leak, std::abs(g.cell(c)[x]));
          v.check(leak, tol, "line cells orthogonal to hole subspace", where);
        }
      }
    }
  }
}

// Gram of superimposed cells a_c (x) b_c (x) ... over the listed cells.
// Also reports the largest amplitude landing in a hole block x hole block.
GramCheck superimposed_gram(std::span<const QuantumGrid* const> gs,
                            const std::vector<std::size_t>& cells,
                            double* hole_leak = nullptr) {
  std::vector<LabeledEntry> entries;
  const std::size_t cd = gs.front()->cell_dim();
  const QuantumGrid& g0 = *gs.front();
  double leak = 0;
  for (std::size_t l = 0; l < cells.size(); ++l) {
    SparseVector w = gs[0]->sparse_cell(cells[l]);
    for (std::size_t s = 1; s < gs.size(); ++s)
      w = sparse_tensor(w, gs[s]->sparse_cell(cells[l]));
    for (const auto& e : w.entries) {
      entries.push_back({l, e.index, e.value});
      if (hole_leak && gs.size() == 2) {
        const int x = static_cast<int>(e.index / cd), y = static_cast<int>(e.index % cd);
        if (g0.hole_of(x) >= 0 && g0.hole_of(x) == g0.hole_of(y))
          leak = std::max(leak, std::abs(e.value));
      }
    }
  }
  if (hole_leak) *hole_leak = leak;
  return gram_check(std::move(entries), cells.size(), 1.0);
}

std::string grids_str(std::span<const std::size_t> ids) {
  std::string s = "grids ";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s;
}

void check_superimposed(std::span<const QuantumGrid> gs,
                        std::span<const std::size_t> ids, double tol, Verdict& v,
                        bool holes) {
  std::vector<const QuantumGrid*> ptrs;
  for (std::size_t i : ids) ptrs.push_back(&gs[i]);
  std::vector<std::size_t> cells;
  for (std::size_t c = 0; c < gs[ids[0]].cell_count(); ++c)
    if (!gs[ids[0]].is_hole(c)) cells.push_back(c);
  double leak = 0;
  GramCheck gc = superimposed_gram(ptrs, cells, holes ? &leak : nullptr);
  const QuantumGrid& g = gs[ids[0]];
  if (!v.check(gc.deviation, tol, "superimposed cells orthonormal", grids_str(ids))) {
    v.where += " cells " + addr_str(g.address(cells[gc.row])) + "," +
               addr_str(g.address(cells[gc.col]));
  }
  if (holes)
    v.check(leak, tol, "superimposed cells avoid hole blocks", grids_str(ids));
}

void require_same_shape(std::span<const QuantumGrid> gs) {
  for (const auto& g : gs) {
    require(g.order() == gs.front().order() && g.cell_dim() == gs.front().cell_dim() &&
                g.arity() == gs.front().arity(),
            ErrorCode::kDimensionMismatch, "grids differ in shape");
    require(g.holes() == gs.front().holes(), ErrorCode::kInvalidArgument,
            "grids differ in hole partition");
  }
}

}  // namespace

QuantumGrid conjugate(const QuantumGrid& g) { return remap(g, true, false); }
QuantumGrid transpose(const QuantumGrid& g) { return remap(g, false, true); }
QuantumGrid conj_transpose(const QuantumGrid& g) { return remap(g, true, true); }

Verdict verify_qls(const QuantumGrid& g, double tol) {
  require_shape(g, 2, false);
  Verdict v;
  check_lines(g, tol, v);
  return v;
}

Verdict verify_qlc(const QuantumGrid& g, double tol) {
  require_shape(g, 3, false);
  Verdict v;
  check_lines(g, tol, v);
  return v;
}

Verdict verify_iqls(const QuantumGrid& g, double tol) {
  require_shape(g, 2, true);
  Verdict v;
  check_lines(g, tol, v);
  return v;
}

Verdict verify_moqls(std::span<const QuantumGrid> gs, double tol) {
  require(gs.size() >= 2, ErrorCode::kInvalidArgument, "need at least two squares");
  require_same_shape(gs);
  Verdict v;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    Verdict q = verify_qls(gs[i], tol);
    if (!q.passed) q.where = "grid " + std::to_string(i) + " " + q.where;
    v.merge(q);
  }
  for (std::size_t a = 0; a < gs.size(); ++a)
    for (std::size_t b = a + 1; b < gs.size(); ++b) {
      const std::size_t ids[] = {a, b};
      check_superimposed(gs, ids, tol, v, false);
    }
  return v;
}

Verdict verify_imoqls(std::span<const QuantumGrid> gs, double tol) {
  require(gs.size() >= 2, ErrorCode::kInvalidArgument, "need at least two squares");
  require_same_shape(gs);
  Verdict v;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    Verdict q = verify_iqls(gs[i], tol);
    if (!q.passed) q.where = "grid " + std::to_string(i) + " " + q.where;
    v.merge(q);
  }
  for (std::size_t a = 0; a < gs.size(); ++a)
    for (std::size_t b = a + 1; b < gs.size(); ++b) {
      const std::size_t ids[] = {a, b};
      check_superimposed(gs, ids, tol, v, true);
    }
  return v;
}

Verdict verify_soqls(const QuantumGrid& g, double tol) {
  const QuantumGrid pair[] = {g, transpose(g)};
  return verify_moqls(pair, tol);
}

Verdict verify_hsoqls(const QuantumGrid& g, double tol) {
  require_shape(g, 2, true);
  Verdict v;
  std::size_t covered = 0;
  for (const auto& h : g.holes()) covered += h.size();
  v.check(covered == std::size_t(g.order()) ? 0.0 : 1.0, 0.0,
          "holes partition the index set", "");
  const QuantumGrid pair[] = {g, conj_transpose(g)};
  v.merge(verify_imoqls(pair, tol));
  return v;
}

Verdict diagonal_basis_check(const QuantumGrid& g, double tol) {
  require_shape(g, 2, false);
  std::vector<std::size_t> cells;
  for (int i = 0; i < g.order(); ++i) cells.push_back(g.index(i, i));
  std::size_t a = 0, b = 0;
  Verdict v;
  if (!v.check(line_deviation(g, cells, a, b), tol, "diagonal orthonormality", ""))
    v.where = "cells " + addr_str(g.address(a)) + "," + addr_str(g.address(b));
  return v;
}

QuantumGrid cube_plane(const QuantumGrid& cube, int axis, int index) {
  require(cube.arity() == 3 && axis >= 0 && axis < 3 && index >= 0 &&
              index < cube.order(),
          ErrorCode::kInvalidArgument, "bad cube plane request");
  const int d = cube.order();
  const std::size_t cd = cube.cell_dim();
  std::vector<Complex> amps(std::size_t(d) * d * cd);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const std::size_t src = axis == 0   ? cube.index(index, a, b)
                              : axis == 1 ? cube.index(a, index, b)
                                          : cube.index(a, b, index);
      auto c = cube.cell(src);
      std::copy(c.begin(), c.end(), amps.begin() + (std::size_t(a) * d + b) * cd);
    }
  return QuantumGrid(2, d, cd, std::move(amps), std::vector<bool>(std::size_t(d) * d, false),
                     {}, cube.parties());
}

Verdict verify_moqlc(std::span<const QuantumGrid> gs, double tol) {
  require(gs.size() >= 3, ErrorCode::kInvalidArgument, "need at least three cubes");
  require_same_shape(gs);
  Verdict v;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    Verdict q = verify_qlc(gs[i], tol);
    if (!q.passed) q.where = "grid " + std::to_string(i) + " " + q.where;
    v.merge(q);
  }
  const std::size_t t = gs.size();
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = a + 1; b < t; ++b)
      for (std::size_t c = b + 1; c < t; ++c) {
        const std::size_t ids[] = {a, b, c};
        check_superimposed(gs, ids, tol, v, false);
      }
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = a + 1; b < t; ++b)
      for (int axis = 0; axis < 3; ++axis)
        for (int k = 0; k < gs[a].order(); ++k) {
          const QuantumGrid planes[] = {cube_plane(gs[a], axis, k),
                                        cube_plane(gs[b], axis, k)};
          const std::size_t ids[] = {0, 1};
          Verdict p;
          check_superimposed(planes, ids, tol, p, false);
          if (!p.passed) {
            p.condition = "plane pair orthonormal";
            p.where = "grids " + std::to_string(a) + "," + std::to_string(b) +
                      " axis " + std::to_string(axis) + " plane " +
                      std::to_string(k) + p.where.substr(p.where.find(" cells") == std::string::npos
                                                             ? p.where.size()
                                                             : p.where.find(" cells"));
          }
          v.merge(p);
        }
  return v;
}

Complex cell_overlap(const QuantumGrid& g, std::span<const int> a,
                     std::span<const int> b) {
  require(int(a.size()) == g.arity() && int(b.size()) == g.arity(),
          ErrorCode::kInvalidArgument, "address arity mismatch");
  auto flat = [&](std::span<const int> x) {
    std::size_t idx = 0;
    for (int c : x) {
      require(c >= 0 && c < g.order(), ErrorCode::kInvalidArgument,
              "address out of range");
      idx = idx * g.order() + c;
    }
    return idx;
  };
  const std::size_t ia = flat(a), ib = flat(b);
  require(!g.is_hole(ia) && !g.is_hole(ib), ErrorCode::kInvalidArgument,
          "overlap requested on a hole cell");
  return inner(g.cell(ia), g.cell(ib));
}

std::optional<Witness> classicality_witness(const QuantumGrid& g, double tol) {
  const std::size_t n = g.cell_count();
  std::vector<SparseVector> cells(n);
  for (std::size_t c = 0; c < n; ++c)
    if (!g.is_hole(c)) cells[c] = g.sparse_cell(c);
  // Dense scratch of the first cell for fast overlaps against sparse ones.
  std::vector<Complex> dense(g.cell_dim());
  for (std::size_t a = 0; a < n; ++a) {
    if (g.is_hole(a)) continue;
    for (const auto& e : cells[a].entries) dense[e.index] = e.value;
    for (std::size_t b = a + 1; b < n; ++b) {
      if (g.is_hole(b)) continue;
      Complex s{};
      for (const auto& e : cells[b].entries) s += std::conj(dense[e.index]) * e.value;
      const double m = std::abs(s);
      if (m > tol && std::abs(1.0 - m) > tol) {
        return Witness{g.address(a), g.address(b), m};
      }
    }
    for (const auto& e : cells[a].entries) dense[e.index] = Complex{};
  }
  return std::nullopt;
}

}  // namespace qcd
