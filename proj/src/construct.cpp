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

#include "qcdesign/construct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qcdesign/error.hpp"

namespace qcd {

ComplexMatrix BlockUnitary::assemble() const {
  const std::size_t n = std::size_t(outer_dim) * inner_dim;
  ComplexMatrix u(n, n);
  for (int i = 0; i < outer_dim; ++i)
    for (int r = 0; r < inner_dim; ++r)
      for (int c = 0; c < inner_dim; ++c)
        u(i * inner_dim + r, i * inner_dim + c) = blocks[i](r, c);
  return u;
}

void BlockUnitary::validate(double tol, bool non_identity) const {
  require(outer_dim >= 1 && inner_dim >= 1 &&
              blocks.size() == std::size_t(outer_dim),
          ErrorCode::kDimensionMismatch, "block unitary needs outer_dim blocks");
  for (int i = 0; i < outer_dim; ++i) {
    const auto& b = blocks[i];
    require(b.rows() == std::size_t(inner_dim) && b.cols() == std::size_t(inner_dim),
            ErrorCode::kDimensionMismatch,
            "block " + std::to_string(i) + " has the wrong order");
    require(is_unitary(b, tol), ErrorCode::kInvalidArgument,
            "block " + std::to_string(i) + " is not unitary");
    if (non_identity)
      require(max_abs_diff(b, ComplexMatrix::identity(inner_dim)) > tol,
              ErrorCode::kInvalidArgument,
              "block " + std::to_string(i) + " equals the identity");
  }
}

ComplexMatrix fourier_matrix(int n) {
  ComplexMatrix f(n, n);
  const double s = 1.0 / std::sqrt(double(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      f(x, y) = std::polar(s, 2.0 * std::numbers::pi * ((x * y) % n) / n);
  return f;
}

BlockUnitary fourier_block_unitary(int outer_dim, int inner_dim) {
  BlockUnitary u{outer_dim, inner_dim, {}};
  for (int i = 0; i < outer_dim; ++i) u.blocks.push_back(fourier_matrix(inner_dim));
  return u;
}

bool TauPattern::uniform() const {
  return std::all_of(use_u.begin(), use_u.end(), [](bool b) { return b; }) ||
         std::none_of(use_u.begin(), use_u.end(), [](bool b) { return b; });
}

namespace {

std::size_t grid_cells(int arity, int order) {
  std::size_t n = std::size_t(order) * order;
  return arity == 3 ? n * order : n;
}

}  // namespace

TauPattern identity_pattern(int arity, int order) {
  return {arity, order, std::vector<bool>(grid_cells(arity, order), false)};
}

TauPattern all_u_pattern(int arity, int order) {
  return {arity, order, std::vector<bool>(grid_cells(arity, order), true)};
}

TauPattern default_pattern(const LatinDesign& outer) {
  const int d = outer.order();
  const int half = (d + 1) / 2;
  TauPattern p{outer.arity(), d, std::vector<bool>(outer.size())};
  for (std::size_t c = 0; c < outer.size(); ++c) p.use_u[c] = outer.cells()[c] >= half;
  return p;
}

std::vector<TauPattern> default_patterns(std::span<const LatinDesign> outer) {
  std::vector<TauPattern> out;
  for (std::size_t s = 0; s < outer.size(); ++s)
    out.push_back(default_pattern(outer[(s + 1) % outer.size()]));
  return out;
}

namespace {

void require_verified(const Verdict& v, const std::string& what) {
  require(v.passed, ErrorCode::kVerificationFailed, what + ": " + v.summary());
}

// out((i,m),(j,n)[,(k,h)]) = a(i,j[,k]) (x) f(b-cell); holes of a inflate
// to V (x) C^m. Cell index split uses the flattened pair i*d2+m per axis.
QuantumGrid tensor_grid(const QuantumGrid& a, const QuantumGrid& b,
                        bool conj_transpose_lower = false) {
  require(a.arity() == b.arity(), ErrorCode::kInvalidArgument, "arity mismatch");
  require(b.holes().empty(), ErrorCode::kInvalidArgument,
          "inner factor must not have holes");
  const int arity = a.arity();
  const int d1 = a.order(), d2 = b.order(), d = d1 * d2;
  const std::size_t cda = a.cell_dim(), cdb = b.cell_dim(), cd = cda * cdb;
  const std::size_t n = grid_cells(arity, d);
  std::vector<Complex> amps(n * cd);
  std::vector<bool> mask(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    // Decompose the global address into outer and inner parts.
    std::size_t rest = c, ia = 0, ib = 0;
    std::vector<int> outer(arity), inner_addr(arity);
    for (int q = arity - 1; q >= 0; --q) {
      const int x = static_cast<int>(rest % d);
      rest /= d;
      outer[q] = x / d2;
      inner_addr[q] = x % d2;
    }
    for (int q = 0; q < arity; ++q) ia = ia * d1 + outer[q];
    if (conj_transpose_lower && arity == 2 && outer[0] > outer[1]) {
      ib = b.index(inner_addr[1], inner_addr[0]);
    } else {
      for (int q = 0; q < arity; ++q) ib = ib * d2 + inner_addr[q];
    }
    if (a.is_hole(ia)) {
      mask[c] = true;
      continue;
    }
    const bool conj = conj_transpose_lower && arity == 2 && outer[0] > outer[1];
    auto ca = a.cell(ia);
    auto cb = b.cell(ib);
    Complex* out = amps.data() + c * cd;
    for (std::size_t x = 0; x < cda; ++x) {
      if (ca[x] == Complex{}) continue;
      for (std::size_t y = 0; y < cdb; ++y)
        out[x * cdb + y] = ca[x] * (conj ? std::conj(cb[y]) : cb[y]);
    }
  }
  std::vector<std::vector<int>> holes;
  for (const auto& h : a.holes()) {
    std::vector<int> big;
    for (int x : h)
      for (int y = 0; y < d2; ++y) big.push_back(x * d2 + y);
    holes.push_back(std::move(big));
  }
  // Products of unit cells have unit norm; parties only survive for plain
  // designs.
  return QuantumGrid(arity, d, cd, std::move(amps), std::move(mask), std::move(holes), 1);
}

Verdict verify_set(std::span<const QuantumGrid> gs, double tol) {
  const bool cube = gs.front().arity() == 3;
  if (gs.size() == 1) return cube ? verify_qlc(gs[0], tol) : verify_qls(gs[0], tol);
  if (cube) {
    if (gs.size() >= 3) return verify_moqlc(gs, tol);
    Verdict v = verify_qlc(gs[0], tol);
    v.merge(verify_qlc(gs[1], tol));
    return v;
  }
  return verify_moqls(gs, tol);
}

std::vector<QuantumGrid> pairwise_product(std::span<const QuantumGrid> a,
                                          std::span<const QuantumGrid> b,
                                          double tol) {
  require(!a.empty() && a.size() == b.size(), ErrorCode::kInvalidArgument,
          "both inputs need the same number of designs");
  require_verified(verify_set(a, tol), "first input");
  require_verified(verify_set(b, tol), "second input");
  std::vector<QuantumGrid> out;
  for (std::size_t s = 0; s < a.size(); ++s) out.push_back(tensor_grid(a[s], b[s]));
  return out;
}

// Block lift shared by the square and cube constructions: block at outer
// address o of design s is |l> (x) tau |k> with l = outer symbol, k = inner
// symbol and tau = U_l when the pattern asks for it.
std::vector<QuantumGrid> block_lift(std::span<const LatinDesign> outer,
                                    std::span<const LatinDesign> inner,
                                    const BlockUnitary& u,
                                    std::span<const TauPattern> patterns,
                                    double tol) {
  require(!outer.empty() && outer.size() == inner.size() &&
              patterns.size() == outer.size(),
          ErrorCode::kInvalidArgument,
          "need matching numbers of outer designs, inner designs and patterns");
  const int arity = outer.front().arity();
  const int d1 = outer.front().order(), d2 = inner.front().order(), d = d1 * d2;
  require(u.outer_dim == d1 && u.inner_dim == d2, ErrorCode::kDimensionMismatch,
          "block unitary shape does not match the inputs");
  u.validate(tol, false);
  for (const auto& p : patterns)
    require(p.arity == arity && p.order == d1 && p.use_u.size() == outer.front().size(),
            ErrorCode::kDimensionMismatch, "pattern shape does not match the outer design");
  const std::size_t cd = std::size_t(d);
  const std::size_t n = grid_cells(arity, d);
  std::vector<QuantumGrid> out;
  for (std::size_t s = 0; s < outer.size(); ++s) {
    std::vector<Complex> amps(n * cd);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t rest = c, io = 0, ii = 0;
      std::vector<int> o(arity), in(arity);
      for (int q = arity - 1; q >= 0; --q) {
        const int x = static_cast<int>(rest % d);
        rest /= d;
        o[q] = x / d2;
        in[q] = x % d2;
      }
      for (int q = 0; q < arity; ++q) {
        io = io * d1 + o[q];
        ii = ii * d2 + in[q];
      }
      const int l = outer[s].cells()[io];
      const int k = inner[s].cells()[ii];
      Complex* cell = amps.data() + c * cd + std::size_t(l) * d2;
      if (patterns[s].use_u[io]) {
        for (int x = 0; x < d2; ++x) cell[x] = u.blocks[l](x, k);
      } else {
        cell[k] = 1.0;
      }
    }
    out.emplace_back(arity, d, cd, std::move(amps), std::vector<bool>(n, false));
  }
  return out;
}

}  // namespace

std::vector<QuantumGrid> moqls_direct_product(std::span<const QuantumGrid> a,
                                              std::span<const QuantumGrid> b,
                                              double tol) {
  require(a.front().arity() == 2 && b.front().arity() == 2,
          ErrorCode::kInvalidArgument, "square product expects squares");
  return pairwise_product(a, b, tol);
}

std::vector<QuantumGrid> moqlc_direct_product(std::span<const QuantumGrid> a,
                                              std::span<const QuantumGrid> b,
                                              double tol) {
  require(a.front().arity() == 3 && b.front().arity() == 3,
          ErrorCode::kInvalidArgument, "cube product expects cubes");
  return pairwise_product(a, b, tol);
}

std::vector<QuantumGrid> moqls_from_mols(std::span<const LatinDesign> mols_a,
                                         std::span<const LatinDesign> mols_b,
                                         const BlockUnitary& u,
                                         std::span<const TauPattern> patterns,
                                         double tol) {
  require(!mols_a.empty() && mols_a.front().arity() == 2 &&
              !mols_b.empty() && mols_b.front().arity() == 2,
          ErrorCode::kInvalidArgument, "square lift expects squares");
  const auto prop = mols_a.size() >= 2 ? ClassicalProperty::kMolsPairwise
                                       : ClassicalProperty::kLatin;
  require_verified(verify_classical(mols_a, prop), "outer squares");
  require_verified(verify_classical(mols_b, prop), "inner squares");
  require(mols_a.front().holes().empty() && mols_b.front().holes().empty(),
          ErrorCode::kInvalidArgument, "square lift expects squares without holes");
  return block_lift(mols_a, mols_b, u, patterns, tol);
}

std::vector<QuantumGrid> moqlc_from_molc(std::span<const LatinDesign> molc_a,
                                         std::span<const LatinDesign> molc_b,
                                         const BlockUnitary& u,
                                         std::span<const TauPattern> patterns,
                                         double tol) {
  require(!molc_a.empty() && molc_a.front().arity() == 3 &&
              !molc_b.empty() && molc_b.front().arity() == 3,
          ErrorCode::kInvalidArgument, "cube lift expects cubes");
  require_verified(verify_classical(molc_a, ClassicalProperty::kMolcWithB), "outer cubes");
  require_verified(verify_classical(molc_b, ClassicalProperty::kMolcWithB), "inner cubes");
  return block_lift(molc_a, molc_b, u, patterns, tol);
}

QuantumGrid fill_holes(const QuantumGrid& g, std::span<const QuantumGrid> fillers,
                       double tol) {
  require(g.arity() == 2, ErrorCode::kInvalidArgument, "fill_holes expects a square");
  require(fillers.size() == g.holes().size(), ErrorCode::kInvalidArgument,
          "need one filler per hole (" + std::to_string(g.holes().size()) + ")");
  require_verified(verify_iqls(g, tol), "incomplete square");
  const int d = g.order();
  std::vector<Complex> amps = g.amplitudes();
  for (std::size_t h = 0; h < fillers.size(); ++h) {
    const auto& hole = g.holes()[h];
    const auto& f = fillers[h];
    require(f.order() == int(hole.size()) && f.cell_dim() == hole.size(),
            ErrorCode::kDimensionMismatch,
            "filler " + std::to_string(h) + " must be a QLS(" +
                std::to_string(hole.size()) + ")");
    require_verified(verify_qls(f, tol), "filler " + std::to_string(h));
    for (std::size_t a = 0; a < hole.size(); ++a)
      for (std::size_t b = 0; b < hole.size(); ++b) {
        auto src = f.cell(f.index(int(a), int(b)));
        Complex* dst = amps.data() + g.index(hole[a], hole[b]) * d;
        for (std::size_t x = 0; x < hole.size(); ++x) dst[hole[x]] = src[x];
      }
  }
  return QuantumGrid(2, d, std::size_t(d), std::move(amps),
                     std::vector<bool>(std::size_t(d) * d, false));
}

QuantumGrid soqls_fill(const QuantumGrid& hsols, const QuantumGrid& sols,
                       const BlockUnitary& u, double tol) {
  require(hsols.arity() == 2 && sols.arity() == 2, ErrorCode::kInvalidArgument,
          "soqls_fill expects squares");
  const int d1 = sols.order();
  const int n = static_cast<int>(hsols.holes().size());
  require(n >= 1 && hsols.order() == n * d1, ErrorCode::kDimensionMismatch,
          "HSOLS order must be (number of holes) x SOLS order");
  for (int i = 0; i < n; ++i) {
    const auto& h = hsols.holes()[i];
    bool contiguous = int(h.size()) == d1;
    for (int a = 0; contiguous && a < d1; ++a) contiguous = h[a] == i * d1 + a;
    require(contiguous, ErrorCode::kInvalidArgument,
            "hole " + std::to_string(i) + " must span indices " +
                std::to_string(i * d1) + ".." + std::to_string((i + 1) * d1 - 1));
  }
  require(u.outer_dim == n && u.inner_dim == d1, ErrorCode::kDimensionMismatch,
          "block unitary must have one block of order d1 per hole");
  u.validate(tol, true);
  require_verified(verify_hsoqls(hsols, tol), "HSOQLS input");
  require_verified(verify_soqls(sols, tol), "SOQLS input");
  const int d = hsols.order();
  std::vector<Complex> amps = hsols.amplitudes();
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < d1; ++a)
      for (int b = 0; b < d1; ++b) {
        ComplexVector v = u.blocks[i].apply(sols.cell(sols.index(a, b)));
        Complex* dst = amps.data() + hsols.index(i * d1 + a, i * d1 + b) * d;
        for (int x = 0; x < d1; ++x) dst[i * d1 + x] = v[x];
      }
  return QuantumGrid(2, d, std::size_t(d), std::move(amps),
                     std::vector<bool>(std::size_t(d) * d, false));
}

std::vector<QuantumGrid> weighting(std::span<const QuantumGrid> hmols,
                                   std::span<const QuantumGrid> moqls, double tol) {
  require(hmols.size() >= 2 && hmols.size() == moqls.size(),
          ErrorCode::kInvalidArgument, "weighting needs two equally sized sets");
  require_verified(verify_imoqls(hmols, tol), "HMOQLS input");
  require_verified(verify_moqls(moqls, tol), "MOQLS input");
  std::vector<QuantumGrid> out;
  for (std::size_t s = 0; s < hmols.size(); ++s)
    out.push_back(tensor_grid(hmols[s], moqls[s]));
  return out;
}

QuantumGrid hsoqls_product(const QuantumGrid& hsoqls,
                           std::span<const QuantumGrid> moqls, double tol) {
  require(moqls.size() == 2, ErrorCode::kInvalidArgument,
          "hsoqls_product needs a pair of orthogonal squares");
  require_verified(verify_hsoqls(hsoqls, tol), "HSOQLS input");
  require_verified(verify_moqls(moqls, tol), "MOQLS input");
  // Upper blocks (i <= j) use the first square, lower blocks the conjugated
  // transpose of the second.
  QuantumGrid upper = tensor_grid(hsoqls, moqls[0]);
  QuantumGrid lower = tensor_grid(hsoqls, moqls[1], true);
  const int m = moqls[0].order();
  const int d = upper.order();
  const std::size_t cd = upper.cell_dim();
  std::vector<Complex> amps = upper.amplitudes();
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (r / m > c / m) {
        auto src = lower.cell(lower.index(r, c));
        std::copy(src.begin(), src.end(), amps.begin() + upper.index(r, c) * cd);
      }
  std::vector<bool> mask(upper.cell_count());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = upper.is_hole(i);
  return QuantumGrid(2, d, cd, std::move(amps), std::move(mask), upper.holes());
}

}  // namespace qcd
