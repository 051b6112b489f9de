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

#include "qcdesign/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "qcdesign/error.hpp"

namespace qcd::fixtures {
namespace {

constexpr double kSelfTestTol = 1e-9;
constexpr int kHoleCode = -1;
const Complex kI{0.0, 1.0};

void self_test(const Verdict& v, const std::string& what) {
  require(v.passed, ErrorCode::kVerificationFailed,
          "fixture " + what + " failed its self-test: " + v.summary());
}

// Integer-coded grid: code c < 100 is the basis vector |c>, code >= 100 is
// decode(c - 100), kHoleCode is a hole.
QuantumGrid coded_square(int d, const std::vector<int>& codes,
                         const std::function<ComplexVector(int)>& decode,
                         std::vector<std::vector<int>> holes = {}) {
  require(codes.size() == std::size_t(d) * d, ErrorCode::kDimensionMismatch,
          "coded table has the wrong size");
  std::vector<std::optional<ComplexVector>> cells;
  cells.reserve(codes.size());
  for (int c : codes) {
    if (c == kHoleCode)
      cells.emplace_back(std::nullopt);
    else if (c < 100)
      cells.emplace_back(ComplexVector::basis(d, c));
    else
      cells.emplace_back(decode(c - 100));
  }
  return QuantumGrid(2, d, std::size_t(d), std::move(cells), std::move(holes));
}

ComplexVector unsupported(int) {
  fail(ErrorCode::kInvalidArgument, "table uses an undefined code");
}

LatinDesign square(int d, std::vector<int> cells,
                   std::vector<std::vector<int>> holes = {}) {
  return LatinDesign(2, d, std::move(cells), std::move(holes));
}

// Largest entry gap between two grids of equal shape, holes compared by mask.
double grid_gap(const QuantumGrid& a, const QuantumGrid& b) {
  require(a.cell_count() == b.cell_count() && a.cell_dim() == b.cell_dim(),
          ErrorCode::kDimensionMismatch, "grid shapes differ");
  double gap = 0.0;
  for (std::size_t c = 0; c < a.cell_count(); ++c) {
    if (a.is_hole(c) != b.is_hole(c)) return 1.0;
    auto x = a.cell(c);
    auto y = b.cell(c);
    for (std::size_t k = 0; k < x.size(); ++k) gap = std::max(gap, std::abs(x[k] - y[k]));
  }
  return gap;
}

ComplexMatrix moqls12_block(int i) {
  const double s3 = 1.0 / std::sqrt(3.0), r2 = 1.0 / std::sqrt(2.0);
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  switch (i) {
    case 0:  // printed without the 1/sqrt(3) prefactor
      return ComplexMatrix{{s3, s3, s3},
                           {s3, s3 * w, s3 * std::conj(w)},
                           {s3, s3 * std::conj(w), s3 * w}};
    case 1:
      return ComplexMatrix{
          {s3 * Complex(1, 1), s3 * r2 * Complex(1, -1), 0.0},
          {-s3 * r2 * kI, s3, s3 * Complex(r2, 1)},
          {s3 * r2, s3 * kI, s3 * Complex(1, -r2)}};
    case 2:  // bottom-right printed as 1/sqrt(2)
      return ComplexMatrix{{r2, r2, 0.0}, {r2, -r2, 0.0}, {0.0, 0.0, 1.0}};
    default:
      return ComplexMatrix{{2.0 / 3, 2.0 / 3, 1.0 / 3},
                           {1.0 / 3, -2.0 / 3, 2.0 / 3},
                           {-2.0 / 3, 1.0 / 3, 2.0 / 3}};
  }
}

ComplexMatrix soqls16_block(int i) {
  const double r3 = std::sqrt(3.0), r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);
  switch (i) {
    case 0:
      return ComplexMatrix{{0.5, 0.5, 0.5, 0.5},
                           {0.5, -0.5, 0.5, -0.5},
                           {0.5, 0.5, -0.5, -0.5},
                           {0.5, -0.5, -0.5, 0.5}};
    case 1:
      return ComplexMatrix{{0.25, -0.25 * r3 * kI, -0.25 * r3 * kI, -0.75},
                           {0.25 * r3, 0.25 * kI, -0.75 * kI, 0.25 * r3},
                           {0.25 * r3, -0.75 * kI, 0.25 * kI, 0.25 * r3},
                           {0.75, 0.25 * r3 * kI, 0.25 * r3 * kI, -0.25}};
    case 2:
      return ComplexMatrix{{0.5, 0.5 * kI, 0.5 * kI, -0.5},
                           {0.5 * kI, 0.5, -0.5, 0.5 * kI},
                           {0.5 * kI, -0.5, 0.5, 0.5 * kI},
                           {-0.5, 0.5 * kI, 0.5 * kI, 0.5}};
    default:
      return ComplexMatrix{{0.25 * r2, 0.25 * r2 * kI, -0.25 * r6 * kI, 0.25 * r6},
                           {0.25 * r2 * kI, 0.25 * r2, 0.25 * r6, -0.25 * r6 * kI},
                           {0.25 * r6, 0.25 * r6 * kI, 0.25 * r2 * kI, -0.25 * r2},
                           {0.25 * r6 * kI, 0.25 * r6, -0.25 * r2, 0.25 * r2 * kI}};
  }
}

BlockUnitary preset_blocks(int order, ComplexMatrix (*block)(int)) {
  BlockUnitary u{4, order, {}};
  for (int i = 0; i < 4; ++i) u.blocks.push_back(block(i));
  u.validate(kSelfTestTol, true);
  return u;
}

TauPattern pattern_at(int arity, int order, std::initializer_list<std::vector<int>> at) {
  TauPattern p = identity_pattern(arity, order);
  for (const auto& a : at) {
    std::size_t idx = 0;
    for (int x : a) idx = idx * order + x;
    p.use_u[idx] = true;
  }
  return p;
}

// --- tables -----------------------------------------------------------------

const std::vector<int> kSoqls14 = {
    0, 6, 13, 7, 12, 3, 8, 10, 9, 11, 5, 4, 2, 1,
    10, 1, 7, 12, 5, 11, 2, 4, 13, 3, 9, 6, 8, 0,
    8, 11, 2, 9, 7, 13, 10, 6, 12, 1, 4, 5, 0, 3,
    13, 7, 10, 3, 6, 4, 9, 1, 11, 12, 8, 0, 5, 2,
    9, 12, 0, 11, 4, 6, 3, 2, 10, 13, 7, 8, 1, 5,
    6, 8, 1, 10, 13, 5, 12, 11, 7, 2, 0, 3, 9, 4,
    12, 9, 8, 13, 11, 0, 6, 5, 3, 10, 2, 1, 4, 7,
    5, 13, 12, 8, 10, 2, 11, 7, 4, 0, 1, 9, 3, 6,
    11, 5, 3, 0, 1, 10, 13, 12, 8, 4, 6, 2, 7, 9,
    4, 10, 11, 1, 2, 12, 0, 13, 5, 9, 3, 7, 6, 8,
    7, 0, 6, 2, 9, 8, 4, 3, 1, 5, 101, 102, 103, 104,
    1, 2, 9, 4, 3, 7, 5, 8, 0, 6, 104, 103, 102, 101,
    3, 4, 5, 6, 0, 1, 7, 9, 2, 8, 102, 101, 104, 103,
    2, 3, 4, 5, 8, 9, 1, 0, 6, 7, 103, 104, 101, 102};

// Printed 2-MOQLS(12); 100+x stands for U|x>.
const std::vector<int> kMoqls12Phi = {
    0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11,
    1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9,
    2, 0, 1, 5, 3, 4, 8, 6, 7, 11, 9, 10,
    9, 10, 11, 6, 7, 8, 3, 4, 5, 0, 1, 2,
    10, 11, 9, 7, 8, 6, 4, 5, 3, 1, 2, 0,
    11, 9, 10, 8, 6, 7, 5, 3, 4, 2, 0, 1,
    3, 4, 5, 100, 101, 102, 9, 10, 11, 6, 7, 8,
    4, 5, 3, 101, 102, 100, 10, 11, 9, 7, 8, 6,
    5, 3, 4, 102, 100, 101, 11, 9, 10, 8, 6, 7,
    106, 107, 108, 9, 10, 11, 0, 1, 2, 103, 104, 105,
    107, 108, 106, 10, 11, 9, 1, 2, 0, 104, 105, 103,
    108, 106, 107, 11, 9, 10, 2, 0, 1, 105, 103, 104};
const std::vector<int> kMoqls12Psi = {
    0, 1, 2, 103, 104, 105, 6, 7, 8, 9, 10, 11,
    2, 0, 1, 105, 103, 104, 8, 6, 7, 11, 9, 10,
    1, 2, 0, 104, 105, 103, 7, 8, 6, 10, 11, 9,
    6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5,
    8, 6, 7, 11, 9, 10, 2, 0, 1, 5, 3, 4,
    7, 8, 6, 10, 11, 9, 1, 2, 0, 4, 5, 3,
    9, 10, 11, 106, 107, 108, 3, 4, 5, 100, 101, 102,
    11, 9, 10, 108, 106, 107, 5, 3, 4, 102, 100, 101,
    10, 11, 9, 107, 108, 106, 4, 5, 3, 101, 102, 100,
    3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8,
    5, 3, 4, 2, 0, 1, 11, 9, 10, 8, 6, 7,
    4, 5, 3, 1, 2, 0, 10, 11, 9, 7, 8, 6};

constexpr int H = kHoleCode;

const std::vector<int> kQls4Phi = {H, 1, 2, H, 1, 0, 3, 2, 2, 3, 0, 1, H, 2, 1, H};
const std::vector<int> kQls7Psi = {
    H, 3, 4, 5, 6, 1, 2,
    2, H, 5, 6, 0, 4, 3,
    1, 6, H, 0, 5, 3, 4,
    6, 5, 1, H, H, 2, 0,
    5, 2, 6, H, H, 0, 1,
    3, 4, 0, 1, 2, H, H,
    4, 0, 3, 2, 1, H, H};

const std::vector<int> kHsols44 = {
    H, H, H, H, 12, 13, 14, 15, 4, 5, 6, 7, 8, 9, 10, 11,
    H, H, H, H, 14, 15, 12, 13, 6, 7, 4, 5, 10, 11, 8, 9,
    H, H, H, H, 15, 14, 13, 12, 7, 6, 5, 4, 11, 10, 9, 8,
    H, H, H, H, 13, 12, 15, 14, 5, 4, 7, 6, 9, 8, 11, 10,
    8, 9, 10, 11, H, H, H, H, 12, 13, 14, 15, 0, 1, 2, 3,
    11, 10, 9, 8, H, H, H, H, 14, 15, 12, 13, 2, 3, 0, 1,
    9, 8, 11, 10, H, H, H, H, 15, 14, 13, 12, 3, 2, 1, 0,
    10, 11, 8, 9, H, H, H, H, 13, 12, 15, 14, 1, 0, 3, 2,
    12, 13, 14, 15, 0, 1, 2, 3, H, H, H, H, 4, 5, 6, 7,
    15, 14, 13, 12, 3, 2, 1, 0, H, H, H, H, 6, 7, 4, 5,
    13, 12, 15, 14, 1, 0, 3, 2, H, H, H, H, 7, 6, 5, 4,
    14, 15, 12, 13, 2, 3, 0, 1, H, H, H, H, 5, 4, 7, 6,
    4, 5, 6, 7, 8, 9, 10, 11, 0, 1, 2, 3, H, H, H, H,
    7, 6, 5, 4, 11, 10, 9, 8, 3, 2, 1, 0, H, H, H, H,
    5, 4, 7, 6, 9, 8, 11, 10, 1, 0, 3, 2, H, H, H, H,
    6, 7, 4, 5, 10, 11, 8, 9, 2, 3, 0, 1, H, H, H, H};
// Hole cells of the SOQLS(16) output table: 100+m stands for U|m>.
const std::vector<int> kSoqls16HoleRows = {
    100, 101, 102, 103, 103, 102, 101, 100, 101, 100, 103, 102, 102, 103, 100, 101};

const std::vector<int> kHsoqls34Printed = {
    H, H, H, 9, 10, 11, 3, 4, 5, 6, 7, 8,
    H, H, H, 10, 11, 9, 4, 5, 3, 7, 8, 6,
    H, H, H, 11, 9, 10, 4, 3, 4, 8, 6, 7,
    6, 8, 7, H, H, H, 9, 10, 11, 0, 1, 2,
    7, 6, 8, H, H, H, 10, 11, 9, 1, 2, 0,
    8, 7, 6, H, H, H, 11, 9, 10, 2, 0, 1,
    9, 11, 10, 0, 2, 1, H, H, H, 3, 4, 5,
    10, 9, 11, 1, 0, 2, H, H, H, 4, 5, 3,
    11, 10, 9, 2, 1, 0, H, H, H, 5, 3, 4,
    3, 5, 4, 6, 8, 7, 0, 2, 1, H, H, H,
    4, 3, 5, 7, 6, 5, 1, 0, 2, H, H, H,
    5, 4, 3, 8, 7, 6, 2, 1, 0, H, H, H};

const std::vector<std::vector<int>> kMolc4 = {
    {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0, 1, 0, 3, 2, 0, 1,
     2, 3, 3, 2, 1, 0, 2, 3, 0, 1, 2, 3, 0, 1, 3, 2, 1, 0, 0, 1, 2, 3,
     1, 0, 3, 2, 3, 2, 1, 0, 2, 3, 0, 1, 1, 0, 3, 2, 0, 1, 2, 3},
    {0, 3, 1, 2, 2, 1, 3, 0, 3, 0, 2, 1, 1, 2, 0, 3, 1, 2, 0, 3, 3, 0,
     2, 1, 2, 1, 3, 0, 0, 3, 1, 2, 2, 1, 3, 0, 0, 3, 1, 2, 1, 2, 0, 3,
     3, 0, 2, 1, 3, 0, 2, 1, 1, 2, 0, 3, 0, 3, 1, 2, 2, 1, 3, 0},
    {0, 2, 3, 1, 3, 1, 0, 2, 1, 3, 2, 0, 2, 0, 1, 3, 1, 3, 2, 0, 2, 0,
     1, 3, 0, 2, 3, 1, 3, 1, 0, 2, 2, 0, 1, 3, 1, 3, 2, 0, 3, 1, 0, 2,
     0, 2, 3, 1, 3, 1, 0, 2, 0, 2, 3, 1, 2, 0, 1, 3, 1, 3, 2, 0}};

// Hadamard-type QLS(2) used as a hole filler.
QuantumGrid hadamard_filler() {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexVector plus{r, r}, minus{r, -r};
  return QuantumGrid(2, 2, 2, {plus, minus, minus, plus});
}

QuantumGrid unit_filler() { return QuantumGrid(2, 1, 1, {ComplexVector{1.0}}); }

}  // namespace

const std::vector<Info>& catalog() {
  static const std::vector<Info> kCatalog = {
      {"soqls14", "qls", {"square"},
       "non-classical SOQLS(14) with four real superposition cells"},
      {"moqls12", "qls", {"pair", "phi", "psi", "outer", "inner"},
       "non-classical 2-MOQLS(12) lifted from 2-MOLS(4) x 2-MOLS(3)"},
      {"qls4_7", "qls", {"phi", "phi_filled", "psi", "psi_filled"},
       "IQLS(4;2) and PIQLS(7) of type 1^3 2^2, with their filled QLS(4), QLS(7)"},
      {"soqls16", "qls", {"square", "hsols", "sols"},
       "SOQLS(16) from HSOQLS(4^4) filled with a block-lifted SOQLS(4)"},
      {"hsoqls3_4", "iqls", {"square", "psi", "pair"},
       "HSOQLS(3^4) from HSOQLS(1^4) and a classical 2-MOQLS(3)"},
      {"moqlc16", "qlc", {"triple", "phi", "psi", "upsilon", "cubes"},
       "non-classical 3-MOQLC(16) lifted from 3-MOLC(4)"},
      {"qoa_bell", "qoa", {"qoa"}, "QOA(4,5,2,2) built on the Bell basis"},
      {"qoa343", "qoa", {"qoa"}, "QOA(343,7,7,3) over Z_7 with 3 entangled parties"},
  };
  return kCatalog;
}

const QuantumGrid& soqls14() {
  static const QuantumGrid g = [] {
    // phi_1..phi_4 on |10>..|13> with sign patterns ++++, +-+-, ++--, +--+.
    static const int kSigns[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    auto phi = [](int n) {
      ComplexVector v(14);
      for (int x = 0; x < 4; ++x) v[10 + x] = 0.5 * kSigns[n - 1][x];
      return v;
    };
    QuantumGrid out = coded_square(14, kSoqls14, phi);
    self_test(verify_soqls(out, kSelfTestTol), "soqls14");
    return out;
  }();
  return g;
}

const Moqls12& moqls12() {
  static const Moqls12 f = [] {
    Moqls12 m;
    m.outer = {square(4, {0, 1, 2, 3, 3, 2, 1, 0, 1, 0, 3, 2, 2, 3, 0, 1}),
               square(4, {0, 1, 2, 3, 2, 3, 0, 1, 3, 2, 1, 0, 1, 0, 3, 2})};
    m.inner = {square(3, {0, 1, 2, 1, 2, 0, 2, 0, 1}),
               square(3, {0, 1, 2, 2, 0, 1, 1, 2, 0})};
    m.unitary = preset_blocks(3, moqls12_block);
    m.patterns = {pattern_at(2, 4, {{2, 1}, {3, 0}, {3, 3}}),
                  pattern_at(2, 4, {{0, 1}, {2, 1}, {2, 3}})};
    m.pair = moqls_from_mols(m.outer, m.inner, m.unitary, m.patterns, kSelfTestTol);
    self_test(verify_moqls(m.pair, kSelfTestTol), "moqls12");
    // Cross-check against the printed arrays.
    const ComplexMatrix u = m.unitary.assemble();
    auto u_col = [&u](int x) { return u.column(x); };
    const double gap = std::max(grid_gap(m.pair[0], coded_square(12, kMoqls12Phi, u_col)),
                                grid_gap(m.pair[1], coded_square(12, kMoqls12Psi, u_col)));
    require(gap <= kSelfTestTol, ErrorCode::kVerificationFailed,
            "moqls12 construction differs from the printed arrays");
    return m;
  }();
  return f;
}

const Qls47& qls4_7() {
  static const Qls47 f = [] {
    QuantumGrid phi = coded_square(4, kQls4Phi, unsupported, {{0, 3}});
    std::vector<QuantumGrid> phi_fill = {hadamard_filler()};
    QuantumGrid phi_filled = fill_holes(phi, phi_fill, kSelfTestTol);
    QuantumGrid psi = coded_square(7, kQls7Psi, unsupported, {{0}, {1}, {2}, {3, 4}, {5, 6}});
    std::vector<QuantumGrid> psi_fill = {unit_filler(), unit_filler(), unit_filler(),
                                         hadamard_filler(), hadamard_filler()};
    QuantumGrid psi_filled = fill_holes(psi, psi_fill, kSelfTestTol);
    self_test(verify_iqls(phi, kSelfTestTol), "qls4_7:phi");
    self_test(verify_iqls(psi, kSelfTestTol), "qls4_7:psi");
    self_test(verify_qls(phi_filled, kSelfTestTol), "qls4_7:phi_filled");
    self_test(verify_qls(psi_filled, kSelfTestTol), "qls4_7:psi_filled");
    return Qls47{std::move(phi),   std::move(phi_fill), std::move(phi_filled),
                 std::move(psi),   std::move(psi_fill), std::move(psi_filled)};
  }();
  return f;
}

const Soqls16& soqls16() {
  static const Soqls16 f = [] {
    const std::vector<std::vector<int>> holes = {
        {0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}, {12, 13, 14, 15}};
    // The printed table is not orthogonal to its transpose; transposing each
    // 4x4 block below the diagonal restores that and keeps it Latin.
    std::vector<int> fixed = kHsols44;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < a; ++b)
        for (int x = 0; x < 4; ++x)
          for (int y = 0; y < 4; ++y)
            fixed[(4 * a + x) * 16 + 4 * b + y] = kHsols44[(4 * a + y) * 16 + 4 * b + x];
    QuantumGrid printed_hsols = coded_square(16, kHsols44, unsupported, holes);
    QuantumGrid hsols = coded_square(16, fixed, unsupported, holes);
    QuantumGrid sols = embed_classical(square(4, {0, 1, 2, 3, 3, 2, 1, 0, 1, 0, 3, 2, 2, 3, 0, 1}));
    BlockUnitary u = preset_blocks(4, soqls16_block);
    QuantumGrid out = soqls_fill(hsols, sols, u, kSelfTestTol);
    self_test(verify_soqls(out, kSelfTestTol), "soqls16");
    // Printed table: the hole blocks hold U|4i + code>.
    std::vector<int> printed = fixed;
    for (int i = 0; i < 4; ++i)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          printed[(4 * i + a) * 16 + 4 * i + b] = kSoqls16HoleRows[a * 4 + b] + 4 * i;
    const ComplexMatrix full = u.assemble();
    const double gap =
        grid_gap(out, coded_square(16, printed, [&full](int x) { return full.column(x); }));
    require(gap <= kSelfTestTol, ErrorCode::kVerificationFailed,
            "soqls16 construction differs from the printed table");
    return Soqls16{std::move(printed_hsols), std::move(hsols), std::move(sols), std::move(u),
                   std::move(out)};
  }();
  return f;
}

const Hsoqls34& hsoqls3_4() {
  static const Hsoqls34 f = [] {
    QuantumGrid psi = coded_square(4, {H, 3, 1, 2, 2, H, 3, 0, 3, 0, H, 1, 1, 2, 0, H},
                                   unsupported, {{0}, {1}, {2}, {3}});
    std::vector<QuantumGrid> pair = {embed_classical(square(3, {0, 1, 2, 1, 2, 0, 2, 0, 1})),
                                     embed_classical(square(3, {0, 1, 2, 2, 0, 1, 1, 2, 0}))};
    QuantumGrid out = hsoqls_product(psi, pair, kSelfTestTol);
    self_test(verify_hsoqls(out, kSelfTestTol), "hsoqls3_4");
    std::vector<std::array<int, 3>> diffs;
    for (int r = 0; r < 12; ++r)
      for (int c = 0; c < 12; ++c) {
        const int code = kHsoqls34Printed[r * 12 + c];
        if (code == H) continue;
        if (std::abs(out.cell(out.index(r, c))[code] - 1.0) > kSelfTestTol)
          diffs.push_back({r, c, code});
      }
    return Hsoqls34{std::move(psi), std::move(pair), std::move(out), std::move(diffs)};
  }();
  return f;
}

const Moqlc16& moqlc16() {
  static const Moqlc16 f = [] {
    Moqlc16 m;
    for (const auto& c : kMolc4) m.cubes.emplace_back(3, 4, c);
    m.unitary = preset_blocks(4, soqls16_block);
    m.patterns = {pattern_at(3, 4, {{0, 1, 2}, {1, 2, 1}, {2, 1, 2}, {3, 0, 0}}),
                  pattern_at(3, 4, {{0, 1, 1}, {1, 2, 2}, {2, 2, 2}, {3, 0, 2}}),
                  pattern_at(3, 4, {{0, 0, 1}, {1, 2, 1}, {2, 2, 2}, {3, 3, 1}})};
    m.triple = moqlc_from_molc(m.cubes, m.cubes, m.unitary, m.patterns, kSelfTestTol);
    self_test(verify_moqlc(m.triple, kSelfTestTol), "moqlc16");
    return m;
  }();
  return f;
}

const QuantumOrthogonalArray& qoa_bell() {
  static const QuantumOrthogonalArray q = [] {
    const double r = 1.0 / std::sqrt(2.0);
    // |ab c> (x) Bell with (a,b,c) = (0,0,0), (0,1,1), (1,0,1), (1,1,0) and
    // Bell = Phi+, Psi+, Psi-, Phi-.
    const int prefix[4] = {0b000, 0b011, 0b101, 0b110};
    const int lo[4] = {0b00, 0b01, 0b01, 0b00};
    const int hi[4] = {0b11, 0b10, 0b10, 0b11};
    const double sign[4] = {1, 1, -1, -1};
    std::vector<SparseVector> rows;
    for (int t = 0; t < 4; ++t) {
      SparseVector v{32, {{std::uint64_t(prefix[t] * 4 + lo[t]), r},
                          {std::uint64_t(prefix[t] * 4 + hi[t]), sign[t] * r}}};
      rows.push_back(std::move(v));
    }
    QuantumOrthogonalArray out(5, 2, 2, std::move(rows));
    self_test(verify_qoa(out, kSelfTestTol), "qoa_bell");
    return out;
  }();
  return q;
}

const QuantumOrthogonalArray& qoa343() {
  static const QuantumOrthogonalArray q = [] {
    constexpr int p = 7;
    const double amp = 1.0 / std::sqrt(double(p));
    std::vector<SparseVector> rows;
    rows.reserve(p * p * p);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j)
        for (int k = 0; k < p; ++k) {
          const int digits[4] = {i, k, (i + j + k) % p, (i + 2 * j + 4 * k) % p};
          std::uint64_t head = 0;
          for (int x : digits) head = head * p + x;
          SparseVector v{ipow(p, 7), {}};
          for (int l = 0; l < p; ++l) {
            const std::uint64_t tail =
                (std::uint64_t((l + j) % p) * p + (l + 2 * j + 5 * k) % p) * p + l;
            v.entries.push_back(
                {head * 343 + tail, std::polar(amp, 2.0 * std::numbers::pi * ((i * l) % p) / p)});
          }
          std::sort(v.entries.begin(), v.entries.end(),
                    [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
          rows.push_back(std::move(v));
        }
    QuantumOrthogonalArray out(7, p, 3, std::move(rows));
    self_test(verify_qoa(out, kSelfTestTol), "qoa343");
    return out;
  }();
  return q;
}

BlockUnitary unitary_preset(const std::string& name, int outer_dim, int inner_dim) {
  if (name == "fourier") return fourier_block_unitary(outer_dim, inner_dim);
  BlockUnitary u;
  if (name == "moqls12")
    u = preset_blocks(3, moqls12_block);
  else if (name == "soqls16")
    u = preset_blocks(4, soqls16_block);
  else
    fail(ErrorCode::kUnknownName, "unknown unitary preset '" + name + "'");
  require(u.outer_dim == outer_dim && u.inner_dim == inner_dim,
          ErrorCode::kDimensionMismatch,
          "preset '" + name + "' has shape " + std::to_string(u.outer_dim) + "x" +
              std::to_string(u.inner_dim) + ", expected " + std::to_string(outer_dim) +
              "x" + std::to_string(inner_dim));
  return u;
}

std::vector<std::string> unitary_preset_names() { return {"fourier", "moqls12", "soqls16"}; }

}  // namespace qcd::fixtures
