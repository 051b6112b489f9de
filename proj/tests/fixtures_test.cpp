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

#include <gtest/gtest.h>

#include "qcdesign/construct.hpp"
#include "qcdesign/error.hpp"
#include "qcdesign/fixtures.hpp"
#include "qcdesign/qoa.hpp"
#include "test_util.hpp"

namespace qcd {
namespace {

using testing::kTol;

TEST(Fixtures, Soqls14) {
  const auto& g = fixtures::soqls14();
  EXPECT_EQ(g.order(), 14);
  EXPECT_TRUE(verify_soqls(g, kTol).passed);
  EXPECT_TRUE(testing::oracle_qls(g));
}

TEST(Fixtures, Qls47) {
  const auto& f = fixtures::qls4_7();
  EXPECT_TRUE(verify_iqls(f.phi, kTol).passed);
  EXPECT_TRUE(verify_iqls(f.psi, kTol).passed);
  EXPECT_TRUE(verify_qls(f.phi_filled, kTol).passed);
  EXPECT_TRUE(verify_qls(f.psi_filled, kTol).passed);
  // hole type 1^3 2^2
  std::vector<std::size_t> sizes;
  for (const auto& h : f.psi.holes()) sizes.push_back(h.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 1, 2, 2}));
}

TEST(Fixtures, Moqls12RepairsAndUnitaries) {
  const auto& f = fixtures::moqls12();
  EXPECT_TRUE(f.u0_repaired);
  EXPECT_TRUE(f.u2_repaired);
  for (const auto& b : f.unitary.blocks) EXPECT_TRUE(is_unitary(b, kTol));
  // as printed, U0 lacks the 1/sqrt3 prefactor: columns have norm sqrt3
  ComplexMatrix u0 = f.unitary.blocks[0];
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) u0(r, c) *= std::sqrt(3.0);
  EXPECT_NEAR(std::abs(u0(0, 0)), 1.0, 1e-12);
  EXPECT_FALSE(is_unitary(u0, kTol));
  ComplexMatrix u2 = f.unitary.blocks[2];
  EXPECT_NEAR(std::abs(u2(2, 2)), 1.0, 1e-15);
  u2(2, 2) = 1 / std::sqrt(2.0);
  EXPECT_FALSE(is_unitary(u2, kTol));
  EXPECT_TRUE(verify_moqls(f.pair, kTol).passed);
}

TEST(Fixtures, Soqls16PrintedTableFails) {
  const auto& f = fixtures::soqls16();
  EXPECT_FALSE(verify_hsoqls(f.printed_hsols, kTol).passed);
  EXPECT_TRUE(verify_iqls(f.printed_hsols, kTol).passed);  // Latin part is fine
  EXPECT_TRUE(verify_hsoqls(f.hsols, kTol).passed);
  EXPECT_TRUE(verify_soqls(f.sols, kTol).passed);
  EXPECT_TRUE(verify_soqls(f.square, kTol).passed);
  for (const auto& b : f.unitary.blocks) EXPECT_TRUE(is_unitary(b, kTol));
}

TEST(Fixtures, Soqls16RepairIsBlockTranspose) {
  const auto& f = fixtures::soqls16();
  for (int bi = 0; bi < 4; ++bi)
    for (int bj = 0; bj < 4; ++bj)
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
          const int pr = 4 * bi + (bi > bj ? c : r), pc = 4 * bj + (bi > bj ? r : c);
          EXPECT_EQ(f.hsols.cell_vector(f.hsols.index(4 * bi + r, 4 * bj + c)),
                    f.printed_hsols.cell_vector(f.printed_hsols.index(pr, pc)));
        }
}

TEST(Fixtures, Hsoqls34) {
  const auto& f = fixtures::hsoqls3_4();
  EXPECT_TRUE(verify_hsoqls(f.psi, kTol).passed);
  EXPECT_TRUE(verify_moqls(f.pair, kTol).passed);
  EXPECT_TRUE(verify_hsoqls(f.square, kTol).passed);
}

TEST(Fixtures, Moqlc16) {
  const auto& f = fixtures::moqlc16();
  EXPECT_TRUE(verify_classical(f.cubes, ClassicalProperty::kMolcWithB).passed);
  EXPECT_TRUE(verify_moqlc(f.triple, kTol).passed);
  const std::vector<int> a{0, 4, 10}, b{0, 0, 13};
  EXPECT_NEAR(std::abs(cell_overlap(f.triple[0], a, b)), std::sqrt(6.0) / 4, kTol);
  EXPECT_NEAR(std::sqrt(6.0) / 4, 0.6123724356957945, 1e-15);
}

TEST(Fixtures, QoaBell) { EXPECT_TRUE(verify_qoa(fixtures::qoa_bell(), 2, kTol).passed); }

TEST(Fixtures, Qoa343RowZeroClassicalPart) {
  const auto& row = fixtures::qoa343().rows()[0];
  for (const auto& e : row.entries) EXPECT_EQ(e.index / 343, 0u);  // |0,0,0,0>
}

TEST(Fixtures, Qoa343FormulaOracle) {
  // rebuild every row from the closed formula and compare
  const int d = 7;
  const Complex w = std::polar(1.0, 2 * M_PI / d);
  const auto& q = fixtures::qoa343();
  std::map<std::uint64_t, Complex> all;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const int head[4] = {i, k, (i + j + k) % d, (i + 2 * j + 4 * k) % d};
        for (int l = 0; l < d; ++l) {
          const int tail[3] = {(l + j) % d, (l + 2 * j + 5 * k) % d, l};
          std::uint64_t idx = 0;
          for (int x : head) idx = idx * d + x;
          for (int x : tail) idx = idx * d + x;
          all[idx] += std::pow(w, i * l) / std::sqrt(7.0);
        }
      }
  std::map<std::uint64_t, Complex> got;
  for (const auto& r : q.rows())
    for (const auto& e : r.entries) got[e.index] += e.value;
  ASSERT_EQ(got.size(), all.size());
  for (const auto& [idx, v] : all) EXPECT_NEAR(std::abs(got[idx] - v), 0.0, 1e-12);
}

TEST(Fixtures, UnitaryPresets) {
  EXPECT_EQ(fixtures::unitary_preset_names(),
            (std::vector<std::string>{"fourier", "moqls12", "soqls16"}));
  EXPECT_EQ(fixtures::unitary_preset("moqls12", 4, 3).blocks.size(), 4u);
  EXPECT_THROW(fixtures::unitary_preset("moqls12", 5, 3), Error);
  EXPECT_THROW(fixtures::unitary_preset("nope", 4, 3), Error);
  const auto u = fixtures::unitary_preset("fourier", 6, 5);
  EXPECT_TRUE(is_unitary(u.assemble(), kTol));
}

TEST(Fixtures, Catalog) {
  std::vector<std::string> names;
  for (const auto& i : fixtures::catalog()) names.push_back(i.name);
  EXPECT_EQ(names, (std::vector<std::string>{"soqls14", "moqls12", "qls4_7", "soqls16",
                                             "hsoqls3_4", "moqlc16", "qoa_bell", "qoa343"}));
}

}  // namespace
}  // namespace qcd
