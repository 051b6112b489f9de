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

#include "qcdesign/classical.hpp"
#include "qcdesign/error.hpp"
#include "qcdesign/fixtures.hpp"
#include "qcdesign/qoa.hpp"
#include "test_util.hpp"

namespace qcd {
namespace {

using testing::kTol;

const double kR = 1 / std::sqrt(2.0);

// Summed-trace oracle for a QOA with dense rows.
bool oracle_qoa(const QuantumOrthogonalArray& q, int k) {
  const double scale = double(q.row_count()) / double(ipow(q.local_dim(), k));
  for (const auto& keep : testing::subsets(q.parties(), k)) {
    const auto dk = Eigen::Index(ipow(q.local_dim(), k));
    testing::EMatrix sum = testing::EMatrix::Zero(dk, dk);
    for (const auto& row : q.rows()) {
      const auto v = row.to_dense();
      sum += testing::oracle_cross_trace(v.view(), v.view(), q.parties(), q.local_dim(), keep);
    }
    if ((sum - scale * testing::EMatrix::Identity(dk, dk)).cwiseAbs().maxCoeff() > kTol)
      return false;
  }
  return true;
}

std::vector<QuantumGrid> classical_pair(int q) {
  const auto m = mols_prime_power(q);
  return {embed_classical(m[0]), embed_classical(m[1])};
}

TEST(VerifyQoa, BellArray) {
  const auto& q = fixtures::qoa_bell();
  EXPECT_EQ(q.row_count(), 4u);
  EXPECT_EQ(q.parties(), 5);
  EXPECT_TRUE(verify_qoa(q, 2, kTol).passed);
  EXPECT_TRUE(oracle_qoa(q, 2));
}

TEST(VerifyQoa, ProductStateRow) {
  const QuantumOrthogonalArray q(2, 2, 1, {SparseVector::from_dense(ComplexVector::basis(4, 0).view())});
  EXPECT_FALSE(verify_qoa(q, 1, kTol).passed);
  EXPECT_FALSE(oracle_qoa(q, 1));
}

TEST(VerifyQoa, Qoa343) {
  const auto& q = fixtures::qoa343();
  EXPECT_EQ(q.row_count(), 343u);
  EXPECT_EQ(q.parties(), 7);
  EXPECT_EQ(q.local_dim(), 7);
  EXPECT_TRUE(verify_qoa(q, 3, kTol).passed);
}

TEST(StateFromQoa, BellState) {
  const auto s = state_from_qoa(fixtures::qoa_bell(), kTol);
  // (|000>|Phi+> + |011>|Psi+> + |101>|Psi-> + |110>|Phi->)/2, written out
  ComplexVector want(32);
  auto put = [&](int addr, int two, double sign) { want[addr * 4 + two] += sign * kR / 2; };
  put(0b000, 0b00, 1), put(0b000, 0b11, 1);
  put(0b011, 0b01, 1), put(0b011, 0b10, 1);
  put(0b101, 0b01, 1), put(0b101, 0b10, -1);
  put(0b110, 0b00, 1), put(0b110, 0b11, -1);
  const auto got = s.dense();
  for (std::size_t i = 0; i < 32; ++i) EXPECT_NEAR(std::abs(got[i] - want[i]), 0.0, 1e-15) << i;
}

TEST(StateFromQoa, OneRow) {
  const ComplexVector phi{kR, 0, 0, kR};
  const QuantumOrthogonalArray q(2, 2, 1, {SparseVector::from_dense(phi.view())});
  ASSERT_TRUE(verify_qoa(q, 1, kTol).passed);
  EXPECT_EQ(state_from_qoa(q, kTol).dense(), phi);
}

TEST(StateFromQoa, Ame43) {
  const auto q = moqls_to_qoa(classical_pair(3), kTol);
  EXPECT_EQ(q.row_count(), 9u);
  EXPECT_EQ(q.parties(), 4);
  EXPECT_TRUE(verify_k_uniform(state_from_qoa(q, kTol), 2, kTol).passed);
}

TEST(StateFromQoa, NonOrthogonalRowsRejected) {
  const auto r = SparseVector::from_dense(ComplexVector{kR, 0, 0, kR}.view());
  const QuantumOrthogonalArray q(2, 2, 1, {r, r});
  EXPECT_THROW(state_from_qoa(q, kTol), Error);
}

TEST(KUniform, Ghz3) {
  ComplexVector ghz(8);
  ghz[0] = ghz[7] = kR;
  EXPECT_TRUE(verify_k_uniform(PureState(3, 2, ghz), 1, kTol).passed);
}

TEST(KUniform, Product) {
  EXPECT_FALSE(verify_k_uniform(PureState(3, 2, ComplexVector::basis(8, 0)), 1, kTol).passed);
}

TEST(KUniform, BellState) {
  const auto s = state_from_qoa(fixtures::qoa_bell(), kTol);
  EXPECT_TRUE(verify_k_uniform(s, 2, kTol).passed);
  // Eigen oracle on every pair of parties
  const auto v = s.dense();
  for (const auto& keep : testing::subsets(5, 2)) {
    const auto m = testing::oracle_cross_trace(v.view(), v.view(), 5, 2, keep);
    EXPECT_LT((m - 0.25 * testing::EMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), kTol);
  }
}

TEST(ReducedMatrix, MatchesOracle) {
  const auto s = state_from_qoa(fixtures::qoa_bell(), kTol);
  const std::vector<unsigned> keep{1, 3};
  const auto m = reduced_matrix(s, keep);
  const auto v = s.dense();
  EXPECT_LT((testing::to_eigen(m) - testing::oracle_cross_trace(v.view(), v.view(), 5, 2, keep))
                .cwiseAbs()
                .maxCoeff(),
            1e-12);
}

TEST(Gmoqls, Eq24Grid) {
  const auto g = qoa_to_gmoqls(fixtures::qoa_bell(), kTol);
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.cell_dim(), 8u);
  auto cell = [](int q0, int two, double sign) {
    ComplexVector c(8);
    c[q0 * 4 + (two == 0 ? 0 : 1)] = kR;
    c[q0 * 4 + (two == 0 ? 3 : 2)] = sign * kR;
    return c;
  };
  // |0>|Phi+>, |1>|Psi+> / |1>|Psi->, |0>|Phi->
  EXPECT_EQ(g.cell_vector(g.index(0, 0)), cell(0, 0, 1));
  EXPECT_EQ(g.cell_vector(g.index(0, 1)), cell(1, 1, 1));
  EXPECT_EQ(g.cell_vector(g.index(1, 0)), cell(1, 1, -1));
  EXPECT_EQ(g.cell_vector(g.index(1, 1)), cell(0, 0, -1));
  EXPECT_TRUE(verify_gmoqls(g, kTol).passed);
}

TEST(Gmoqls, ClassicalOaGrid) {
  const auto q = moqls_to_qoa(classical_pair(3), kTol);
  const auto g = qoa_to_gmoqls(q, kTol);
  EXPECT_EQ(g.order(), 3);
  for (std::size_t i = 0; i < g.cell_count(); ++i) {
    const auto c = g.sparse_cell(i);
    ASSERT_EQ(c.entries.size(), 1u);
    EXPECT_EQ(c.entries[0].value, Complex(1));
  }
  EXPECT_TRUE(verify_gmoqls(g, kTol).passed);
}

TEST(Gmoqls, EntangledAddressRejected) {
  // first row mixes two address blocks
  std::vector<SparseVector> rows;
  ComplexVector r0(8);
  r0[0] = r0[6] = kR;
  rows.push_back(SparseVector::from_dense(r0.view()));
  for (int a : {3, 5, 6}) rows.push_back(SparseVector::from_dense(ComplexVector::basis(8, a).view()));
  const QuantumOrthogonalArray q(3, 2, 2, rows);
  EXPECT_THROW(qoa_to_gmoqls(q, kTol), Error);
}

TEST(Gmoqls, BackToBellArray) {
  const auto g = qoa_to_gmoqls(fixtures::qoa_bell(), kTol);
  EXPECT_TRUE(same_rows(gmoqls_to_qoa(g, kTol), fixtures::qoa_bell(), kTol));
}

TEST(Gmoqls, RoundTripFixtures) {
  const auto q12 = moqls_to_qoa(fixtures::moqls12().pair, kTol);
  for (const auto* q : {&fixtures::qoa_bell(), &q12}) {
    const auto back = gmoqls_to_qoa(qoa_to_gmoqls(*q, kTol), kTol);
    EXPECT_TRUE(same_rows(back, *q, kTol));
  }
  const auto g = product_cells(fixtures::moqls12().pair);
  EXPECT_EQ(qoa_to_gmoqls(gmoqls_to_qoa(g, kTol), kTol), g);
}

TEST(Gmoqls, Moqls3GridToQoa) {
  const auto q = gmoqls_to_qoa(product_cells(classical_pair(3)), kTol);
  EXPECT_EQ(q.row_count(), 9u);
  EXPECT_EQ(q.parties(), 4);
  EXPECT_TRUE(verify_qoa(q, 2, kTol).passed);
  EXPECT_TRUE(oracle_qoa(q, 2));
}

TEST(Gmoqls, ProductCellsOfMoqls) {
  EXPECT_TRUE(verify_gmoqls(product_cells(fixtures::moqls12().pair), kTol).passed);
  EXPECT_TRUE(verify_gmoqls(product_cells(classical_pair(5)), kTol).passed);
}

TEST(Gmoqls, EqualCells) {
  const auto g = product_cells(classical_pair(3));
  std::vector<std::optional<ComplexVector>> cells;
  for (std::size_t i = 0; i < g.cell_count(); ++i) cells.push_back(g.cell_vector(i));
  cells[1] = cells[0];
  const QuantumGrid bad(2, 3, g.cell_dim(), cells, {}, g.parties());
  EXPECT_FALSE(verify_gmoqls(bad, kTol).passed);
}

TEST(Gmoqlc, Qoa343) {
  const auto g = qoa_to_gmoqlc(fixtures::qoa343(), kTol);
  EXPECT_EQ(g.arity(), 3);
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(g.parties(), 4);
  EXPECT_TRUE(verify_gmoqlc(g, kTol).passed);
  EXPECT_TRUE(same_rows(gmoqlc_to_qoa(g, kTol), fixtures::qoa343(), kTol));
}

TEST(Gmoqlc, Moqlc16ProductCells) {
  const auto g = product_cells(fixtures::moqlc16().triple);
  EXPECT_TRUE(verify_gmoqlc(g, kTol).passed);
  EXPECT_EQ(qoa_to_gmoqlc(gmoqlc_to_qoa(g, kTol), kTol), g);
}

TEST(MoqlsToQoa, Example12) {
  const auto q = moqls_to_qoa(fixtures::moqls12().pair, kTol);
  EXPECT_EQ(q.row_count(), 144u);
  EXPECT_EQ(q.parties(), 4);
  EXPECT_EQ(q.local_dim(), 12);
  EXPECT_TRUE(verify_k_uniform(state_from_qoa(q, kTol), 2, kTol).passed);
}

TEST(MoqlcToQoa, Example16) {
  const auto q = moqlc_to_qoa(fixtures::moqlc16().triple, kTol);
  EXPECT_EQ(q.row_count(), 4096u);
  EXPECT_EQ(q.parties(), 6);
  EXPECT_EQ(q.local_dim(), 16);
  EXPECT_TRUE(verify_k_uniform(state_from_qoa(q, kTol), 3, kTol).passed);
}

TEST(Qoa343, FormulaRowZero) {
  // row (0,0,0): classical part |0,0,0,0>, tail (1/sqrt7) sum_l |l,l,l>
  const auto& row = fixtures::qoa343().rows()[0];
  ASSERT_EQ(row.entries.size(), 7u);
  for (const auto& e : row.entries) {
    const std::uint64_t tail = e.index % 343, head = e.index / 343;
    EXPECT_EQ(head, 0u);
    const std::uint64_t l = tail / 49;
    EXPECT_EQ(tail, l * 49 + l * 7 + l);
    EXPECT_NEAR(std::abs(e.value - Complex(1 / std::sqrt(7.0))), 0.0, 1e-15);
  }
}

}  // namespace
}  // namespace qcd
