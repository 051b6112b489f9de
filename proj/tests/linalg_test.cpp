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

#include "qcdesign/fixtures.hpp"
#include "qcdesign/linalg.hpp"
#include "test_util.hpp"

namespace qcd {
namespace {

using testing::kTol;

TEST(Tensor, BasisTimesBasis) {
  const auto v = tensor(ComplexVector::basis(2, 0), ComplexVector::basis(2, 1));
  ASSERT_EQ(v.dim(), 4u);
  EXPECT_EQ(v, ComplexVector::basis(4, 1));
}

TEST(Tensor, MixedDimensions) {
  const auto v = tensor(ComplexVector{1, 0, 0}, ComplexVector{0, 1});
  ASSERT_EQ(v.dim(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(v[i], Complex(i == 1 ? 1.0 : 0.0)) << i;
}

TEST(Tensor, RandomUnitNorm) {
  for (int rep = 0; rep < 20; ++rep) {
    const auto u = testing::random_unit(3), v = testing::random_unit(4);
    const auto t = tensor(u, v);
    // oracle: sum of |u_i v_j|^2 written out
    double s = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) s += std::norm(u[i] * v[j]);
    EXPECT_NEAR(std::sqrt(s), 1.0, 1e-12);
    EXPECT_NEAR(t.norm(), 1.0, 1e-12);
  }
}

TEST(Inner, Soqls14Phi) {
  const double h = 0.5;
  ComplexVector p1(14), p2(14);
  for (int k = 0; k < 4; ++k) {
    p1[10 + k] = h;
    p2[10 + k] = k % 2 ? -h : h;
  }
  EXPECT_NEAR(std::abs(inner(p1, p2)), 0.0, 1e-15);
}

TEST(Inner, UnitVectorWithItself) {
  const auto v = testing::random_unit(7);
  EXPECT_NEAR(std::abs(inner(v, v) - Complex(1)), 0.0, 1e-12);
}

TEST(Inner, ConjugateLinearInFirstSlotLinearInSecond) {
  for (int rep = 0; rep < 20; ++rep) {
    const auto u = testing::random_unit(5), v = testing::random_unit(5);
    const Complex a = testing::random_complex();
    ComplexVector av(5);
    for (std::size_t i = 0; i < 5; ++i) av[i] = a * v[i];
    EXPECT_NEAR(std::abs(inner(u, av) - a * inner(u, v)), 0.0, 1e-12);
    // oracle against Eigen's dot, which conjugates the first argument
    EXPECT_NEAR(std::abs(inner(u, v) - testing::to_eigen(u.view()).dot(testing::to_eigen(v.view()))),
                0.0, 1e-12);
  }
}

TEST(IsUnitary, Identity) { EXPECT_TRUE(is_unitary(ComplexMatrix::identity(5), kTol)); }

TEST(IsUnitary, Soqls16BlockU1) {
  const double s3 = std::sqrt(3.0);
  const Complex i(0, 1);
  // U1 as tabulated (4x4 block of the SOQLS(16) lift)
  const ComplexMatrix u1{{0.25, -s3 / 4 * i, -s3 / 4 * i, -0.75},
                         {s3 / 4, 0.25 * i, -0.75 * i, s3 / 4},
                         {s3 / 4, -0.75 * i, 0.25 * i, s3 / 4},
                         {0.75, s3 / 4 * i, s3 / 4 * i, -0.25}};
  // the fixture stores the same block; compare entrywise with an independent
  // column-norm and Gram check
  const auto& stored = fixtures::soqls16().unitary.blocks[1];
  EXPECT_LT(max_abs_diff(stored, u1), 1e-15);
  EXPECT_TRUE(is_unitary(u1, kTol));
  const auto e = testing::to_eigen(u1);
  EXPECT_LT((e.adjoint() * e - testing::EMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(IsUnitary, PrintedU2NotUnitary) {
  // U2 of the 12x12 lift with bottom-right entry 1/sqrt(2), as printed
  const double r = 1 / std::sqrt(2.0);
  const ComplexMatrix u2{{r, r, 0}, {r, -r, 0}, {0, 0, r}};
  EXPECT_FALSE(is_unitary(u2, kTol));
  // oracle: last column norm
  EXPECT_NEAR(std::sqrt(std::norm(u2(0, 2)) + std::norm(u2(1, 2)) + std::norm(u2(2, 2))),
              0.7071067811865476, 1e-15);
}

TEST(GramIsIdentity, FourierColumns) {
  const auto f = ComplexMatrix{{1, 1, 1},
                               {1, std::polar(1.0, 2 * M_PI / 3), std::polar(1.0, 4 * M_PI / 3)},
                               {1, std::polar(1.0, 4 * M_PI / 3), std::polar(1.0, 8 * M_PI / 3)}};
  std::vector<ComplexVector> cols;
  for (std::size_t c = 0; c < 3; ++c) {
    ComplexVector v(3);
    for (std::size_t r = 0; r < 3; ++r) v[r] = f(r, c) / std::sqrt(3.0);
    cols.push_back(v);
  }
  EXPECT_TRUE(gram_is_identity(cols, kTol));
}

TEST(GramIsIdentity, RepeatedVector) {
  const std::vector<ComplexVector> vs{ComplexVector::basis(2, 0), ComplexVector::basis(2, 0)};
  EXPECT_FALSE(gram_is_identity(vs, kTol));
}

TEST(GramIsIdentity, Soqls14Row10) {
  const auto& g = fixtures::soqls14();
  std::vector<ComplexVector> row;
  for (int j = 0; j < 14; ++j) row.push_back(g.cell_vector(g.index(10, j)));
  EXPECT_TRUE(gram_is_identity(row, kTol));
  EXPECT_LT(testing::oracle_gram_dev(row), kTol);
}

ComplexVector bell_phi_plus() {
  const double r = 1 / std::sqrt(2.0);
  return ComplexVector{r, 0, 0, r};
}

TEST(PartialCrossTrace, BellReduction) {
  const auto phi = bell_phi_plus();
  const auto m = partial_cross_trace(phi, phi, {2, 2, {0}});
  EXPECT_LT(max_abs_diff(m, ComplexMatrix{{0.5, 0}, {0, 0.5}}), 1e-15);
}

TEST(PartialCrossTrace, ProductKeepSecond) {
  const auto v = tensor(ComplexVector::basis(2, 0), ComplexVector::basis(2, 1));
  const auto m = partial_cross_trace(v, v, {2, 2, {1}});
  EXPECT_LT(max_abs_diff(m, ComplexMatrix{{0, 0}, {0, 1}}), 1e-15);
}

TEST(PartialCrossTrace, TraceIsInnerProduct) {
  for (const auto& keep : testing::subsets(3, 1)) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto u = testing::random_unit(8), v = testing::random_unit(8);
      const auto m = partial_cross_trace(u, v, {3, 2, keep});
      Complex tr = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
      EXPECT_NEAR(std::abs(tr - inner(v, u)), 0.0, 1e-12);
      // oracle from explicit index decomposition
      const auto o = testing::oracle_cross_trace(u.view(), v.view(), 3, 2, keep);
      EXPECT_LT((testing::to_eigen(m) - o).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(SparseVector, DenseRoundTrip) {
  const ComplexVector v{0, 1, 0, Complex(0, 2)};
  const auto s = SparseVector::from_dense(v.view());
  EXPECT_EQ(s.entries.size(), 2u);
  EXPECT_EQ(s.to_dense(), v);
}

TEST(GramCheck, ScaledIdentity) {
  // two labels, component spaces orthogonal: M = 2*I
  std::vector<LabeledEntry> e{{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, -1}};
  const auto g = gram_check(e, 2, 2.0);
  EXPECT_LT(g.deviation, 1e-15);
}

}  // namespace
}  // namespace qcd
