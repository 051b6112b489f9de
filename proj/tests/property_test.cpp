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

// Randomized and exhaustive property checks. QCDESIGN_SEED changes the seed.
#include <gtest/gtest.h>

#include "qcdesign/classical.hpp"
#include "qcdesign/construct.hpp"
#include "qcdesign/error.hpp"
#include "qcdesign/fixtures.hpp"
#include "qcdesign/qoa.hpp"
#include "test_util.hpp"

namespace qcd {
namespace {

using testing::kTol;
using testing::rng;

int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

std::vector<std::optional<ComplexVector>> cells_of(const QuantumGrid& g) {
  std::vector<std::optional<ComplexVector>> out;
  for (std::size_t i = 0; i < g.cell_count(); ++i)
    out.push_back(g.is_hole(i) ? std::nullopt : std::optional(g.cell_vector(i)));
  return out;
}

QuantumGrid rebuild(const QuantumGrid& g, std::vector<std::optional<ComplexVector>> c) {
  return QuantumGrid(g.arity(), g.order(), g.cell_dim(), std::move(c), g.holes(), g.parties());
}

QuantumGrid random_phases(const QuantumGrid& g) {
  auto c = cells_of(g);
  for (auto& v : c)
    if (v) {
      const Complex p = testing::random_phase();
      for (std::size_t i = 0; i < v->dim(); ++i) (*v)[i] *= p;
    }
  return rebuild(g, c);
}

std::vector<QuantumGrid> embed_pair(const std::vector<LatinDesign>& m) {
  return {embed_classical(m[0]), embed_classical(m[1])};
}

TEST(LinalgProperty, ReducedStatesArePhysical) {
  for (int rep = 0; rep < 100; ++rep) {
    const unsigned parties = unsigned(uniform_int(2, 4));
    const unsigned d = unsigned(uniform_int(2, 3));
    const auto psi = testing::random_unit(ipow(d, parties));
    std::vector<unsigned> keep;
    for (unsigned p = 0; p < parties; ++p)
      if (uniform_int(0, 1)) keep.push_back(p);
    if (keep.empty()) keep.push_back(0);
    const auto m = testing::to_eigen(partial_cross_trace(psi, psi, {parties, d, keep}));
    EXPECT_LE((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(m.trace().real(), 1.0, 1e-9);
    EXPECT_NEAR(m.trace().imag(), 0.0, 1e-9);
    Eigen::SelfAdjointEigenSolver<testing::EMatrix> es(m);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-9);
  }
}

TEST(LinalgProperty, TensorAssociative) {
  for (int rep = 0; rep < 20; ++rep) {
    const auto u = testing::random_unit(2), v = testing::random_unit(3), w = testing::random_unit(4);
    EXPECT_EQ(tensor(tensor(u, v), w).dim(), 24u);
    const auto a = tensor(tensor(u, v), w), b = tensor(u, tensor(v, w));
    for (std::size_t i = 0; i < 24; ++i) EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, 1e-15);
  }
}

TEST(LinalgProperty, GramPhaseInvariant) {
  for (int rep = 0; rep < 20; ++rep) {
    const int n = uniform_int(2, 7);
    std::vector<ComplexVector> cols;
    const auto f = fourier_matrix(n);
    for (int c = 0; c < n; ++c) cols.push_back(f.column(c));
    ASSERT_TRUE(gram_is_identity(cols, kTol));
    const auto i = std::size_t(uniform_int(0, n - 1));
    const Complex p = testing::random_phase();
    for (std::size_t k = 0; k < cols[i].dim(); ++k) cols[i][k] *= p;
    EXPECT_TRUE(gram_is_identity(cols, kTol));
    // and a non-basis stays a non-basis
    cols[0] = cols[1];
    EXPECT_FALSE(gram_is_identity(cols, kTol));
  }
}

TEST(LinalgProperty, KeepAllIsOuterProduct) {
  for (int rep = 0; rep < 20; ++rep) {
    const auto u = testing::random_unit(8), v = testing::random_unit(8);
    const auto m = partial_cross_trace(u, v, {3, 2, {0, 1, 2}});
    double dev = 0;
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c) dev = std::max(dev, std::abs(m(r, c) - u[r] * std::conj(v[c])));
    EXPECT_LE(dev, 1e-12);
  }
}

// Conjugating one square of an orthogonal pair keeps it orthogonal.
TEST(QdesignProperty, ConjugationInvariance) {
  const std::vector<std::vector<QuantumGrid>> pairs{
      fixtures::moqls12().pair, fixtures::hsoqls3_4().pair, embed_pair(mols_prime_power(4)),
      embed_pair(mols_prime_power(5))};
  for (int rep = 0; rep < 20; ++rep) {
    const auto& p = pairs[rep % pairs.size()];
    std::vector<QuantumGrid> q{random_phases(p[0]), random_phases(p[1])};
    ASSERT_TRUE(verify_moqls(q, kTol).passed) << rep;
    q[rep % 2] = conjugate(q[rep % 2]);
    EXPECT_TRUE(verify_moqls(q, kTol).passed) << rep;
  }
}

TEST(QdesignProperty, CubeConjugationInvariance) {
  const auto& t = fixtures::moqlc16().triple;
  for (const auto& mask : {std::vector{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}}) {
    std::vector<QuantumGrid> c;
    for (int s = 0; s < 3; ++s) c.push_back(mask[s] ? conjugate(t[s]) : t[s]);
    EXPECT_TRUE(verify_moqlc(c, kTol).passed);
  }
}

TEST(QdesignProperty, SoqlsImpliesDiagonalBasis) {
  std::vector<QuantumGrid> all{fixtures::soqls14(), fixtures::soqls16().square,
                               fixtures::soqls16().sols};
  for (int q : {4, 5, 7, 8, 9}) all.push_back(embed_classical(sols_prime_power(q)));
  for (const auto& g : all) {
    ASSERT_TRUE(verify_soqls(g, kTol).passed);
    EXPECT_TRUE(diagonal_basis_check(g, kTol).passed);
  }
}

TEST(QdesignProperty, MoqlsSymmetric) {
  for (const auto& p : {fixtures::moqls12().pair, embed_pair(mols_prime_power(3))}) {
    const std::vector<QuantumGrid> rev{p[1], p[0]};
    EXPECT_EQ(verify_moqls(p, kTol).passed, verify_moqls(rev, kTol).passed);
  }
  const std::vector<QuantumGrid> bad{fixtures::moqls12().pair[0], fixtures::moqls12().pair[0]};
  EXPECT_FALSE(verify_moqls(bad, kTol).passed);
  std::vector<QuantumGrid> four;
  for (const auto& l : mols_prime_power(5)) four.push_back(embed_classical(l));
  std::vector<int> order{0, 1, 2, 3};
  do {
    std::vector<QuantumGrid> perm;
    for (int i : order) perm.push_back(four[i]);
    EXPECT_TRUE(verify_moqls(perm, kTol).passed);
  } while (std::next_permutation(order.begin(), order.end()));
}

// Random Latin squares of order d by shuffling rows, columns and symbols of the
// cyclic square; half the time one cell is corrupted.
LatinDesign random_square(int d, bool corrupt) {
  std::vector<int> r(d), c(d), s(d);
  std::iota(r.begin(), r.end(), 0);
  c = s = r;
  std::shuffle(r.begin(), r.end(), rng());
  std::shuffle(c.begin(), c.end(), rng());
  std::shuffle(s.begin(), s.end(), rng());
  std::vector<int> cells(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) cells[r[i] * d + c[j]] = s[(i + j) % d];
  if (corrupt) {
    const int x = uniform_int(0, d * d - 1);
    cells[x] = (cells[x] + uniform_int(1, d - 1)) % d;
  }
  return LatinDesign(2, d, cells);
}

TEST(QdesignProperty, EmbeddingsAgreeWithClassical) {
  for (int d = 2; d <= 7; ++d) {
    for (int rep = 0; rep < 10; ++rep) {
      const auto a = random_square(d, rep % 2), b = random_square(d, rep % 3 == 0);
      EXPECT_EQ(verify_qls(embed_classical(a), kTol).passed,
                verify_classical(a, ClassicalProperty::kLatin));
      const std::vector<LatinDesign> ab{a, b};
      if (verify_classical(a, ClassicalProperty::kLatin) &&
          verify_classical(b, ClassicalProperty::kLatin)) {
        const std::vector<QuantumGrid> g{embed_classical(a), embed_classical(b)};
        EXPECT_EQ(verify_moqls(g, kTol).passed,
                  verify_classical(ab, ClassicalProperty::kMolsPairwise).passed);
      }
      EXPECT_EQ(verify_soqls(embed_classical(a), kTol).passed,
                verify_classical(a, ClassicalProperty::kSols));
    }
    if (prime_power(d)) {
      const auto m = mols_prime_power(d);
      if (m.size() >= 2) {
        const std::vector<QuantumGrid> g{embed_classical(m[0]), embed_classical(m[1])};
        EXPECT_TRUE(verify_moqls(g, kTol).passed);
      }
    }
  }
  for (int q : {4, 5}) {
    auto cubes = oa_to_molc(oa_strength3_rs(q));
    cubes.resize(3, cubes[0]);
    std::vector<QuantumGrid> g;
    for (const auto& c : cubes) g.push_back(embed_classical(c));
    EXPECT_EQ(verify_moqlc(g, kTol).passed,
              verify_classical(cubes, ClassicalProperty::kMolcWithB).passed);
    for (const auto& c : cubes)
      EXPECT_EQ(verify_qlc(embed_classical(c), kTol).passed,
                verify_classical(c, ClassicalProperty::kLatin));
    // corrupt a cube
    auto cells = cubes[0].cells();
    cells[5] = (cells[5] + 1) % q;
    const LatinDesign bad(3, q, cells);
    EXPECT_FALSE(verify_classical(bad, ClassicalProperty::kLatin));
    EXPECT_FALSE(verify_qlc(embed_classical(bad), kTol).passed);
  }
}

std::vector<LatinDesign> mols_pair(int q) {
  auto m = mols_prime_power(q);
  m.erase(m.begin() + 2, m.end());
  return m;
}

std::vector<LatinDesign> molc_triple(int q) {
  auto m = oa_to_molc(oa_strength3_rs(q));
  m.erase(m.begin() + 3, m.end());
  return m;
}

TEST(ConstructProperty, LiftedSquaresUpToOrder20) {
  for (auto [d1, d2] : {std::pair{3, 3}, {3, 4}, {4, 3}, {3, 5}, {5, 3}, {4, 4}, {4, 5}, {5, 4}}) {
    const auto a = mols_pair(d1), b = mols_pair(d2);
    const auto pats = default_patterns(a);
    const auto out = moqls_from_mols(a, b, fourier_block_unitary(d1, d2), pats, kTol);
    EXPECT_TRUE(verify_moqls(out, kTol).passed) << d1 << "x" << d2;
    EXPECT_TRUE(classicality_witness(out[0], kTol).has_value()) << d1 << "x" << d2;
    // all-identity pattern gives the embedded MacNeish product
    const std::vector<TauPattern> id(2, identity_pattern(2, d1));
    const auto cls = moqls_from_mols(a, b, fourier_block_unitary(d1, d2), id, kTol);
    EXPECT_EQ(cls[0], embed_classical(direct_product_ls(a[0], b[0])));
  }
}

TEST(ConstructProperty, LiftedCubesUpToOrder20) {
  for (auto [d1, d2] : {std::pair{4, 4}, {4, 5}, {5, 4}}) {
    const auto a = molc_triple(d1), b = molc_triple(d2);
    const auto pats = default_patterns(a);
    const auto out = moqlc_from_molc(a, b, fourier_block_unitary(d1, d2), pats, kTol);
    EXPECT_TRUE(verify_moqlc(out, kTol).passed) << d1 << "x" << d2;
    EXPECT_TRUE(classicality_witness(out[0], kTol).has_value()) << d1 << "x" << d2;
  }
}

TEST(ConstructProperty, WeightingAndProducts) {
  for (int n : {4, 5}) {
    const auto [a, b] = hmols_unit_holes(n);
    const std::vector<QuantumGrid> h{embed_classical(a), embed_classical(b)};
    for (int m : {3, 4}) {
      const auto out = weighting(h, embed_pair(mols_pair(m)), kTol);
      EXPECT_TRUE(verify_imoqls(out, kTol).passed) << n << " " << m;
      const auto hs = hsoqls_product(embed_classical(hsols_unit_holes(n)), embed_pair(mols_pair(m)), kTol);
      EXPECT_TRUE(verify_hsoqls(hs, kTol).passed) << n << " " << m;
    }
  }
}

TEST(QoaProperty, GmoqlsEquivalence) {
  std::vector<QuantumOrthogonalArray> qs{fixtures::qoa_bell(),
                                         moqls_to_qoa(fixtures::moqls12().pair, kTol),
                                         moqls_to_qoa(embed_pair(mols_prime_power(3)), kTol)};
  for (const auto& q : qs) {
    const auto g = qoa_to_gmoqls(q, kTol);
    EXPECT_EQ(verify_qoa(q, 2, kTol).passed, verify_gmoqls(g, kTol).passed);
    EXPECT_TRUE(verify_gmoqls(g, kTol).passed);
    EXPECT_TRUE(verify_qoa(gmoqls_to_qoa(g, kTol), 2, kTol).passed);
    // one corrupted cell: swap in a copy of its neighbour
    auto c = cells_of(g);
    c[0] = c[1];
    const auto bad = rebuild(g, c);
    EXPECT_FALSE(verify_gmoqls(bad, kTol).passed);
    EXPECT_FALSE(verify_qoa(testing::rows_qoa(bad, 2), 2, kTol).passed);
    EXPECT_THROW(gmoqls_to_qoa(bad, kTol), qcd::Error);
  }
}

TEST(QoaProperty, GmoqlcEquivalence) {
  for (const auto& q : {fixtures::qoa343(), moqlc_to_qoa(fixtures::moqlc16().triple, kTol)}) {
    const auto g = qoa_to_gmoqlc(q, kTol);
    EXPECT_TRUE(verify_qoa(q, 3, kTol).passed);
    EXPECT_TRUE(verify_gmoqlc(g, kTol).passed);
    auto c = cells_of(g);
    c[0] = c[1];
    const auto bad = rebuild(g, c);
    EXPECT_FALSE(verify_gmoqlc(bad, kTol).passed);
    EXPECT_FALSE(verify_qoa(testing::rows_qoa(bad, 3), 3, kTol).passed);
    EXPECT_THROW(gmoqlc_to_qoa(bad, kTol), qcd::Error);
  }
}

TEST(QoaProperty, UniformityFollowsAndIsMonotone) {
  struct Case {
    QuantumOrthogonalArray q;
    int k;
  };
  const std::vector<Case> cases{{fixtures::qoa_bell(), 2},
                                {fixtures::qoa343(), 3},
                                {moqls_to_qoa(embed_pair(mols_prime_power(3)), kTol), 2},
                                {moqlc_to_qoa(std::vector<QuantumGrid>{
                                                  embed_classical(molc_triple(5)[0]),
                                                  embed_classical(molc_triple(5)[1]),
                                                  embed_classical(molc_triple(5)[2])},
                                              kTol),
                                 3}};
  for (const auto& c : cases) {
    ASSERT_TRUE(verify_qoa(c.q, c.k, kTol).passed);
    const auto s = state_from_qoa(c.q, kTol);
    for (int k = c.k; k >= 1; --k) EXPECT_TRUE(verify_k_uniform(s, k, kTol).passed) << k;
  }
}

TEST(QoaProperty, ReducedMatricesHermitian) {
  for (const auto* q : {&fixtures::qoa_bell(), &fixtures::qoa343()}) {
    const auto s = state_from_qoa(*q, kTol);
    for (const auto& keep : testing::subsets(unsigned(s.parties()), 2)) {
      const auto m = testing::to_eigen(reduced_matrix(s, keep));
      EXPECT_LE((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

}  // namespace
}  // namespace qcd
