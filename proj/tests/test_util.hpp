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

// Shared helpers for the test suites: seeded randomness and oracles that do
// not reuse library code paths.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "qcdesign/classical.hpp"
#include "qcdesign/linalg.hpp"
#include "qcdesign/qdesign.hpp"
#include "qcdesign/qoa.hpp"

namespace qcd::testing {

constexpr double kTol = 1e-9;

// QCDESIGN_SEED overrides the default seed.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("QCDESIGN_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611ULL;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(seed());
  return g;
}

inline Complex random_complex() {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng()), n(rng())};
}

inline ComplexVector random_unit(std::size_t dim) {
  ComplexVector v(dim);
  double s = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = random_complex();
    s += std::norm(v[i]);
  }
  for (std::size_t i = 0; i < dim; ++i) v[i] /= std::sqrt(s);
  return v;
}

inline Complex random_phase() {
  std::uniform_real_distribution<double> u(0.0, 2 * M_PI);
  return std::polar(1.0, u(rng()));
}

using EMatrix = Eigen::MatrixXcd;

inline Eigen::VectorXcd to_eigen(std::span<const Complex> v) {
  Eigen::VectorXcd e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) e(Eigen::Index(i)) = v[i];
  return e;
}

inline EMatrix to_eigen(const ComplexMatrix& m) {
  EMatrix e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(Eigen::Index(r), Eigen::Index(c)) = m(r, c);
  return e;
}

// Tr_rest |u><v| by explicit index decomposition, party 0 most significant.
inline EMatrix oracle_cross_trace(std::span<const Complex> u, std::span<const Complex> v,
                                  unsigned parties, unsigned d, std::vector<unsigned> keep) {
  std::sort(keep.begin(), keep.end());
  const std::size_t dk = static_cast<std::size_t>(std::pow(d, keep.size()));
  EMatrix out = EMatrix::Zero(Eigen::Index(dk), Eigen::Index(dk));
  auto digits = [&](std::size_t x) {
    std::vector<unsigned> dg(parties);
    for (unsigned p = parties; p-- > 0;) {
      dg[p] = unsigned(x % d);
      x /= d;
    }
    return dg;
  };
  auto kept_index = [&](const std::vector<unsigned>& dg) {
    std::size_t r = 0;
    for (unsigned p : keep) r = r * d + dg[p];
    return r;
  };
  auto rest_equal = [&](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    for (unsigned p = 0; p < parties; ++p)
      if (!std::binary_search(keep.begin(), keep.end(), p) && a[p] != b[p]) return false;
    return true;
  };
  for (std::size_t x = 0; x < u.size(); ++x) {
    if (u[x] == Complex(0)) continue;
    const auto dx = digits(x);
    for (std::size_t y = 0; y < v.size(); ++y) {
      if (v[y] == Complex(0)) continue;
      const auto dy = digits(y);
      if (!rest_equal(dx, dy)) continue;
      out(Eigen::Index(kept_index(dx)), Eigen::Index(kept_index(dy))) += u[x] * std::conj(v[y]);
    }
  }
  return out;
}

// Brute-force strength check: every k columns show each k-tuple equally often.
inline bool oracle_oa(const OrthogonalArray& oa, int k) {
  const int n = oa.factors(), d = oa.levels();
  std::vector<int> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  const long long tuples = ipow_int(d, k);
  if (oa.rows() % tuples != 0) return false;
  const long long lambda = oa.rows() / tuples;
  while (true) {
    std::map<std::vector<int>, long long> count;
    for (int r = 0; r < oa.rows(); ++r) {
      std::vector<int> t;
      for (int c : cols) t.push_back(oa.at(r, c));
      ++count[t];
    }
    if (static_cast<long long>(count.size()) != tuples) return false;
    for (const auto& [t, c] : count)
      if (c != lambda) return false;
    int i = k - 1;
    while (i >= 0 && cols[i] == n - k + i) --i;
    if (i < 0) return true;
    ++cols[i];
    for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
}

// Latin oracle on a 2D integer grid with optional unit holes on the diagonal
// or arbitrary hole subsets; holes hold -1.
inline bool oracle_latin_square(const std::vector<int>& cells, int d,
                                const std::vector<std::vector<int>>& holes = {}) {
  std::vector<int> hole_of(d, -1);
  for (std::size_t h = 0; h < holes.size(); ++h)
    for (int x : holes[h]) hole_of[x] = int(h);
  for (int line = 0; line < d; ++line) {
    for (int axis = 0; axis < 2; ++axis) {
      std::multiset<int> seen;
      for (int t = 0; t < d; ++t) {
        const int i = axis ? t : line, j = axis ? line : t;
        const bool hole = hole_of[i] >= 0 && hole_of[i] == hole_of[j];
        const int v = cells[i * d + j];
        if (hole != (v < 0)) return false;
        if (!hole) seen.insert(v);
      }
      // a line through hole H misses exactly the symbols of H
      std::set<int> expect;
      for (int s = 0; s < d; ++s) expect.insert(s);
      if (hole_of[line] >= 0)
        for (int x : holes[hole_of[line]]) expect.erase(x);
      if (std::set<int>(seen.begin(), seen.end()) != expect || seen.size() != expect.size())
        return false;
    }
  }
  return true;
}

// Number of distinct ordered pairs when superimposing two squares (holes skipped).
inline std::size_t oracle_pair_count(const std::vector<int>& a, const std::vector<int>& b) {
  std::set<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] >= 0 && b[i] >= 0) pairs.insert({a[i], b[i]});
  return pairs.size();
}

inline std::vector<int> transpose_cells(const std::vector<int>& a, int d) {
  std::vector<int> t(a.size());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) t[j * d + i] = a[i * d + j];
  return t;
}

// Orthonormality of a list of vectors by explicit Gram matrix.
inline double oracle_gram_dev(const std::vector<ComplexVector>& vs) {
  double dev = 0;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = 0; b < vs.size(); ++b) {
      Complex s = 0;
      for (std::size_t i = 0; i < vs[a].dim(); ++i) s += std::conj(vs[a][i]) * vs[b][i];
      dev = std::max(dev, std::abs(s - Complex(a == b ? 1.0 : 0.0)));
    }
  return dev;
}

// QLS oracle: every row and column of a 2D grid is an orthonormal basis.
inline bool oracle_qls(const QuantumGrid& g) {
  const int d = g.order();
  for (int line = 0; line < d; ++line) {
    std::vector<ComplexVector> row, col;
    for (int t = 0; t < d; ++t) {
      row.push_back(g.cell_vector(g.index(line, t)));
      col.push_back(g.cell_vector(g.index(t, line)));
    }
    if (oracle_gram_dev(row) > kTol || oracle_gram_dev(col) > kTol) return false;
  }
  return true;
}

// Dense state vector of a QOA row sum, normalized.
inline std::vector<Complex> oracle_state(const QuantumOrthogonalArray& q) {
  std::vector<Complex> s(q.state_dim());
  for (const auto& row : q.rows())
    for (const auto& e : row.entries) s[e.index] += e.value;
  double n = 0;
  for (auto& x : s) n += std::norm(x);
  for (auto& x : s) x /= std::sqrt(n);
  return s;
}

// Rows |address>|cell> assembled without the converter's input check.
inline QuantumOrthogonalArray rows_qoa(const QuantumGrid& g, int arity) {
  std::vector<SparseVector> rows;
  const std::size_t cd = g.cell_dim();
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    SparseVector r;
    r.dim = g.cell_count() * cd;
    const auto v = g.cell_vector(c);
    for (std::size_t x = 0; x < cd; ++x)
      if (v[x] != Complex{}) r.entries.push_back({c * cd + x, v[x]});
    rows.push_back(std::move(r));
  }
  int t = 0;
  for (std::size_t n = 1; n < cd; n *= std::size_t(g.order())) ++t;
  return QuantumOrthogonalArray(arity + t, g.order(), arity, std::move(rows));
}

inline std::vector<std::vector<unsigned>> subsets(unsigned n, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (unsigned i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace qcd::testing
