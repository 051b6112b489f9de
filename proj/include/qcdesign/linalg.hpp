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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace qcd {

using Complex = std::complex<double>;

// Tolerance used when a caller passes none. QCDESIGN_TOL overrides 1e-9.
double default_tolerance();

class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim);
  explicit ComplexVector(std::vector<Complex> entries);
  ComplexVector(std::initializer_list<Complex> entries);

  static ComplexVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  Complex& operator[](std::size_t i) { return entries_[i]; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Complex> view() const { return entries_; }
  std::span<Complex> view() { return entries_; }
  const std::vector<Complex>& entries() const { return entries_; }

  double norm() const;
  ComplexVector conj() const;

  bool operator==(const ComplexVector& other) const = default;

 private:
  std::vector<Complex> entries_;
};

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  // Row-major nested initializer, mostly for literal tables.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexVector apply(std::span<const Complex> v) const;
  ComplexVector column(std::size_t c) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

struct SparseEntry {
  std::uint64_t index;
  Complex value;
};

// Sorted by index, no duplicate indices.
struct SparseVector {
  std::uint64_t dim = 0;
  std::vector<SparseEntry> entries;

  static SparseVector from_dense(std::span<const Complex> v);
  ComplexVector to_dense() const;
  double norm() const;
};

SparseVector sparse_tensor(const SparseVector& u, const SparseVector& v);
SparseVector sparse_sum(std::span<const SparseVector> terms);

struct PartySplit {
  unsigned parties = 0;
  unsigned local_dim = 0;
  std::vector<unsigned> keep;  // sorted, 0-based; party 0 most significant
};

ComplexVector tensor(const ComplexVector& u, const ComplexVector& v);
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
Complex inner(const ComplexVector& u, const ComplexVector& v);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double unitarity_deviation(const ComplexMatrix& m);
bool is_unitary(const ComplexMatrix& m, double tol);

// max |<v_a|v_b> - delta_ab| over the list; count must equal dim.
double gram_deviation(std::span<const ComplexVector> vs);
bool gram_is_identity(std::span<const ComplexVector> vs, double tol);

// Tr over the parties not in split.keep of |u><v|, via A_u A_v^dagger.
ComplexMatrix partial_cross_trace(const ComplexVector& u,
                                  const ComplexVector& v,
                                  const PartySplit& split);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

// Outcome of comparing a row Gram M[a][b] = sum_c x[a][c] conj(x[b][c])
// against scale * identity.
struct GramCheck {
  double deviation = 0.0;    // max-norm of M - scale*I
  double hermiticity = 0.0;  // max |M - M^dagger|, only when materialized
  std::uint64_t row = 0;     // address of the largest deviation
  std::uint64_t col = 0;
};

struct LabeledEntry {
  std::uint64_t label;
  std::uint64_t component;
  Complex value;
};

// Sparse Gram engine shared by every orthonormality and partial-trace check.
// Labels must lie in [0, labels).
GramCheck gram_check(std::vector<LabeledEntry> entries, std::uint64_t labels,
                     double scale);

// Splits amplitude indices of an N-party state into (kept, traced) labels.
std::vector<LabeledEntry> split_entries(const SparseVector& state,
                                        const PartySplit& split);

}  // namespace qcd
