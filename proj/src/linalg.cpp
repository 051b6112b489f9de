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

#include "qcdesign/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "qcdesign/error.hpp"
#include "qcdesign/parallel.hpp"

namespace qcd {

double default_tolerance() {
  static const double tol = [] {
    if (const char* env = std::getenv("QCDESIGN_TOL")) {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end != env && v > 0.0 && std::isfinite(v)) return v;
    }
    return 1e-9;
  }();
  return tol;
}

ComplexVector::ComplexVector(std::size_t dim) : entries_(dim) {
  require(dim > 0, ErrorCode::kInvalidArgument, "vector dimension must be > 0");
}

ComplexVector::ComplexVector(std::vector<Complex> entries)
    : entries_(std::move(entries)) {
  require(!entries_.empty(), ErrorCode::kInvalidArgument,
          "vector dimension must be > 0");
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries)
    : ComplexVector(std::vector<Complex>(entries)) {}

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t index) {
  require(index < dim, ErrorCode::kInvalidArgument, "basis index out of range");
  ComplexVector v(dim);
  v[index] = 1.0;
  return v;
}

double ComplexVector::norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexVector ComplexVector::conj() const {
  ComplexVector out(*this);
  for (auto& z : out.entries_) z = std::conj(z);
  return out;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  require(rows > 0 && cols > 0, ErrorCode::kInvalidArgument,
          "matrix shape must be positive");
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  require(rows_ > 0 && cols_ > 0, ErrorCode::kInvalidArgument,
          "matrix shape must be positive");
  for (const auto& r : rows) {
    require(r.size() == cols_, ErrorCode::kDimensionMismatch,
            "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  require(cols_ == other.rows_, ErrorCode::kDimensionMismatch,
          "matrix product shape mismatch");
  ComplexMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex a = (*this)(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  return out;
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> v) const {
  require(v.size() == cols_, ErrorCode::kDimensionMismatch,
          "matrix-vector shape mismatch");
  ComplexVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Complex s{};
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
  ComplexVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

SparseVector SparseVector::from_dense(std::span<const Complex> v) {
  SparseVector s;
  s.dim = v.size();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != Complex{}) s.entries.push_back({i, v[i]});
  return s;
}

ComplexVector SparseVector::to_dense() const {
  ComplexVector v(static_cast<std::size_t>(dim));
  for (const auto& e : entries) v[e.index] = e.value;
  return v;
}

double SparseVector::norm() const {
  double s = 0.0;
  for (const auto& e : entries) s += std::norm(e.value);
  return std::sqrt(s);
}

SparseVector sparse_tensor(const SparseVector& u, const SparseVector& v) {
  SparseVector out;
  out.dim = u.dim * v.dim;
  out.entries.reserve(u.entries.size() * v.entries.size());
  for (const auto& a : u.entries)
    for (const auto& b : v.entries)
      out.entries.push_back({a.index * v.dim + b.index, a.value * b.value});
  return out;
}

SparseVector sparse_sum(std::span<const SparseVector> terms) {
  SparseVector out;
  if (terms.empty()) return out;
  out.dim = terms.front().dim;
  std::vector<SparseEntry> all;
  for (const auto& t : terms) {
    require(t.dim == out.dim, ErrorCode::kDimensionMismatch,
            "sparse sum dimension mismatch");
    all.insert(all.end(), t.entries.begin(), t.entries.end());
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const auto& a, const auto& b) { return a.index < b.index; });
  for (const auto& e : all) {
    if (!out.entries.empty() && out.entries.back().index == e.index)
      out.entries.back().value += e.value;
    else
      out.entries.push_back(e);
  }
  std::erase_if(out.entries, [](const auto& e) { return e.value == Complex{}; });
  return out;
}

ComplexVector tensor(const ComplexVector& u, const ComplexVector& v) {
  ComplexVector out(u.dim() * v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) out[i * v.dim() + j] = u[i] * v[j];
  return out;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  require(u.size() == v.size(), ErrorCode::kDimensionMismatch,
          "inner product dimension mismatch (" + std::to_string(u.size()) +
              " vs " + std::to_string(v.size()) + ")");
  Complex s{};
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

Complex inner(const ComplexVector& u, const ComplexVector& v) {
  return inner(u.view(), v.view());
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          ErrorCode::kDimensionMismatch, "matrix shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

double unitarity_deviation(const ComplexMatrix& m) {
  require(m.rows() == m.cols(), ErrorCode::kInvalidArgument,
          "unitarity check needs a square matrix");
  return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.rows()));
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return unitarity_deviation(m) <= tol;
}

double gram_deviation(std::span<const ComplexVector> vs) {
  require(!vs.empty(), ErrorCode::kInvalidArgument, "empty vector list");
  const std::size_t dim = vs.front().dim();
  require(vs.size() == dim, ErrorCode::kInvalidArgument,
          "basis check needs exactly dim vectors");
  double dev = 0.0;
  for (std::size_t a = 0; a < vs.size(); ++a) {
    require(vs[a].dim() == dim, ErrorCode::kDimensionMismatch,
            "vectors differ in dimension");
    for (std::size_t b = a; b < vs.size(); ++b) {
      const Complex g = inner(vs[a], vs[b]);
      dev = std::max(dev, std::abs(g - (a == b ? 1.0 : 0.0)));
    }
  }
  return dev;
}

bool gram_is_identity(std::span<const ComplexVector> vs, double tol) {
  return gram_deviation(vs) <= tol;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

namespace {

struct SplitPlan {
  std::vector<std::uint64_t> place;  // place value of each party
  std::vector<bool> kept;
  std::uint64_t d;
};

SplitPlan plan_split(const PartySplit& split, std::uint64_t dim) {
  require(split.parties > 0 && split.local_dim > 0,
          ErrorCode::kInvalidArgument, "party split needs N, d > 0");
  require(ipow(split.local_dim, split.parties) == dim,
          ErrorCode::kDimensionMismatch,
          "state dimension " + std::to_string(dim) + " is not " +
              std::to_string(split.local_dim) + "^" +
              std::to_string(split.parties));
  SplitPlan plan;
  plan.d = split.local_dim;
  plan.kept.assign(split.parties, false);
  for (std::size_t i = 0; i < split.keep.size(); ++i) {
    require(split.keep[i] < split.parties, ErrorCode::kInvalidArgument,
            "kept party out of range");
    require(i == 0 || split.keep[i] > split.keep[i - 1],
            ErrorCode::kInvalidArgument, "kept parties must be sorted, unique");
    plan.kept[split.keep[i]] = true;
  }
  plan.place.resize(split.parties);
  std::uint64_t p = 1;
  for (unsigned q = split.parties; q-- > 0;) {
    plan.place[q] = p;
    p *= plan.d;
  }
  return plan;
}

inline void split_index(const SplitPlan& plan, std::uint64_t x,
                        std::uint64_t& kept, std::uint64_t& traced) {
  kept = 0;
  traced = 0;
  for (std::size_t q = 0; q < plan.place.size(); ++q) {
    const std::uint64_t digit = (x / plan.place[q]) % plan.d;
    if (plan.kept[q])
      kept = kept * plan.d + digit;
    else
      traced = traced * plan.d + digit;
  }
}

}  // namespace

ComplexMatrix partial_cross_trace(const ComplexVector& u,
                                  const ComplexVector& v,
                                  const PartySplit& split) {
  require(u.dim() == v.dim(), ErrorCode::kDimensionMismatch,
          "partial trace operands differ in dimension");
  const SplitPlan plan = plan_split(split, u.dim());
  const std::uint64_t kept_dim = ipow(split.local_dim, split.keep.size());
  const std::uint64_t traced_dim = u.dim() / kept_dim;
  // A_u and A_v laid out kept-major.
  std::vector<Complex> au(u.dim()), av(u.dim());
  for (std::uint64_t x = 0; x < u.dim(); ++x) {
    std::uint64_t k, t;
    split_index(plan, x, k, t);
    au[k * traced_dim + t] = u[x];
    av[k * traced_dim + t] = v[x];
  }
  ComplexMatrix out(kept_dim, kept_dim);
  for (std::uint64_t a = 0; a < kept_dim; ++a) {
    const Complex* ra = &au[a * traced_dim];
    for (std::uint64_t b = 0; b < kept_dim; ++b) {
      const Complex* rb = &av[b * traced_dim];
      Complex s{};
      for (std::uint64_t t = 0; t < traced_dim; ++t) s += ra[t] * std::conj(rb[t]);
      out(a, b) = s;
    }
  }
  return out;
}

std::vector<LabeledEntry> split_entries(const SparseVector& state,
                                        const PartySplit& split) {
  const SplitPlan plan = plan_split(split, state.dim);
  std::vector<LabeledEntry> out;
  out.reserve(state.entries.size());
  for (const auto& e : state.entries) {
    std::uint64_t k, t;
    split_index(plan, e.index, k, t);
    out.push_back({k, t, e.value});
  }
  return out;
}

namespace {

constexpr std::uint64_t kDenseGramLimit = 2048;

void consider(GramCheck& best, double dev, std::uint64_t r, std::uint64_t c) {
  if (dev > best.deviation ||
      (dev == best.deviation && dev > 0 &&
       (r < best.row || (r == best.row && c < best.col)))) {
    best.deviation = dev;
    best.row = r;
    best.col = c;
  }
}

}  // namespace

GramCheck gram_check(std::vector<LabeledEntry> entries, std::uint64_t labels,
                     double scale) {
  for (const auto& e : entries)
    require(e.label < labels, ErrorCode::kInvalidArgument,
            "Gram label out of range");
  // Bucket by component; within a bucket entries are ordered by label.
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.component != b.component ? a.component < b.component
                                      : a.label < b.label;
  });
  std::vector<std::size_t> bucket_start;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (i == 0 || entries[i].component != entries[i - 1].component)
      bucket_start.push_back(i);
  bucket_start.push_back(entries.size());

  GramCheck result;
  if (labels <= kDenseGramLimit) {
    std::vector<Complex> m(labels * labels);
    for (std::size_t b = 0; b + 1 < bucket_start.size(); ++b) {
      for (std::size_t i = bucket_start[b]; i < bucket_start[b + 1]; ++i)
        for (std::size_t j = bucket_start[b]; j < bucket_start[b + 1]; ++j)
          m[entries[i].label * labels + entries[j].label] +=
              entries[i].value * std::conj(entries[j].value);
    }
    for (std::uint64_t r = 0; r < labels; ++r)
      for (std::uint64_t c = 0; c < labels; ++c) {
        const Complex target = r == c ? Complex(scale) : Complex{};
        consider(result, std::abs(m[r * labels + c] - target), r, c);
        result.hermiticity =
            std::max(result.hermiticity,
                     std::abs(m[r * labels + c] - std::conj(m[c * labels + r])));
      }
    return result;
  }

  // Streaming rows: for each label a, walk its entries and the buckets they
  // hit, accumulating row a of the Gram matrix into a scratch buffer.
  std::vector<std::size_t> by_label(entries.size());
  for (std::size_t i = 0; i < by_label.size(); ++i) by_label[i] = i;
  std::stable_sort(by_label.begin(), by_label.end(),
                   [&](std::size_t a, std::size_t b) {
                     return entries[a].label < entries[b].label;
                   });
  std::vector<std::size_t> bucket_of(entries.size());
  for (std::size_t b = 0; b + 1 < bucket_start.size(); ++b)
    for (std::size_t i = bucket_start[b]; i < bucket_start[b + 1]; ++i)
      bucket_of[i] = b;
  std::vector<std::size_t> label_start(labels + 1, 0);
  for (const auto& e : entries) ++label_start[e.label + 1];
  for (std::uint64_t l = 0; l < labels; ++l) label_start[l + 1] += label_start[l];

  const std::size_t blocks = std::min<std::uint64_t>(labels, 64);
  std::vector<GramCheck> partial(blocks);
  parallel_for(blocks, [&](std::size_t blk) {
    std::vector<Complex> row(labels);
    std::vector<std::uint64_t> touched;
    std::vector<bool> mark(labels, false);
    GramCheck local;
    const std::uint64_t lo = labels * blk / blocks;
    const std::uint64_t hi = labels * (blk + 1) / blocks;
    for (std::uint64_t a = lo; a < hi; ++a) {
      for (std::size_t p = label_start[a]; p < label_start[a + 1]; ++p) {
        const std::size_t i = by_label[p];
        const std::size_t b = bucket_of[i];
        for (std::size_t j = bucket_start[b]; j < bucket_start[b + 1]; ++j) {
          const std::uint64_t c = entries[j].label;
          if (!mark[c]) {
            mark[c] = true;
            touched.push_back(c);
          }
          row[c] += entries[i].value * std::conj(entries[j].value);
        }
      }
      if (!mark[a]) consider(local, std::abs(scale), a, a);
      std::sort(touched.begin(), touched.end());
      for (std::uint64_t c : touched) {
        const Complex target = c == a ? Complex(scale) : Complex{};
        consider(local, std::abs(row[c] - target), a, c);
        row[c] = Complex{};
        mark[c] = false;
      }
      touched.clear();
    }
    partial[blk] = local;
  });
  for (const auto& p : partial) consider(result, p.deviation, p.row, p.col);
  return result;
}

}  // namespace qcd
