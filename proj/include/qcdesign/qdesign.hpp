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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qcdesign/classical.hpp"
#include "qcdesign/linalg.hpp"
#include "qcdesign/verdict.hpp"

namespace qcd {

// 2-D or 3-D grid of unit vectors in C^cell_dim (cell_dim = order^parties).
// Cells are stored flat in row-major address order; holes are index subsets
// and only squares may carry them.
class QuantumGrid {
 public:
  QuantumGrid(int arity, int order, std::size_t cell_dim,
              std::vector<std::optional<ComplexVector>> cells,
              std::vector<std::vector<int>> holes = {}, int parties = 1);
  // Flat form: amplitudes holds cell_count*cell_dim values, hole cells zero.
  QuantumGrid(int arity, int order, std::size_t cell_dim,
              std::vector<Complex> amplitudes, std::vector<bool> hole_mask,
              std::vector<std::vector<int>> holes = {}, int parties = 1);

  int arity() const { return arity_; }
  int order() const { return order_; }
  std::size_t cell_dim() const { return cell_dim_; }
  int parties() const { return parties_; }
  std::size_t cell_count() const { return hole_mask_.size(); }
  const std::vector<std::vector<int>>& holes() const { return holes_; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }

  std::size_t index(int i, int j) const { return std::size_t(i) * order_ + j; }
  std::size_t index(int i, int j, int k) const {
    return (std::size_t(i) * order_ + j) * order_ + k;
  }
  bool is_hole(std::size_t idx) const { return hole_mask_[idx]; }
  std::span<const Complex> cell(std::size_t idx) const {
    return {amplitudes_.data() + idx * cell_dim_, cell_dim_};
  }
  ComplexVector cell_vector(std::size_t idx) const;
  SparseVector sparse_cell(std::size_t idx) const;
  int hole_of(int x) const { return hole_index_[x]; }

  // Address tuple of a flat cell index.
  std::vector<int> address(std::size_t idx) const;

  bool operator==(const QuantumGrid& o) const {
    return arity_ == o.arity_ && order_ == o.order_ &&
           cell_dim_ == o.cell_dim_ && parties_ == o.parties_ &&
           holes_ == o.holes_ && hole_mask_ == o.hole_mask_ &&
           amplitudes_ == o.amplitudes_;
  }

 private:
  void validate();

  int arity_, order_;
  std::size_t cell_dim_;
  int parties_;
  std::vector<Complex> amplitudes_;
  std::vector<bool> hole_mask_;
  std::vector<std::vector<int>> holes_;
  std::vector<int> hole_index_;
};

QuantumGrid embed_classical(const LatinDesign& design);

QuantumGrid conjugate(const QuantumGrid& g);
QuantumGrid transpose(const QuantumGrid& g);
QuantumGrid conj_transpose(const QuantumGrid& g);

Verdict verify_qls(const QuantumGrid& g, double tol);
Verdict verify_moqls(std::span<const QuantumGrid> gs, double tol);
Verdict verify_soqls(const QuantumGrid& g, double tol);
Verdict diagonal_basis_check(const QuantumGrid& g, double tol);
Verdict verify_qlc(const QuantumGrid& g, double tol);
Verdict verify_moqlc(std::span<const QuantumGrid> gs, double tol);
Verdict verify_iqls(const QuantumGrid& g, double tol);
Verdict verify_imoqls(std::span<const QuantumGrid> gs, double tol);
Verdict verify_hsoqls(const QuantumGrid& g, double tol);

struct Witness {
  std::vector<int> first;   // address of the first cell
  std::vector<int> second;  // address of the second cell
  double value = 0.0;       // |<first|second>|
};

// First cell pair (scan order) whose overlap modulus is more than tol away
// from both 0 and 1.
std::optional<Witness> classicality_witness(const QuantumGrid& g, double tol);
Complex cell_overlap(const QuantumGrid& g, std::span<const int> a,
                     std::span<const int> b);

// One cube plane as a square grid: axis fixed at index.
QuantumGrid cube_plane(const QuantumGrid& cube, int axis, int index);

}  // namespace qcd
