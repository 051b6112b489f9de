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

#include <span>
#include <vector>

#include "qcdesign/classical.hpp"
#include "qcdesign/linalg.hpp"
#include "qcdesign/qdesign.hpp"
#include "qcdesign/verdict.hpp"

namespace qcd {

// r multipartite pure states over N parties of local dimension d. Rows are
// kept sparse: the large arrays carry only a few nonzeros per row.
class QuantumOrthogonalArray {
 public:
  QuantumOrthogonalArray(int parties, int local_dim, int strength,
                         std::vector<SparseVector> rows);

  int parties() const { return parties_; }
  int local_dim() const { return local_dim_; }
  int strength() const { return strength_; }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  std::uint64_t state_dim() const { return ipow(local_dim_, parties_); }

  bool operator==(const QuantumOrthogonalArray& o) const;

 private:
  int parties_, local_dim_, strength_;
  std::vector<SparseVector> rows_;
};

class PureState {
 public:
  PureState(int parties, int local_dim, SparseVector amplitudes);
  PureState(int parties, int local_dim, const ComplexVector& amplitudes);

  int parties() const { return parties_; }
  int local_dim() const { return local_dim_; }
  const SparseVector& amplitudes() const { return amplitudes_; }
  ComplexVector dense() const { return amplitudes_.to_dense(); }

 private:
  int parties_, local_dim_;
  SparseVector amplitudes_;
};

Verdict verify_qoa(const QuantumOrthogonalArray& q, double tol);
Verdict verify_qoa(const QuantumOrthogonalArray& q, int k, double tol);
PureState state_from_qoa(const QuantumOrthogonalArray& q, double tol);
Verdict verify_k_uniform(const PureState& s, int k, double tol);

// Reduced matrix of a state on the kept parties (dense, d^|keep| square).
ComplexMatrix reduced_matrix(const PureState& s, std::span<const unsigned> keep);

QuantumGrid qoa_to_gmoqls(const QuantumOrthogonalArray& q, double tol);
QuantumOrthogonalArray gmoqls_to_qoa(const QuantumGrid& g, double tol);
Verdict verify_gmoqls(const QuantumGrid& g, double tol);
QuantumGrid qoa_to_gmoqlc(const QuantumOrthogonalArray& q, double tol);
QuantumOrthogonalArray gmoqlc_to_qoa(const QuantumGrid& g, double tol);
Verdict verify_gmoqlc(const QuantumGrid& g, double tol);

QuantumOrthogonalArray moqls_to_qoa(std::span<const QuantumGrid> gs, double tol);
QuantumOrthogonalArray moqlc_to_qoa(std::span<const QuantumGrid> gs, double tol);

// Cells of a t-MOQLS/t-MOQLC merged into one grid of product cells in C^(d^t).
QuantumGrid product_cells(std::span<const QuantumGrid> gs);

// Row-order-insensitive comparison, entries within tol.
bool same_rows(const QuantumOrthogonalArray& a, const QuantumOrthogonalArray& b,
               double tol);

}  // namespace qcd
