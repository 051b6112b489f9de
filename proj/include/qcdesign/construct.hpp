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

namespace qcd {

// U = sum_i |i><i| (x) U_i with d1 blocks of order d2.
struct BlockUnitary {
  int outer_dim = 0;
  int inner_dim = 0;
  std::vector<ComplexMatrix> blocks;

  ComplexMatrix assemble() const;
  // Throws unless every block is unitary (and, if asked, none is identity).
  void validate(double tol, bool non_identity) const;
};

// Normalized d2-point DFT in every block.
BlockUnitary fourier_block_unitary(int outer_dim, int inner_dim);
ComplexMatrix fourier_matrix(int n);

// Per-block choice between identity (false) and U (true), indexed like the
// outer square or cube.
struct TauPattern {
  int arity = 2;
  int order = 0;
  std::vector<bool> use_u;

  bool uniform() const;
};

TauPattern identity_pattern(int arity, int order);
TauPattern all_u_pattern(int arity, int order);
// U wherever the outer symbol lies in the upper half {ceil(d/2),...,d-1}.
TauPattern default_pattern(const LatinDesign& outer);
// Pattern s keyed on outer[(s+1) % n]. Keying a design on its own symbols
// makes tau constant on each symbol class, so every overlap stays 0 or 1.
std::vector<TauPattern> default_patterns(std::span<const LatinDesign> outer);

std::vector<QuantumGrid> moqls_direct_product(std::span<const QuantumGrid> a,
                                              std::span<const QuantumGrid> b,
                                              double tol);
std::vector<QuantumGrid> moqls_from_mols(std::span<const LatinDesign> mols_a,
                                         std::span<const LatinDesign> mols_b,
                                         const BlockUnitary& u,
                                         std::span<const TauPattern> patterns,
                                         double tol);
QuantumGrid fill_holes(const QuantumGrid& g, std::span<const QuantumGrid> fillers,
                       double tol);
QuantumGrid soqls_fill(const QuantumGrid& hsols, const QuantumGrid& sols,
                       const BlockUnitary& u, double tol);
std::vector<QuantumGrid> weighting(std::span<const QuantumGrid> hmols,
                                   std::span<const QuantumGrid> moqls, double tol);
QuantumGrid hsoqls_product(const QuantumGrid& hsoqls,
                           std::span<const QuantumGrid> moqls, double tol);
std::vector<QuantumGrid> moqlc_direct_product(std::span<const QuantumGrid> a,
                                              std::span<const QuantumGrid> b,
                                              double tol);
std::vector<QuantumGrid> moqlc_from_molc(std::span<const LatinDesign> molc_a,
                                         std::span<const LatinDesign> molc_b,
                                         const BlockUnitary& u,
                                         std::span<const TauPattern> patterns,
                                         double tol);

}  // namespace qcd
