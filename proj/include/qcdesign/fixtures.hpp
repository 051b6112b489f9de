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

#include <array>
#include <string>
#include <vector>

#include "qcdesign/classical.hpp"
#include "qcdesign/construct.hpp"
#include "qcdesign/qdesign.hpp"
#include "qcdesign/qoa.hpp"

// Worked examples encoded as data. Every accessor builds its object once,
// runs the matching verifier at 1e-9 and throws kVerificationFailed if the
// self-test fails.
namespace qcd::fixtures {

struct Info {
  std::string name;
  std::string kind;         // design-file kind of the default part
  std::vector<std::string> parts;
  std::string description;
};

const std::vector<Info>& catalog();

// Non-classical SOQLS(14): classical cells plus four real superpositions
// in span{|10>,...,|13>}.
const QuantumGrid& soqls14();

struct Moqls12 {
  std::vector<LatinDesign> outer;     // 2-MOLS(4)
  std::vector<LatinDesign> inner;     // 2-MOLS(3)
  BlockUnitary unitary;               // four 3x3 blocks
  std::vector<TauPattern> patterns;   // one per square
  std::vector<QuantumGrid> pair;      // the lifted 2-MOQLS(12)
  bool u0_repaired = true;            // 1/sqrt(3) prefactor restored
  bool u2_repaired = true;            // bottom-right entry 1
};
const Moqls12& moqls12();

struct Qls47 {
  QuantumGrid phi;                    // classical IQLS(4;2)
  std::vector<QuantumGrid> phi_fillers;
  QuantumGrid phi_filled;             // non-classical QLS(4)
  QuantumGrid psi;                    // PIQLS(7) of type 1^3 2^2
  std::vector<QuantumGrid> psi_fillers;
  QuantumGrid psi_filled;             // non-classical QLS(7)
};
const Qls47& qls4_7();

struct Soqls16 {
  QuantumGrid printed_hsols;          // as tabulated; fails self-orthogonality
  QuantumGrid hsols;                  // repaired classical HSOQLS(4^4)
  QuantumGrid sols;                   // classical SOQLS(4)
  BlockUnitary unitary;               // four 4x4 blocks
  QuantumGrid square;                 // SOQLS(16)
};
const Soqls16& soqls16();

struct Hsoqls34 {
  QuantumGrid psi;                    // HSOQLS(1^4)
  std::vector<QuantumGrid> pair;      // classical 2-MOQLS(3)
  QuantumGrid square;                 // HSOQLS(3^4), from the construction
  // Cells (row, col, printed symbol) where the printed table disagrees with
  // the construction output.
  std::vector<std::array<int, 3>> table_discrepancies;
};
const Hsoqls34& hsoqls3_4();

struct Moqlc16 {
  std::vector<LatinDesign> cubes;     // 3-MOLC(4) with property (B)
  BlockUnitary unitary;               // same blocks as soqls16
  std::vector<TauPattern> patterns;
  std::vector<QuantumGrid> triple;    // 3-MOQLC(16)
};
const Moqlc16& moqlc16();

// QOA(4,5,2,2) built from the Bell basis.
const QuantumOrthogonalArray& qoa_bell();
// QOA(343,7,7,3) from the closed formula over Z_7.
const QuantumOrthogonalArray& qoa343();

// Named block unitaries: "fourier" needs shape; "moqls12" and "soqls16" are
// fixed 4-block sets of order 3 and 4.
BlockUnitary unitary_preset(const std::string& name, int outer_dim, int inner_dim);
std::vector<std::string> unitary_preset_names();

}  // namespace qcd::fixtures
