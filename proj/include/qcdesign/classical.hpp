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
#include <string>
#include <utility>
#include <vector>

#include "qcdesign/verdict.hpp"

namespace qcd {

// prime factorization as (p, r) pairs, ascending p.
std::vector<std::pair<int, int>> factorize(int n);
std::optional<std::pair<int, int>> prime_power(int q);
bool is_prime(int n);

inline long long ipow_int(long long base, int exp) {
  long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

class GaloisField {
 public:
  static constexpr int kMaxOrder = 64;

  // gf_make: q = p^r <= 64.
  explicit GaloisField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return r_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;  // a != 0

 private:
  int q_, p_, r_;
  std::vector<int> add_, mul_, neg_, inv_;
};

// Classical square (arity 2) or cube (arity 3). Holes are index subsets;
// cell (i,j) is empty exactly when i and j lie in the same hole.
class LatinDesign {
 public:
  static constexpr int kHole = -1;

  LatinDesign(int arity, int order, std::vector<int> cells,
              std::vector<std::vector<int>> holes = {});

  int arity() const { return arity_; }
  int order() const { return order_; }
  const std::vector<int>& cells() const { return cells_; }
  const std::vector<std::vector<int>>& holes() const { return holes_; }
  std::size_t size() const { return cells_.size(); }

  int at(int i, int j) const { return cells_[i * order_ + j]; }
  int at(int i, int j, int k) const {
    return cells_[(i * order_ + j) * order_ + k];
  }
  // Index of the hole containing symbol/coordinate x, or -1.
  int hole_of(int x) const { return hole_index_[x]; }
  bool is_hole(int i, int j) const {
    return hole_of(i) >= 0 && hole_of(i) == hole_of(j);
  }

  LatinDesign transpose() const;

  bool operator==(const LatinDesign& o) const {
    return arity_ == o.arity_ && order_ == o.order_ && cells_ == o.cells_ &&
           holes_ == o.holes_;
  }

 private:
  int arity_, order_;
  std::vector<int> cells_;
  std::vector<std::vector<int>> holes_;
  std::vector<int> hole_index_;
};

class OrthogonalArray {
 public:
  OrthogonalArray(int rows, int factors, int levels, int strength,
                  std::vector<int> body);

  int rows() const { return rows_; }
  int factors() const { return factors_; }
  int levels() const { return levels_; }
  int strength() const { return strength_; }
  int at(int r, int c) const { return body_[r * factors_ + c]; }
  const std::vector<int>& body() const { return body_; }

  bool operator==(const OrthogonalArray& o) const = default;

 private:
  int rows_, factors_, levels_, strength_;
  std::vector<int> body_;
};

std::vector<LatinDesign> mols_prime_power(int q);
LatinDesign sols_prime_power(int q, std::optional<int> lam = std::nullopt);
LatinDesign hsols_unit_holes(int q);
std::pair<LatinDesign, LatinDesign> hmols_unit_holes(int q);

enum class ClassicalProperty { kLatin, kMolsPairwise, kSols, kHsols, kMolcWithB };

Verdict verify_classical(std::span<const LatinDesign> designs,
                         ClassicalProperty property);
inline bool verify_classical(const LatinDesign& d, ClassicalProperty p) {
  return verify_classical(std::span<const LatinDesign>(&d, 1), p).passed;
}

OrthogonalArray mols_to_oa(std::span<const LatinDesign> squares);
std::vector<LatinDesign> oa_to_mols(const OrthogonalArray& oa);
OrthogonalArray oa_strength3_rs(int q);
std::vector<LatinDesign> oa_to_molc(const OrthogonalArray& oa);
OrthogonalArray molc_to_oa(std::span<const LatinDesign> cubes);
Verdict verify_oa(const OrthogonalArray& oa);

LatinDesign direct_product_ls(const LatinDesign& a, const LatinDesign& b);

struct BoundEntry {
  int value = 0;     // lower bound (0 means no bound known)
  bool exact = false;
  std::string rule;  // short name of the rule giving the bound
};

struct Capability {
  int d = 0;
  BoundEntry m;  // classical MOLS
  BoundEntry M;  // non-classical MOQLS
  BoundEntry c;  // classical MOLC with property (B)
  BoundEntry C;  // non-classical MOQLC
};

Capability capability(int d);

}  // namespace qcd
