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

#include "qcdesign/classical.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "qcdesign/error.hpp"

namespace qcd {

namespace {

std::string str(int v) { return std::to_string(v); }

// Calls f on each sorted k-subset of {0..n-1}.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Monic irreducible polynomials, coefficients low to high (without x^r).
const std::map<int, std::vector<int>>& irreducibles() {
  static const std::map<int, std::vector<int>> table = {
      {4, {1, 1}},           // x^2 + x + 1
      {8, {1, 1, 0}},        // x^3 + x + 1
      {16, {1, 1, 0, 0}},    // x^4 + x + 1
      {32, {1, 0, 1, 0, 0}}, // x^5 + x^2 + 1
      {64, {1, 1, 0, 0, 0, 0}},  // x^6 + x + 1
      {9, {2, 1}},           // x^2 + x + 2
      {25, {2, 1}},          // x^2 + x + 2
      {27, {1, 2, 0}},       // x^3 + 2x + 1
      {49, {3, 1}},          // x^2 + x + 3
  };
  return table;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= n; ++p) {
    int r = 0;
    while (n % p == 0) {
      n /= p;
      ++r;
    }
    if (r) out.push_back({p, r});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

GaloisField::GaloisField(int q) : q_(q) {
  auto pp = prime_power(q);
  require(pp.has_value(), ErrorCode::kNotPrimePower,
          str(q) + " is not a prime power");
  require(q <= kMaxOrder, ErrorCode::kInvalidArgument,
          "field order " + str(q) + " above the supported ceiling " +
              str(kMaxOrder));
  p_ = pp->first;
  r_ = pp->second;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, -1);

  auto digits = [&](int a) {
    std::vector<int> c(r_);
    for (int i = 0; i < r_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int a = 0;
    for (int i = r_ - 1; i >= 0; --i) a = a * p_ + c[i];
    return a;
  };
  std::vector<int> poly;
  if (r_ > 1) poly = irreducibles().at(q);

  for (int a = 0; a < q; ++a) {
    const auto ca = digits(a);
    for (int b = 0; b < q; ++b) {
      const auto cb = digits(b);
      std::vector<int> s(r_);
      for (int i = 0; i < r_; ++i) s[i] = (ca[i] + cb[i]) % p_;
      add_[a * q + b] = encode(s);
      // Schoolbook product, then reduce x^m for m >= r using x^r = -poly.
      std::vector<int> prod(2 * r_ - 1, 0);
      for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
      for (int m = 2 * r_ - 2; m >= r_; --m) {
        const int c = prod[m];
        if (!c) continue;
        prod[m] = 0;
        for (int i = 0; i < r_; ++i)
          prod[m - r_ + i] = ((prod[m - r_ + i] - c * poly[i]) % p_ + p_) % p_;
      }
      prod.resize(r_);
      mul_[a * q + b] = encode(prod);
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = b;
      if (mul_[a * q + b] == 1) inv_[a] = b;
    }
  }
  // Self-test: identities, inverses, associativity and distributivity.
  for (int a = 0; a < q; ++a) {
    require(add(a, 0) == a && mul(a, 1) == a, ErrorCode::kInvalidArgument,
            "field identity self-test failed");
    require(a == 0 || inv_[a] >= 0, ErrorCode::kInvalidArgument,
            "field inverse self-test failed for GF(" + str(q) + ")");
    for (int b = 0; b < q; ++b) {
      require(add(a, b) == add(b, a) && mul(a, b) == mul(b, a),
              ErrorCode::kInvalidArgument, "field commutativity self-test failed");
      for (int c = 0; c < q; ++c)
        require(mul(a, mul(b, c)) == mul(mul(a, b), c) &&
                    mul(a, add(b, c)) == add(mul(a, b), mul(a, c)),
                ErrorCode::kInvalidArgument, "field self-test failed");
    }
  }
}

int GaloisField::inv(int a) const {
  require(a > 0 && a < q_, ErrorCode::kInvalidArgument,
          "zero has no multiplicative inverse");
  return inv_[a];
}

LatinDesign::LatinDesign(int arity, int order, std::vector<int> cells,
                         std::vector<std::vector<int>> holes)
    : arity_(arity), order_(order), cells_(std::move(cells)),
      holes_(std::move(holes)) {
  require(arity == 2 || arity == 3, ErrorCode::kInvalidArgument,
          "arity must be 2 or 3");
  require(order >= 1, ErrorCode::kInvalidArgument, "order must be >= 1");
  std::size_t expect = static_cast<std::size_t>(order) * order;
  if (arity == 3) expect *= order;
  require(cells_.size() == expect, ErrorCode::kDimensionMismatch,
          "expected " + std::to_string(expect) + " cells, got " +
              std::to_string(cells_.size()));
  hole_index_.assign(order, -1);
  require(arity == 2 || holes_.empty(), ErrorCode::kInvalidArgument,
          "holes are only supported on squares");
  for (std::size_t h = 0; h < holes_.size(); ++h) {
    auto& hole = holes_[h];
    require(!hole.empty(), ErrorCode::kInvalidArgument, "empty hole");
    std::sort(hole.begin(), hole.end());
    for (int x : hole) {
      require(x >= 0 && x < order, ErrorCode::kInvalidArgument,
              "hole index out of range");
      require(hole_index_[x] < 0, ErrorCode::kInvalidArgument,
              "holes must be disjoint");
      hole_index_[x] = static_cast<int>(h);
    }
  }
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const int v = cells_[c];
    if (arity == 2) {
      const bool hole = is_hole(static_cast<int>(c) / order,
                                static_cast<int>(c) % order);
      require(hole == (v == kHole), ErrorCode::kInvalidArgument,
              "cell " + std::to_string(c) +
                  (hole ? " lies in a hole but is filled"
                        : " is empty outside the holes"));
    }
    require(v == kHole || (v >= 0 && v < order), ErrorCode::kInvalidArgument,
            "symbol out of range at cell " + std::to_string(c));
  }
}

LatinDesign LatinDesign::transpose() const {
  require(arity_ == 2, ErrorCode::kInvalidArgument, "transpose needs a square");
  std::vector<int> t(cells_.size());
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) t[j * order_ + i] = at(i, j);
  return LatinDesign(2, order_, std::move(t), holes_);
}

OrthogonalArray::OrthogonalArray(int rows, int factors, int levels,
                                 int strength, std::vector<int> body)
    : rows_(rows), factors_(factors), levels_(levels), strength_(strength),
      body_(std::move(body)) {
  require(rows >= 1 && factors >= 1 && levels >= 1, ErrorCode::kInvalidArgument,
          "OA shape must be positive");
  require(strength >= 1 && strength <= factors, ErrorCode::kInvalidArgument,
          "OA strength must lie in [1, factors]");
  require(body_.size() == static_cast<std::size_t>(rows) * factors,
          ErrorCode::kDimensionMismatch, "OA body size mismatch");
  for (int v : body_)
    require(v >= 0 && v < levels, ErrorCode::kInvalidArgument,
            "OA entry out of range");
}

std::vector<LatinDesign> mols_prime_power(int q) {
  require(prime_power(q).has_value(), ErrorCode::kNotPrimePower,
          str(q) + " is not a prime power");
  GaloisField f(q);
  std::vector<LatinDesign> out;
  for (int e = 1; e < q; ++e) {
    std::vector<int> cells(q * q);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) cells[i * q + j] = f.add(f.mul(e, i), j);
    out.emplace_back(2, q, std::move(cells));
  }
  return out;
}

namespace {

bool admissible_lambda(const GaloisField& f, int lam) {
  return lam != 0 && lam != 1 && f.add(lam, lam) != 1;
}

LatinDesign lambda_square(const GaloisField& f, int lam) {
  const int q = f.order();
  const int mu = f.sub(1, lam);
  std::vector<int> cells(q * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      cells[i * q + j] = f.add(f.mul(lam, i), f.mul(mu, j));
  return LatinDesign(2, q, std::move(cells));
}

LatinDesign remove_diagonal(const LatinDesign& l) {
  const int q = l.order();
  std::vector<int> cells = l.cells();
  std::vector<std::vector<int>> holes;
  for (int i = 0; i < q; ++i) {
    cells[i * q + i] = LatinDesign::kHole;
    holes.push_back({i});
  }
  return LatinDesign(2, q, std::move(cells), std::move(holes));
}

}  // namespace

LatinDesign sols_prime_power(int q, std::optional<int> lam) {
  require(prime_power(q).has_value(), ErrorCode::kNotPrimePower,
          str(q) + " is not a prime power");
  require(q >= 4, ErrorCode::kInvalidArgument, "SOLS needs q >= 4");
  GaloisField f(q);
  if (!lam) {
    for (int l = 2; l < q && !lam; ++l)
      if (admissible_lambda(f, l)) lam = l;
  }
  require(lam && *lam >= 0 && *lam < q, ErrorCode::kInvalidArgument,
          "lambda must be a field element");
  require(admissible_lambda(f, *lam), ErrorCode::kInvalidArgument,
          "lambda must avoid 0, 1 and satisfy 2*lambda != 1");
  return lambda_square(f, *lam);
}

LatinDesign hsols_unit_holes(int q) {
  return remove_diagonal(sols_prime_power(q));
}

std::pair<LatinDesign, LatinDesign> hmols_unit_holes(int q) {
  require(prime_power(q).has_value(), ErrorCode::kNotPrimePower,
          str(q) + " is not a prime power");
  require(q >= 4, ErrorCode::kInvalidArgument, "HMOLS(1^q) needs q >= 4");
  GaloisField f(q);
  std::vector<int> lams;
  for (int l = 2; l < q && lams.size() < 2; ++l)
    if (admissible_lambda(f, l)) lams.push_back(l);
  require(lams.size() == 2, ErrorCode::kInvalidArgument,
          "no admissible lambda pair");
  return {remove_diagonal(lambda_square(f, lams[0])),
          remove_diagonal(lambda_square(f, lams[1]))};
}

namespace {

void check_latin(const LatinDesign& l, int idx, Verdict& v) {
  const int d = l.order();
  const std::string tag = "design " + str(idx);
  if (l.arity() == 2) {
    for (int axis = 0; axis < 2; ++axis) {
      for (int a = 0; a < d; ++a) {
        std::vector<int> seen(d, 0);
        for (int b = 0; b < d; ++b) {
          const int s = axis == 0 ? l.at(a, b) : l.at(b, a);
          if (s != LatinDesign::kHole) ++seen[s];
        }
        const int h = l.hole_of(a);
        double bad = 0;
        for (int s = 0; s < d; ++s) {
          const int want = (h >= 0 && l.hole_of(s) == h) ? 0 : 1;
          if (seen[s] != want) bad = std::max(bad, double(std::abs(seen[s] - want)));
        }
        v.check(bad, 0.0, axis == 0 ? "latin row" : "latin column",
                tag + (axis == 0 ? " row " : " column ") + str(a));
      }
    }
    return;
  }
  // cube: every axis-line holds each symbol once
  for (int axis = 0; axis < 3; ++axis)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        std::vector<int> seen(d, 0);
        for (int c = 0; c < d; ++c) {
          int s = axis == 0 ? l.at(c, a, b) : axis == 1 ? l.at(a, c, b) : l.at(a, b, c);
          ++seen[s];
        }
        const bool ok = std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; });
        v.check(ok ? 0 : 1, 0.0, "latin cube line",
                tag + " axis " + str(axis) + " line (" + str(a) + "," + str(b) + ")");
      }
}

// Superimposition of two squares over their non-hole cells must cover every
// ordered pair outside the hole blocks exactly once.
double pair_cover_defect(const LatinDesign& a, const LatinDesign& b) {
  const int d = a.order();
  std::vector<int> count(d * d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (a.is_hole(i, j)) continue;
      const int x = a.at(i, j), y = b.at(i, j);
      if (x < 0 || y < 0) return 1;
      ++count[x * d + y];
    }
  double bad = 0;
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      const int want = a.is_hole(x, y) ? 0 : 1;
      bad = std::max(bad, double(std::abs(count[x * d + y] - want)));
    }
  return bad;
}

LatinDesign plane(const LatinDesign& cube, int axis, int index) {
  const int d = cube.order();
  std::vector<int> cells(d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      cells[a * d + b] = axis == 0   ? cube.at(index, a, b)
                         : axis == 1 ? cube.at(a, index, b)
                                     : cube.at(a, b, index);
  return LatinDesign(2, d, std::move(cells));
}

}  // namespace

Verdict verify_classical(std::span<const LatinDesign> designs,
                         ClassicalProperty property) {
  require(!designs.empty(), ErrorCode::kInvalidArgument, "no designs given");
  const int d = designs.front().order();
  const int arity = designs.front().arity();
  for (const auto& l : designs) {
    require(l.order() == d && l.arity() == arity, ErrorCode::kDimensionMismatch,
            "designs differ in order or arity");
    require(l.holes() == designs.front().holes(), ErrorCode::kInvalidArgument,
            "designs differ in hole partition");
  }
  const bool needs_cube = property == ClassicalProperty::kMolcWithB;
  require(needs_cube ? arity == 3 : (arity == 2 || property == ClassicalProperty::kLatin),
          ErrorCode::kInvalidArgument, "property does not apply to this arity");

  Verdict v;
  for (std::size_t i = 0; i < designs.size(); ++i)
    check_latin(designs[i], static_cast<int>(i), v);

  switch (property) {
    case ClassicalProperty::kLatin:
      break;
    case ClassicalProperty::kMolsPairwise:
      for (std::size_t a = 0; a < designs.size(); ++a)
        for (std::size_t b = a + 1; b < designs.size(); ++b)
          v.check(pair_cover_defect(designs[a], designs[b]), 0.0,
                  "orthogonality", "designs " + str(a) + "," + str(b));
      break;
    case ClassicalProperty::kSols:
    case ClassicalProperty::kHsols: {
      require(designs.size() == 1, ErrorCode::kInvalidArgument,
              "self-orthogonality takes a single square");
      const auto& l = designs.front();
      if (property == ClassicalProperty::kSols) {
        require(l.holes().empty(), ErrorCode::kInvalidArgument,
                "SOLS check expects no holes");
      } else {
        int covered = 0;
        for (const auto& h : l.holes()) covered += static_cast<int>(h.size());
        v.check(covered == d ? 0 : 1, 0.0, "holes partition the index set", "");
      }
      v.check(pair_cover_defect(l, l.transpose()), 0.0,
              "orthogonal to transpose", "");
      break;
    }
    case ClassicalProperty::kMolcWithB: {
      const int t = static_cast<int>(designs.size());
      for_each_subset(t, 3, [&](const std::vector<int>& s) {
        std::vector<int> count(d * d * d, 0);
        for (std::size_t c = 0; c < designs[0].size(); ++c)
          ++count[(designs[s[0]].cells()[c] * d + designs[s[1]].cells()[c]) * d +
                  designs[s[2]].cells()[c]];
        const bool ok = std::all_of(count.begin(), count.end(), [](int x) { return x == 1; });
        v.check(ok ? 0 : 1, 0.0, "triple orthogonality",
                "cubes " + str(s[0]) + "," + str(s[1]) + "," + str(s[2]));
      });
      for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b)
          for (int axis = 0; axis < 3; ++axis)
            for (int k = 0; k < d; ++k)
              v.check(pair_cover_defect(plane(designs[a], axis, k),
                                        plane(designs[b], axis, k)),
                      0.0, "property (B) plane orthogonality",
                      "cubes " + str(a) + "," + str(b) + " axis " + str(axis) +
                          " plane " + str(k));
      break;
    }
  }
  return v;
}

Verdict verify_oa(const OrthogonalArray& oa) {
  const int k = oa.strength();
  const long long dk = static_cast<long long>(ipow_int(oa.levels(), k));
  require(oa.rows() % dk == 0, ErrorCode::kInvalidArgument,
          "rows not divisible by levels^strength");
  const long long lambda = oa.rows() / dk;
  Verdict v;
  for_each_subset(oa.factors(), k, [&](const std::vector<int>& cols) {
    std::vector<long long> count(dk, 0);
    for (int r = 0; r < oa.rows(); ++r) {
      long long t = 0;
      for (int c : cols) t = t * oa.levels() + oa.at(r, c);
      ++count[t];
    }
    double bad = 0;
    for (long long c : count) bad = std::max(bad, double(std::llabs(c - lambda)));
    std::string where = "columns {";
    for (std::size_t i = 0; i < cols.size(); ++i)
      where += (i ? "," : "") + str(cols[i]);
    v.check(bad, 0.0, "tuple balance", where + "}");
  });
  return v;
}

OrthogonalArray mols_to_oa(std::span<const LatinDesign> squares) {
  Verdict v = verify_classical(squares, ClassicalProperty::kMolsPairwise);
  require(v.passed, ErrorCode::kVerificationFailed, "input is not a MOLS set: " + v.summary());
  require(squares.front().holes().empty(), ErrorCode::kInvalidArgument,
          "MOLS with holes do not give an OA");
  const int d = squares.front().order();
  const int t = static_cast<int>(squares.size());
  std::vector<int> body;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      body.push_back(i);
      body.push_back(j);
      for (const auto& l : squares) body.push_back(l.at(i, j));
    }
  return OrthogonalArray(d * d, t + 2, d, 2, std::move(body));
}

std::vector<LatinDesign> oa_to_mols(const OrthogonalArray& oa) {
  const int d = oa.levels();
  require(oa.strength() == 2 && oa.rows() == d * d && oa.factors() >= 3,
          ErrorCode::kInvalidArgument, "need an OA(d^2, t+2, d, 2) with t >= 1");
  Verdict v = verify_oa(oa);
  require(v.passed, ErrorCode::kVerificationFailed, "not an orthogonal array: " + v.summary());
  const int t = oa.factors() - 2;
  std::vector<std::vector<int>> cells(t, std::vector<int>(d * d, -2));
  for (int r = 0; r < oa.rows(); ++r) {
    const int addr = oa.at(r, 0) * d + oa.at(r, 1);
    for (int s = 0; s < t; ++s) {
      require(cells[s][addr] == -2, ErrorCode::kInvalidArgument,
              "address columns are not a bijection");
      cells[s][addr] = oa.at(r, 2 + s);
    }
  }
  std::vector<LatinDesign> out;
  for (auto& c : cells) out.emplace_back(2, d, std::move(c));
  return out;
}

OrthogonalArray oa_strength3_rs(int q) {
  require(prime_power(q).has_value(), ErrorCode::kNotPrimePower,
          str(q) + " is not a prime power");
  GaloisField f(q);
  std::vector<std::array<int, 3>> cols;
  for (int e = 0; e < q; ++e) cols.push_back({1, e, f.mul(e, e)});
  cols.push_back({0, 0, 1});
  if (f.characteristic() == 2) cols.push_back({0, 1, 0});
  const int n = static_cast<int>(cols.size());

  auto det3 = [&](const std::array<int, 3>& a, const std::array<int, 3>& b,
                  const std::array<int, 3>& c) {
    auto m2 = [&](int x, int y, int z, int w) { return f.sub(f.mul(x, w), f.mul(y, z)); };
    int t0 = f.mul(a[0], m2(b[1], b[2], c[1], c[2]));
    int t1 = f.mul(a[1], m2(b[0], b[2], c[0], c[2]));
    int t2 = f.mul(a[2], m2(b[0], b[1], c[0], c[1]));
    return f.add(f.sub(t0, t1), t2);
  };
  for_each_subset(n, 3, [&](const std::vector<int>& s) {
    require(det3(cols[s[0]], cols[s[1]], cols[s[2]]) != 0,
            ErrorCode::kInvalidArgument, "dependent coefficient columns");
  });

  std::vector<int> body;
  body.reserve(q * q * q * n);
  for (int m0 = 0; m0 < q; ++m0)
    for (int m1 = 0; m1 < q; ++m1)
      for (int m2 = 0; m2 < q; ++m2)
        for (const auto& c : cols)
          body.push_back(f.add(f.add(f.mul(m0, c[0]), f.mul(m1, c[1])), f.mul(m2, c[2])));
  return OrthogonalArray(q * q * q, n, q, 3, std::move(body));
}

std::vector<LatinDesign> oa_to_molc(const OrthogonalArray& oa) {
  const int d = oa.levels();
  require(oa.strength() == 3 && oa.rows() == d * d * d && oa.factors() >= 4,
          ErrorCode::kInvalidArgument, "need an OA(d^3, t+3, d, 3) with t >= 1");
  Verdict v = verify_oa(oa);
  require(v.passed, ErrorCode::kVerificationFailed, "not an orthogonal array: " + v.summary());
  const int t = oa.factors() - 3;
  std::vector<std::vector<int>> cells(t, std::vector<int>(d * d * d, -2));
  for (int r = 0; r < oa.rows(); ++r) {
    const int addr = (oa.at(r, 0) * d + oa.at(r, 1)) * d + oa.at(r, 2);
    for (int s = 0; s < t; ++s) {
      require(cells[s][addr] == -2, ErrorCode::kInvalidArgument,
              "address columns are not a bijection");
      cells[s][addr] = oa.at(r, 3 + s);
    }
  }
  std::vector<LatinDesign> out;
  for (auto& c : cells) out.emplace_back(3, d, std::move(c));
  return out;
}

OrthogonalArray molc_to_oa(std::span<const LatinDesign> cubes) {
  Verdict v = verify_classical(cubes, ClassicalProperty::kMolcWithB);
  require(v.passed, ErrorCode::kVerificationFailed, "input is not a MOLC set: " + v.summary());
  const int d = cubes.front().order();
  const int t = static_cast<int>(cubes.size());
  std::vector<int> body;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        body.insert(body.end(), {i, j, k});
        for (const auto& c : cubes) body.push_back(c.at(i, j, k));
      }
  return OrthogonalArray(d * d * d, t + 3, d, 3, std::move(body));
}

LatinDesign direct_product_ls(const LatinDesign& a, const LatinDesign& b) {
  require(a.arity() == b.arity(), ErrorCode::kInvalidArgument, "arity mismatch");
  require(a.holes().empty() && b.holes().empty(), ErrorCode::kInvalidArgument,
          "direct product needs designs without holes");
  const int da = a.order(), db = b.order(), d = da * db;
  if (a.arity() == 2) {
    std::vector<int> cells(d * d);
    for (int i = 0; i < da; ++i)
      for (int m = 0; m < db; ++m)
        for (int j = 0; j < da; ++j)
          for (int n = 0; n < db; ++n)
            cells[(i * db + m) * d + j * db + n] = a.at(i, j) * db + b.at(m, n);
    return LatinDesign(2, d, std::move(cells));
  }
  std::vector<int> cells(static_cast<std::size_t>(d) * d * d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z)
        cells[(x * d + y) * d + z] =
            a.at(x / db, y / db, z / db) * db + b.at(x % db, y % db, z % db);
  return LatinDesign(3, d, std::move(cells));
}

namespace {

bool in_exception_set(int d, std::initializer_list<int> sporadic, int prime_mult,
                      bool include_primes) {
  for (int s : sporadic)
    if (d == s) return true;
  if (include_primes && is_prime(d) && d >= 5) return true;
  if (prime_mult && d % prime_mult == 0 && is_prime(d / prime_mult) && d / prime_mult >= 5)
    return true;
  return false;
}

bool in_e2(int d) {
  return in_exception_set(d, {2, 3, 4, 6, 8, 18}, 0, true) ||
         in_exception_set(d, {}, 2, false) || in_exception_set(d, {}, 6, false);
}
bool in_e3(int d) { return in_exception_set(d, {9, 12, 24, 27, 50, 54}, 3, false); }
bool in_e4(int d) {
  return in_exception_set(d, {16, 32, 36, 48, 66, 110, 242}, 4, false);
}

bool cube_friendly(int d) {
  return std::gcd(d, 4) != 2 && std::gcd(d, 18) != 3;
}

void raise(BoundEntry& b, int value, const std::string& rule) {
  if (value > b.value) {
    b.value = value;
    b.rule = rule;
  }
}

}  // namespace

Capability capability(int d) {
  require(d >= 2, ErrorCode::kInvalidArgument, "capability needs d >= 2");
  Capability cap;
  cap.d = d;
  const auto f = factorize(d);
  int min_pr = d;
  for (auto [p, r] : f) min_pr = std::min(min_pr, static_cast<int>(ipow_int(p, r)));

  // m(d)
  if (f.size() == 1) {
    cap.m = {d - 1, true, "prime power"};
  } else {
    raise(cap.m, min_pr - 1, "MacNeish product");
    if (d != 2 && d != 6) raise(cap.m, 2, "d not in {2,6}");
    if (d != 2 && d != 3 && d != 6 && d != 10) raise(cap.m, 3, "d not in {2,3,6,10}");
    if (d != 2 && d != 3 && d != 4 && d != 6 && d != 10 && d != 22)
      raise(cap.m, 4, "d not in {2,3,4,6,10,22}");
  }

  // M(d)
  if (f.size() >= 2) {
    raise(cap.M, min_pr - 1, "product of prime-power factors");
  } else if (f.front().second >= 2) {
    auto [p, r] = f.front();
    raise(cap.M, static_cast<int>(ipow_int(p, r / 2)) - 1, "split prime-power exponent");
  }
  if (!in_e2(d)) raise(cap.M, 2, "d not in E2");
  if (!in_e2(d) && !in_e3(d)) raise(cap.M, 3, "d not in E2 or E3");
  if (!in_e2(d) && !in_e3(d) && !in_e4(d)) raise(cap.M, 4, "d not in E2, E3 or E4");

  // c(d)
  if (f.size() == 1 && f.front().first == 2 && d >= 4) raise(cap.c, d - 1, "power of two");
  if (f.size() == 1 && d >= 5) raise(cap.c, d - 2, "prime power >= 5");
  if (cube_friendly(d)) raise(cap.c, 3, "gcd(d,4) != 2 and gcd(d,18) != 3");
  if (d == 15 || d == 21) raise(cap.c, 3, "sporadic d in {15,21}");

  // C(d)
  if (f.size() >= 2) {
    raise(cap.C, min_pr - 2, "product of prime-power factors");
  } else if (f.front().second >= 2) {
    auto [p, r] = f.front();
    raise(cap.C, static_cast<int>(ipow_int(p, r / 2)) - 2, "split prime-power exponent");
  }
  for (int d1 = 2; d1 * d1 <= d; ++d1)
    if (d % d1 == 0 && cube_friendly(d1) && cube_friendly(d / d1))
      raise(cap.C, 3, "product of two cube-friendly factors");
  return cap;
}

}  // namespace qcd
