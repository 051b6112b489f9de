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

#include <cstddef>
#include <string>

namespace qcd {

// Result of a verifier. When passed is false, condition/where/deviation
// describe the first violated check in scan order.
struct Verdict {
  bool passed = true;
  std::string condition;
  std::string where;
  double deviation = 0.0;
  std::size_t checks = 0;

  explicit operator bool() const { return passed; }

  // Counts one check; records it as the failure if it is the first to exceed
  // tol. Returns true when the check passed.
  bool check(double dev, double tol, const std::string& cond,
             const std::string& loc) {
    ++checks;
    if (dev <= tol) return true;
    if (passed) {
      passed = false;
      condition = cond;
      where = loc;
      deviation = dev;
    }
    return false;
  }

  void fail(const std::string& cond, const std::string& loc, double dev = 0.0) {
    ++checks;
    if (passed) {
      passed = false;
      condition = cond;
      where = loc;
      deviation = dev;
    }
  }

  // Folds another verdict in; the earlier failure wins.
  void merge(const Verdict& other) {
    checks += other.checks;
    if (passed && !other.passed) {
      passed = false;
      condition = other.condition;
      where = other.where;
      deviation = other.deviation;
    }
  }

  std::string summary() const;
};

}  // namespace qcd
