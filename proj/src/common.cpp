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

#include <atomic>
#include <sstream>
#include <thread>

#include "qcdesign/parallel.hpp"
#include "qcdesign/verdict.hpp"

namespace qcd {

namespace {
std::atomic<unsigned> g_max_threads{0};
}  // namespace

void set_max_threads(unsigned n) { g_max_threads = n; }

unsigned max_threads() {
  const unsigned n = g_max_threads.load();
  if (n) return n;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

std::string Verdict::summary() const {
  std::ostringstream os;
  if (passed) {
    os << "PASS (" << checks << " checks)";
  } else {
    os.precision(17);
    os << "FAIL: " << condition;
    if (!where.empty()) os << " at " << where;
    os << ", deviation " << deviation << " (" << checks << " checks)";
  }
  return os.str();
}

}  // namespace qcd
