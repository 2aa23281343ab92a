// Copyright 2026 The qphase Authors
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
#include <string>
#include <vector>

namespace qphase {

struct CheckResult {
  std::string name;
  int qubits = 0;
  bool passed = false;
  std::string detail;
};

/// Runs the structural invariant checks of every module for one qubit
/// count: field axioms, affine-plane geometry, translation operators,
/// basis conjugacy, phase-point operators, Wigner line sums and covariance,
/// and exact tomographic reconstruction. Random states come from `seed`.
std::vector<CheckResult> verify_invariants(int qubits, std::uint64_t seed = 1);

}  // namespace qphase
