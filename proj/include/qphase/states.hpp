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

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qphase/operators.hpp"

namespace qphase {

/// A state resolved from a registry name or inline JSON.
struct ParsedState {
  std::string name;
  int qubits = 0;
  ComplexMatrix rho;
  /// True when an inline vector had to be rescaled to unit norm.
  bool auto_normalized = false;
};

/// Named states: up, down, plus, minus, y+, y-, tilted-111 (one qubit);
/// upup, upright, singlet, bell0 (two qubits); mixed (any n).
std::vector<std::string> registry_names();

/// -1 eigenstate of (X + Y + Z) / sqrt3.
ComplexVector tilted_111_state();

/// Resolves a registry name, a JSON vector `[a, [re, im], ...]`, or a JSON
/// object {"vector": [...]} / {"matrix": [[...], ...]}. Throws InvalidState
/// on unknown names, malformed JSON, or a dimension other than 2^qubits.
ParsedState parse_state_spec(std::string_view spec, int qubits);

ComplexVector random_pure_state(std::uint32_t dim, std::mt19937_64& rng);
/// Ginibre-distributed mixed state G G^dagger / tr(G G^dagger).
ComplexMatrix random_density_matrix(std::uint32_t dim, std::mt19937_64& rng);

}  // namespace qphase
