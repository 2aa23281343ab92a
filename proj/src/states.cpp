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

#include "qphase/states.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "qphase/errors.hpp"
#include "qphase/wigner.hpp"

namespace qphase {

namespace {

using json = nlohmann::json;

struct NamedState {
  const char* name;
  int qubits;
};

constexpr NamedState kRegistry[] = {
    {"up", 1},     {"down", 1},    {"plus", 1},    {"minus", 1},
    {"y+", 1},     {"y-", 1},      {"tilted-111", 1},
    {"upup", 2},   {"upright", 2}, {"singlet", 2}, {"bell0", 2},
};

ComplexVector named_vector(std::string_view name) {
  using namespace std::complex_literals;
  const double h = 1.0 / std::sqrt(2.0);
  ComplexVector v;
  if (name == "up") {
    v.resize(2);
    v << 1, 0;
  } else if (name == "down") {
    v.resize(2);
    v << 0, 1;
  } else if (name == "plus") {
    v.resize(2);
    v << h, h;
  } else if (name == "minus") {
    v.resize(2);
    v << h, -h;
  } else if (name == "y+") {
    v.resize(2);
    v << h, h * 1i;
  } else if (name == "y-") {
    v.resize(2);
    v << h, -h * 1i;
  } else if (name == "tilted-111") {
    v = tilted_111_state();
  } else if (name == "upup") {
    v = ComplexVector::Zero(4);
    v[0] = 1;
  } else if (name == "upright") {
    v.resize(4);
    v << h, h, 0, 0;
  } else if (name == "singlet") {
    v.resize(4);
    v << 0, h, -h, 0;
  } else if (name == "bell0") {
    v.resize(4);
    v << h, 0, 0, h;
  }
  return v;
}

Complex parse_entry(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw InvalidState("matrix/vector entry must be a number or [re, im]");
}

ComplexVector parse_vector(const json& arr) {
  if (!arr.is_array() || arr.empty()) throw InvalidState("state vector must be a nonempty array");
  ComplexVector v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) v[i] = parse_entry(arr[i]);
  return v;
}

ComplexMatrix parse_matrix(const json& arr) {
  if (!arr.is_array() || arr.empty()) throw InvalidState("density matrix must be a nonempty array");
  const std::size_t n = arr.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!arr[i].is_array() || arr[i].size() != n) throw InvalidState("density matrix must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_entry(arr[i][j]);
  }
  return m;
}

}  // namespace

std::vector<std::string> registry_names() {
  std::vector<std::string> out;
  for (const auto& s : kRegistry) out.emplace_back(s.name);
  out.emplace_back("mixed");
  return out;
}

ComplexVector tilted_111_state() {
  const ComplexMatrix axis = (pauli("X") + pauli("Y") + pauli("Z")) / std::sqrt(3.0);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(axis);
  ComplexVector v = es.eigenvectors().col(0);  // eigenvalue -1 (ascending order)
  v *= std::conj(v[0]) / std::abs(v[0]);
  return v;
}

ParsedState parse_state_spec(std::string_view spec, int qubits) {
  if (qubits < 1 || qubits > 16) throw InvalidState("qubit count out of range");
  const std::uint32_t dim = 1u << qubits;
  ParsedState out;
  out.name = std::string(spec);
  out.qubits = qubits;

  if (spec == "mixed") {
    out.rho = ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
    return out;
  }
  for (const auto& s : kRegistry) {
    if (spec == s.name) {
      if (s.qubits != qubits) {
        throw InvalidState("state '" + out.name + "' is a " + std::to_string(s.qubits) +
                           "-qubit state, but n = " + std::to_string(qubits));
      }
      out.rho = projector(named_vector(spec));
      return out;
    }
  }

  json doc;
  try {
    doc = json::parse(spec);
  } catch (const json::parse_error&) {
    throw InvalidState("unknown state '" + out.name + "'");
  }
  ComplexVector vec;
  bool is_vector = true;
  if (doc.is_array()) {
    vec = parse_vector(doc);
  } else if (doc.is_object() && doc.contains("vector")) {
    vec = parse_vector(doc["vector"]);
  } else if (doc.is_object() && doc.contains("matrix")) {
    is_vector = false;
    out.rho = parse_matrix(doc["matrix"]);
  } else {
    throw InvalidState("inline state must be an array or {\"vector\"|\"matrix\": ...}");
  }
  if (is_vector) {
    if (vec.size() != dim) {
      throw InvalidState("state vector has dimension " + std::to_string(vec.size()) +
                         ", expected " + std::to_string(dim));
    }
    const double norm = vec.norm();
    if (!(norm > 0) || !std::isfinite(norm)) throw InvalidState("state vector has zero norm");
    if (std::abs(norm - 1.0) > 1e-9) {
      out.auto_normalized = true;
      vec /= norm;
    }
    out.rho = projector(vec);
  }
  validate_density_matrix(out.rho, dim);
  return out;
}

ComplexVector random_pure_state(std::uint32_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  ComplexVector v(dim);
  for (std::uint32_t i = 0; i < dim; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  return v.normalized();
}

ComplexMatrix random_density_matrix(std::uint32_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  ComplexMatrix g(dim, dim);
  for (std::uint32_t i = 0; i < dim; ++i) {
    for (std::uint32_t j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

}  // namespace qphase
