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

#include <gtest/gtest.h>

#include "qphase/errors.hpp"
#include "qphase/operators.hpp"

namespace qphase {
namespace {

TEST(States, RegistryEntriesAreValidPureStates) {
  for (const std::string& name : registry_names()) {
    if (name == "mixed") continue;
    const int n = (name == "upup" || name == "upright" || name == "singlet" || name == "bell0") ? 2 : 1;
    const ParsedState s = parse_state_spec(name, n);
    EXPECT_EQ(s.qubits, n);
    EXPECT_FALSE(s.auto_normalized);
    EXPECT_NEAR(s.rho.trace().real(), 1.0, 1e-12) << name;
    EXPECT_NEAR((s.rho * s.rho).trace().real(), 1.0, 1e-12) << name;
  }
}

TEST(States, PauliEigenstates) {
  auto expect_eig = [](const char* name, const char* op, double ev) {
    const ComplexMatrix rho = parse_state_spec(name, 1).rho;
    EXPECT_NEAR((rho * pauli(op)).trace().real(), ev, 1e-12) << name;
  };
  expect_eig("up", "Z", 1);
  expect_eig("down", "Z", -1);
  expect_eig("plus", "X", 1);
  expect_eig("minus", "X", -1);
  expect_eig("y+", "Y", 1);
  expect_eig("y-", "Y", -1);
}

TEST(States, TiltedStateIsLowestEigenvector) {
  const ComplexVector v = tilted_111_state();
  const ComplexMatrix axis = (pauli("X") + pauli("Y") + pauli("Z")) / std::sqrt(3.0);
  EXPECT_LT((axis * v + v).norm(), 1e-12);
  EXPECT_NEAR(v.norm(), 1.0, 1e-12);
}

TEST(States, SingletIsAntisymmetric) {
  const ComplexMatrix rho = parse_state_spec("singlet", 2).rho;
  EXPECT_NEAR(rho(1, 1).real(), 0.5, 1e-12);
  EXPECT_NEAR(rho(1, 2).real(), -0.5, 1e-12);
  EXPECT_NEAR(std::abs(rho(0, 0)), 0.0, 1e-12);
}

TEST(States, InlineVectorsAndMatrices) {
  const ParsedState v = parse_state_spec("[1, [0, 1]]", 1);
  EXPECT_TRUE(v.auto_normalized);
  EXPECT_NEAR((v.rho * pauli("Y")).trace().real(), 1.0, 1e-12);
  const ParsedState o = parse_state_spec(R"({"vector": [0, 1]})", 1);
  EXPECT_FALSE(o.auto_normalized);
  EXPECT_NEAR(o.rho(1, 1).real(), 1.0, 1e-12);
  const ParsedState m = parse_state_spec(R"({"matrix": [[0.5, 0], [0, 0.5]]})", 1);
  EXPECT_NEAR(m.rho(0, 0).real(), 0.5, 1e-12);
  const ParsedState mixed = parse_state_spec("mixed", 3);
  EXPECT_LT(max_abs(mixed.rho - ComplexMatrix::Identity(8, 8) / 8.0), 1e-15);
}

TEST(States, Errors) {
  EXPECT_THROW(parse_state_spec("nonsense", 1), InvalidState);
  EXPECT_THROW(parse_state_spec("singlet", 1), InvalidState);
  EXPECT_THROW(parse_state_spec("[1, 0, 0]", 1), InvalidState);
  EXPECT_THROW(parse_state_spec("[0, 0]", 1), InvalidState);
  EXPECT_THROW(parse_state_spec("[1, ", 1), InvalidState);
  EXPECT_THROW(parse_state_spec(R"({"matrix": [[1, 0]]})", 1), InvalidState);
  EXPECT_THROW(parse_state_spec(R"({"matrix": [[2, 0], [0, -1]]})", 1), InvalidState);
}

TEST(States, RandomStatesAreValid) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const ComplexVector psi = random_pure_state(4, rng);
    EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
    const ComplexMatrix rho = random_density_matrix(4, rng);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    EXPECT_LT(max_abs(rho - rho.adjoint()), 1e-14);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-12);
  }
}

}  // namespace
}  // namespace qphase
