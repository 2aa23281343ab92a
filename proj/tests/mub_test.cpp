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

#include "qphase/mub.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "qphase/errors.hpp"

namespace qphase {
namespace {

MubSet default_mubs(int n) {
  const FieldPtr f = GaloisField::create(n);
  return full_mub_set(PhaseSpace(f), QubitLabeling::default_for(f));
}

// Each basis vector is an eigenvector of the given operator.
bool diagonalizes(const std::vector<ComplexVector>& basis, const ComplexMatrix& op) {
  for (const auto& v : basis) {
    const Complex lambda = v.dot(op * v);
    if ((op * v - lambda * v).norm() > 1e-9) return false;
  }
  return true;
}

TEST(Mub, VerticalStriationIsComputationalBasis) {
  for (int n = 1; n <= 4; ++n) {
    const MubSet mubs = default_mubs(n);
    for (const auto& v : mubs.bases[0].vectors) {
      int support = 0;
      for (Eigen::Index i = 0; i < v.size(); ++i) support += std::abs(v[i]) > 1e-9;
      EXPECT_EQ(support, 1);
    }
  }
}

TEST(Mub, TwoQubitBasesAreZzXxYy) {
  const MubSet mubs = default_mubs(2);
  ASSERT_EQ(mubs.bases.size(), 5u);
  const ComplexMatrix x = pauli("X"), y = pauli("Y"), z = pauli("Z"), id = pauli("I");
  EXPECT_TRUE(diagonalizes(mubs.bases[0].vectors, kron(z, id)));
  EXPECT_TRUE(diagonalizes(mubs.bases[0].vectors, kron(id, z)));
  EXPECT_TRUE(diagonalizes(mubs.bases[1].vectors, kron(x, id)));
  EXPECT_TRUE(diagonalizes(mubs.bases[1].vectors, kron(id, x)));
  EXPECT_TRUE(diagonalizes(mubs.bases[2].vectors, kron(y, id)));
  EXPECT_TRUE(diagonalizes(mubs.bases[2].vectors, kron(id, y)));
  // Belle and beau are entangled: no product Pauli on one qubit is diagonal.
  for (int k = 3; k < 5; ++k) {
    EXPECT_FALSE(diagonalizes(mubs.bases[k].vectors, kron(z, id)));
    EXPECT_FALSE(diagonalizes(mubs.bases[k].vectors, kron(x, id)));
    EXPECT_FALSE(diagonalizes(mubs.bases[k].vectors, kron(y, id)));
  }
}

TEST(Mub, BelleBasisMatchesReference) {
  const MubSet mubs = default_mubs(2);
  const Complex i(0, 1);
  std::vector<ComplexVector> ref(4, ComplexVector(4));
  ref[0] << 1, 1, i, -i;
  ref[1] << 1, 1, -i, i;
  ref[2] << 1, -1, i, i;
  ref[3] << 1, -1, -i, -i;
  for (auto& v : ref) v *= 0.5;
  const Eigen::MatrixXd ov = overlap_matrix(ref, mubs.bases[3].vectors);
  for (int r = 0; r < 4; ++r) {
    int matches = 0;
    for (int c = 0; c < 4; ++c) matches += std::abs(ov(r, c) - 1.0) < 1e-9;
    EXPECT_EQ(matches, 1);
  }
}

TEST(Mub, StabilizersFixTheirBasis) {
  const FieldPtr f = GaloisField::create(3);
  const PhaseSpace space(f);
  const QubitLabeling lab = QubitLabeling::default_for(f);
  for (const Striation& s : space.striations()) {
    const StriationBasis b = basis_for_striation(s, lab);
    EXPECT_EQ(b.stabilizers.size(), space.size() - 1);
    for (const auto& st : b.stabilizers) EXPECT_TRUE(diagonalizes(b.vectors, st.unitary));
  }
}

TEST(Mub, ConjugacyForAllSmallSizes) {
  for (int n = 1; n <= 4; ++n) {
    const MubSet mubs = default_mubs(n);
    const ConjugacyReport rep = check_conjugacy(mubs.bases);
    EXPECT_TRUE(rep.ok()) << n;
    EXPECT_NEAR(rep.expected, 1.0 / std::sqrt(double(1u << n)), 1e-15);
    EXPECT_EQ(rep.pairs.size(), std::size_t((1u << n) + 1) * (1u << n) / 2);
    EXPECT_FALSE(mubs.used_fallback);
  }
}

TEST(Mub, FallbackToTraceDualMomentumBasis) {
  const FieldPtr f = GaloisField::create(3);
  const PhaseSpace space(f);
  const MubSet mubs = full_mub_set(space, QubitLabeling::polynomial(f));
  EXPECT_TRUE(mubs.used_fallback);
  EXPECT_TRUE(mubs.labeling.p_is_trace_dual());
  EXPECT_TRUE(check_conjugacy(mubs.bases).ok());
}

TEST(Mub, LabelingErrorReportsStriation) {
  const FieldPtr f = GaloisField::create(3);
  const PhaseSpace space(f);
  const QubitLabeling lab = QubitLabeling::polynomial(f);
  bool any = false;
  for (const Striation& s : space.striations()) {
    try {
      basis_for_striation(s, lab);
    } catch (const LabelingError& e) {
      EXPECT_EQ(e.striation(), s.direction);
      any = true;
    }
  }
  EXPECT_TRUE(any);
}

TEST(Mub, ContextMismatch) {
  const PhaseSpace space(GaloisField::create(2));
  EXPECT_THROW(full_mub_set(space, QubitLabeling::default_for(GaloisField::create(2))),
               ContextMismatch);
}

TEST(Mub, BellBasisIsNotConjugateToComputational) {
  const auto bell = bell_reference_basis();
  const MubSet mubs = default_mubs(2);
  const Eigen::MatrixXd ov = overlap_matrix(bell, mubs.bases[0].vectors);
  for (Eigen::Index r = 0; r < 4; ++r) {
    for (Eigen::Index c = 0; c < 4; ++c) {
      const double x = ov(r, c);
      EXPECT_TRUE(std::abs(x) < 1e-12 || std::abs(x - 1 / std::sqrt(2.0)) < 1e-12) << x;
    }
  }
}

TEST(Mub, ReportFlagsNonConjugatePair) {
  std::vector<StriationBasis> bases(2);
  bases[0].vectors = {ComplexVector::Unit(2, 0), ComplexVector::Unit(2, 1)};
  bases[1].striation = 1;
  bases[1].vectors = bases[0].vectors;
  const ConjugacyReport rep = check_conjugacy(bases);
  EXPECT_TRUE(rep.all_orthonormal());
  EXPECT_FALSE(rep.all_conjugate());
  EXPECT_FALSE(rep.ok());
}

}  // namespace
}  // namespace qphase
