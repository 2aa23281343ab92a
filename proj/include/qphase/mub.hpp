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

#include <span>
#include <vector>

#include "qphase/operators.hpp"
#include "qphase/phase_space.hpp"

namespace qphase {

inline constexpr double kConjugacyTolerance = 1e-9;

/// The orthonormal basis picked out by a striation: the joint eigenbasis of
/// the translation unitaries along its ray.
struct StriationBasis {
  int striation = 0;
  std::vector<ComplexVector> vectors;
  std::vector<TranslationOperator> stabilizers;
};

/// Throws LabelingError when the stabilizers fail to commute or fail to
/// single out a unique basis.
StriationBasis basis_for_striation(const Striation& striation,
                                   const QubitLabeling& labeling);

struct MubSet {
  QubitLabeling labeling;  // the labeling actually used
  std::vector<StriationBasis> bases;
  bool used_fallback = false;
};

/// One basis per striation. If `labeling` fails and its p basis is not the
/// trace dual of its q basis, retries once with the trace-dual p basis.
MubSet full_mub_set(const PhaseSpace& space, const QubitLabeling& labeling);

struct BasisPairOverlap {
  int first = 0;
  int second = 0;
  double max_overlap = 0;
  double min_overlap = 0;
  bool conjugate = false;
};

struct ConjugacyReport {
  double expected = 0;  // 1 / sqrt(N)
  double tolerance = kConjugacyTolerance;
  std::vector<BasisPairOverlap> pairs;
  /// Per basis, max |<v_i|v_j> - delta_ij|.
  std::vector<double> orthonormality_residuals;

  bool all_orthonormal() const;
  bool all_conjugate() const;
  bool ok() const { return all_orthonormal() && all_conjugate(); }
};

ConjugacyReport check_conjugacy(std::span<const StriationBasis> bases,
                                double tolerance = kConjugacyTolerance);

/// |<v_i|w_j>| for every pair of vectors.
Eigen::MatrixXd overlap_matrix(std::span<const ComplexVector> first,
                               std::span<const ComplexVector> second);

/// (|00> + |11>)/sqrt2, (|00> - |11>)/sqrt2, (|01> + |10>)/sqrt2,
/// (|01> - |10>)/sqrt2.
std::vector<ComplexVector> bell_reference_basis();

}  // namespace qphase
