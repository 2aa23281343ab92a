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
#include <vector>

#include <Eigen/Dense>

#include "qphase/mub.hpp"
#include "qphase/operators.hpp"
#include "qphase/phase_space.hpp"

namespace qphase {

inline constexpr double kImaginaryResidueTolerance = 1e-9;

/// Real quasi-probabilities indexed values(q, p) by element index.
struct WignerGrid {
  FieldPtr field;
  Eigen::MatrixXd values;

  double at(const Point& pt) const { return values(pt.q.bits(), pt.p.bits()); }
  double sum() const { return values.sum(); }
};

struct PhasePointOperator {
  Point point;
  ComplexMatrix matrix;
};

/// An assignment of one basis vector to every line, fixed by a choice of
/// vector for each ray and extended to the parallel lines by translation
/// covariance. Phase-point operators are built once at construction.
class QuantumNet {
 public:
  /// ray_choice[k] indexes mubs.bases[k].vectors. Throws NetError when two
  /// translations onto the same line disagree or a striation's lines do not
  /// receive distinct vectors.
  QuantumNet(PhaseSpace space, MubSet mubs, std::vector<std::uint32_t> ray_choice);

  const PhaseSpace& space() const { return space_; }
  const MubSet& mubs() const { return mubs_; }
  const QubitLabeling& labeling() const { return mubs_.labeling; }
  std::uint32_t dimension() const { return space_.size(); }
  const std::vector<std::uint32_t>& ray_choice() const { return ray_choice_; }

  /// Index into the striation's basis of the vector assigned to a line.
  std::uint32_t vector_index(int striation, std::uint32_t line) const;
  std::uint32_t vector_index(const Line& line) const;
  const ComplexVector& line_vector(int striation, std::uint32_t line) const;
  const ComplexMatrix& projector(int striation, std::uint32_t line) const;
  const ComplexMatrix& projector(const Line& line) const;

  /// A_alpha by row-major point index q * N + p.
  const ComplexMatrix& phase_point(std::uint32_t point_index) const {
    return phase_points_.at(point_index);
  }
  const std::vector<ComplexMatrix>& phase_points() const { return phase_points_; }

 private:
  PhaseSpace space_;
  MubSet mubs_;
  std::vector<std::uint32_t> ray_choice_;
  std::vector<std::vector<std::uint32_t>> assignment_;  // [striation][line]
  std::vector<std::vector<ComplexMatrix>> projectors_;  // [striation][line]
  std::vector<ComplexMatrix> phase_points_;
};

/// Ray vectors selected by the lexicographic sign rule: each stabilizer is
/// rescaled by a power of i to a Hermitian involution, and the chosen
/// vector is the one whose +-1 eigenvalue pattern over the stabilizers (in
/// ray order) is lexicographically first with + before -.
std::vector<std::uint32_t> sign_rule_ray_choice(const MubSet& mubs);

/// The conventional net. With the default labeling at n = 1 and n = 2 the
/// rays carry the textbook one- and two-qubit assignments (|0...0> on the
/// q = 0 column, |+...+> on the p = 0 row, and the fixed diagonal-striation
/// vectors); every other case uses sign_rule_ray_choice.
QuantumNet default_net(const PhaseSpace& space, const MubSet& mubs);

/// A_alpha = sum over the N+1 lines through alpha of their projectors, minus I.
PhasePointOperator phase_point_operator(const Point& alpha, const QuantumNet& net);

/// Throws InvalidState unless rho is an N x N Hermitian, unit-trace,
/// positive semidefinite matrix (tolerance 1e-9).
void validate_density_matrix(const ComplexMatrix& rho, std::uint32_t dimension);

/// W_alpha = tr(rho A_alpha) / N.
WignerGrid wigner_from_state(const ComplexMatrix& rho, const QuantumNet& net);
/// Same transform for any Hermitian operator (no trace or positivity check).
WignerGrid wigner_transform(const ComplexMatrix& op, const QuantumNet& net);
/// rho = sum_alpha W_alpha A_alpha.
ComplexMatrix state_from_wigner(const WignerGrid& grid, const QuantumNet& net);

double line_sum(const WignerGrid& grid, const Line& line);
/// W'(alpha) = W(alpha - v).
WignerGrid translate_grid(const WignerGrid& grid, const Point& v);

}  // namespace qphase
