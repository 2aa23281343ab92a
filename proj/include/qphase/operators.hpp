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

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qphase/finite_field.hpp"
#include "qphase/phase_space.hpp"

namespace qphase {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kUnitaryTolerance = 1e-12;
inline constexpr double kCommutationTolerance = 1e-10;
inline constexpr double kEigenResidualTolerance = 1e-9;

/// One of "I", "X", "Y", "Z" in the basis where Z = diag(1, -1).
ComplexMatrix pauli(std::string_view name);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix projector(const ComplexVector& v);
double max_abs(const ComplexMatrix& m);
bool is_unitary(const ComplexMatrix& m, double tol = kUnitaryTolerance);

/// How field elements on each axis map onto tensor factors.
///
/// q is expanded as sum_i a_i e_i over q_basis and contributes X^(a_i) on
/// tensor slot factor_order[i]; p likewise over p_basis with Z. Slot 0 is
/// the leftmost tensor factor, i.e. the most significant bit of a
/// computational-basis index.
class QubitLabeling {
 public:
  QubitLabeling(FieldPtr field, std::vector<std::uint32_t> q_basis,
                std::vector<std::uint32_t> p_basis, std::vector<int> factor_order);

  /// Same basis {1, w, ..., w^(n-1)} on both axes, w^i on slot n-1-i.
  static QubitLabeling polynomial(FieldPtr field);
  /// Polynomial basis on q, its trace-dual basis on p.
  static QubitLabeling trace_dual(FieldPtr field);
  /// polynomial() for n <= 2, trace_dual() otherwise.
  static QubitLabeling default_for(FieldPtr field);

  /// Same q basis and slot order, p basis replaced by the trace dual.
  QubitLabeling with_trace_dual_p() const;
  bool p_is_trace_dual() const;

  const GaloisField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int qubits() const { return field_->degree(); }
  std::uint32_t dimension() const { return field_->order(); }
  const std::vector<std::uint32_t>& q_basis() const { return q_basis_; }
  const std::vector<std::uint32_t>& p_basis() const { return p_basis_; }
  const std::vector<int>& factor_order() const { return factor_order_; }

  /// Computational-basis bit mask of the X factors of H_q.
  std::uint32_t x_mask(std::uint32_t q) const { return x_masks_.at(q); }
  /// Computational-basis bit mask of the Z factors of V_p.
  std::uint32_t z_mask(std::uint32_t p) const { return z_masks_.at(p); }

 private:
  FieldPtr field_;
  std::vector<std::uint32_t> q_basis_, p_basis_;
  std::vector<int> factor_order_;
  std::vector<std::uint32_t> x_masks_, z_masks_;
};

/// U_v = H_q V_p for v = (q, p); a tensor product of X and Z factors.
struct TranslationOperator {
  Point vector;
  ComplexMatrix unitary;
};

TranslationOperator translation_unitary(const Point& v, const QubitLabeling& labeling);

/// The scalar lambda with U_v U_w = lambda U_{v+w}. Throws ConstructionError
/// if no unit-modulus scalar relates them.
Complex projective_check(const TranslationOperator& u, const TranslationOperator& w,
                         const QubitLabeling& labeling);

/// Orthonormal simultaneous eigenvectors of pairwise commuting normal
/// operators, found by refining eigenspaces one operator at a time.
///
/// Vectors are sorted by their tuple of eigenvalue phases (angle in
/// [0, 2pi), one entry per input operator) and each vector's global phase
/// makes its first non-negligible component real and positive. Throws
/// PreconditionError naming the first non-commuting pair.
std::vector<ComplexVector> joint_eigenbasis(std::span<const ComplexMatrix> ops);

}  // namespace qphase
