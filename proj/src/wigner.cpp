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

#include "qphase/wigner.hpp"

#include <bit>
#include <cmath>
#include <optional>
#include <string>

#include <Eigen/Eigenvalues>

#include "qphase/errors.hpp"

namespace qphase {

namespace {

constexpr double kNetTolerance = 1e-9;

std::uint32_t matching_vector(const StriationBasis& basis, const ComplexVector& target) {
  for (std::uint32_t m = 0; m < basis.vectors.size(); ++m) {
    if (std::abs(basis.vectors[m].dot(target)) > 1.0 - kNetTolerance) return m;
  }
  throw NetError("striation " + std::to_string(basis.striation) +
                 ": vector is not a member of the striation basis");
}

bool is_default_polynomial(const QubitLabeling& lab) {
  const QubitLabeling poly = QubitLabeling::polynomial(lab.field_ptr());
  return lab.q_basis() == poly.q_basis() && lab.p_basis() == poly.p_basis() &&
         lab.factor_order() == poly.factor_order();
}

// Ray vectors of the standard one- and two-qubit nets, in striation order.
std::vector<ComplexVector> textbook_rays(int qubits) {
  using namespace std::complex_literals;
  std::vector<ComplexVector> rays;
  if (qubits == 1) {
    const double h = 1.0 / std::sqrt(2.0);
    rays.assign(3, ComplexVector(2));
    rays[0] << 1, 0;        // |up>
    rays[1] << h, h;        // |right>
    rays[2] << h, h * 1i;   // +1 eigenstate of sigma_y
  } else {
    rays.assign(5, ComplexVector(4));
    rays[0] << 1, 0, 0, 0;
    rays[1] << 0.5, 0.5, 0.5, 0.5;
    rays[2] << 0.5, -0.5i, 0.5i, 0.5;
    rays[3] << 0.5, 0.5, 0.5i, -0.5i;
    rays[4] << 0.5, -0.5i, 0.5, 0.5i;
  }
  return rays;
}

}  // namespace

QuantumNet::QuantumNet(PhaseSpace space, MubSet mubs, std::vector<std::uint32_t> ray_choice)
    : space_(std::move(space)), mubs_(std::move(mubs)), ray_choice_(std::move(ray_choice)) {
  const std::uint32_t n = space_.size();
  const auto& striations = space_.striations();
  if (&mubs_.labeling.field() != &space_.field()) {
    throw ContextMismatch("basis set belongs to another field");
  }
  if (mubs_.bases.size() != striations.size() || ray_choice_.size() != striations.size()) {
    throw NetError("need one basis and one ray choice per striation");
  }

  assignment_.resize(striations.size());
  projectors_.resize(striations.size());
  for (std::size_t k = 0; k < striations.size(); ++k) {
    const StriationBasis& basis = mubs_.bases[k];
    if (ray_choice_[k] >= basis.vectors.size()) {
      throw NetError("ray choice out of range for striation " + std::to_string(k));
    }
    const ComplexVector& ray = basis.vectors[ray_choice_[k]];
    std::vector<bool> used(n, false);
    for (std::uint32_t j = 0; j < n; ++j) {
      const Line& line = striations[k].lines[j];
      std::optional<std::uint32_t> chosen;
      // Every point of the line is a translation carrying the ray onto it.
      for (const Point& v : line.points()) {
        const ComplexVector moved = translation_unitary(v, mubs_.labeling).unitary * ray;
        const std::uint32_t m = matching_vector(basis, moved);
        if (chosen && *chosen != m) {
          throw NetError("striation " + std::to_string(k) + ", line " +
                         std::to_string(j) + ": translation paths disagree");
        }
        chosen = m;
      }
      if (used[*chosen]) {
        throw NetError("striation " + std::to_string(k) +
                       ": two lines were assigned the same vector");
      }
      used[*chosen] = true;
      assignment_[k].push_back(*chosen);
      projectors_[k].push_back(qphase::projector(basis.vectors[*chosen]));
    }
  }

  const ComplexMatrix identity = ComplexMatrix::Identity(n, n);
  phase_points_.reserve(space_.point_count());
  for (std::uint32_t q = 0; q < n; ++q) {
    for (std::uint32_t p = 0; p < n; ++p) {
      ComplexMatrix a = -identity;
      for (std::size_t k = 0; k < striations.size(); ++k) {
        a += projectors_[k][space_.line_through(static_cast<int>(k), q, p)];
      }
      phase_points_.push_back(std::move(a));
    }
  }
}

std::uint32_t QuantumNet::vector_index(int striation, std::uint32_t line) const {
  return assignment_.at(striation).at(line);
}

std::uint32_t QuantumNet::vector_index(const Line& line) const {
  const auto [k, j] = space_.locate(line);
  return vector_index(k, j);
}

const ComplexVector& QuantumNet::line_vector(int striation, std::uint32_t line) const {
  return mubs_.bases.at(striation).vectors.at(vector_index(striation, line));
}

const ComplexMatrix& QuantumNet::projector(int striation, std::uint32_t line) const {
  return projectors_.at(striation).at(line);
}

const ComplexMatrix& QuantumNet::projector(const Line& line) const {
  const auto [k, j] = space_.locate(line);
  return projector(k, j);
}

std::vector<std::uint32_t> sign_rule_ray_choice(const MubSet& mubs) {
  const QubitLabeling& lab = mubs.labeling;
  std::vector<std::uint32_t> choice;
  for (const StriationBasis& basis : mubs.bases) {
    std::vector<ComplexMatrix> involutions;
    for (const TranslationOperator& op : basis.stabilizers) {
      const std::uint32_t x = lab.x_mask(op.vector.q.bits());
      const std::uint32_t z = lab.z_mask(op.vector.p.bits());
      // (X^x Z^z)^dagger = (-1)^{x.z} X^x Z^z, so i^{x.z} X^x Z^z is Hermitian.
      const int m = std::popcount(x & z) % 4;
      static const Complex kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      involutions.push_back(kPowersOfI[m] * op.unitary);
    }
    std::uint32_t best = 0;
    std::vector<int> best_signs;
    for (std::uint32_t j = 0; j < basis.vectors.size(); ++j) {
      const ComplexVector& v = basis.vectors[j];
      std::vector<int> signs;
      for (const ComplexMatrix& h : involutions) {
        signs.push_back(v.dot(h * v).real() > 0 ? 1 : -1);
      }
      // Lexicographically first with + before -.
      if (best_signs.empty() || signs > best_signs) {
        best = j;
        best_signs = std::move(signs);
      }
    }
    choice.push_back(best);
  }
  return choice;
}

QuantumNet default_net(const PhaseSpace& space, const MubSet& mubs) {
  const int qubits = space.qubits();
  std::vector<std::uint32_t> choice;
  if (qubits <= 2 && is_default_polynomial(mubs.labeling)) {
    const auto rays = textbook_rays(qubits);
    for (std::size_t k = 0; k < mubs.bases.size(); ++k) {
      choice.push_back(matching_vector(mubs.bases[k], rays[k]));
    }
  } else {
    choice = sign_rule_ray_choice(mubs);
  }
  return QuantumNet(space, mubs, std::move(choice));
}

PhasePointOperator phase_point_operator(const Point& alpha, const QuantumNet& net) {
  return PhasePointOperator{alpha, net.phase_point(net.space().index(alpha))};
}

void validate_density_matrix(const ComplexMatrix& rho, std::uint32_t dimension) {
  constexpr double tol = 1e-9;
  if (rho.rows() != dimension || rho.cols() != dimension) {
    throw InvalidState("density matrix must be " + std::to_string(dimension) + "x" +
                       std::to_string(dimension) + ", got " + std::to_string(rho.rows()) +
                       "x" + std::to_string(rho.cols()));
  }
  if (!rho.allFinite()) throw InvalidState("density matrix has non-finite entries");
  if (max_abs(rho - rho.adjoint()) > tol) throw InvalidState("density matrix is not Hermitian");
  if (std::abs(rho.trace() - 1.0) > tol) throw InvalidState("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) {
    throw InvalidState("density matrix is not positive semidefinite");
  }
}

WignerGrid wigner_transform(const ComplexMatrix& op, const QuantumNet& net) {
  const std::uint32_t n = net.dimension();
  if (op.rows() != n || op.cols() != n) {
    throw InvalidState("operator dimension does not match the phase space");
  }
  if (max_abs(op - op.adjoint()) > 1e-9) throw InvalidState("operator is not Hermitian");
  WignerGrid grid{net.space().field_ptr(), Eigen::MatrixXd(n, n)};
  const ComplexMatrix opt = op.transpose();
  for (std::uint32_t q = 0; q < n; ++q) {
    for (std::uint32_t p = 0; p < n; ++p) {
      // tr(op A) = sum_ij op_ij A_ji
      const Complex w = opt.cwiseProduct(net.phase_point(q * n + p)).sum() / double(n);
      if (std::abs(w.imag()) > kImaginaryResidueTolerance) {
        throw NetError("Wigner value has an imaginary part; the net is broken");
      }
      grid.values(q, p) = w.real();
    }
  }
  return grid;
}

WignerGrid wigner_from_state(const ComplexMatrix& rho, const QuantumNet& net) {
  validate_density_matrix(rho, net.dimension());
  return wigner_transform(rho, net);
}

ComplexMatrix state_from_wigner(const WignerGrid& grid, const QuantumNet& net) {
  const std::uint32_t n = net.dimension();
  if (grid.values.rows() != n || grid.values.cols() != n) {
    throw PreconditionError("grid dimension does not match the phase space");
  }
  if (std::abs(grid.sum() - 1.0) > 1e-9) {
    throw PreconditionError("Wigner grid must sum to 1");
  }
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  for (std::uint32_t q = 0; q < n; ++q) {
    for (std::uint32_t p = 0; p < n; ++p) {
      rho += grid.values(q, p) * net.phase_point(q * n + p);
    }
  }
  return rho;
}

double line_sum(const WignerGrid& grid, const Line& line) {
  grid.field->check(line.a());
  double s = 0;
  for (const Point& pt : line.points()) s += grid.at(pt);
  return s;
}

WignerGrid translate_grid(const WignerGrid& grid, const Point& v) {
  grid.field->check(v.q);
  grid.field->check(v.p);
  const std::uint32_t n = grid.field->order();
  WignerGrid out{grid.field, Eigen::MatrixXd(n, n)};
  for (std::uint32_t q = 0; q < n; ++q) {
    for (std::uint32_t p = 0; p < n; ++p) {
      // alpha - v = alpha + v in characteristic 2
      out.values(q, p) = grid.values(q ^ v.q.bits(), p ^ v.p.bits());
    }
  }
  return out;
}

}  // namespace qphase
