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

#include "qphase/operators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "qphase/errors.hpp"

namespace qphase {

namespace {

constexpr double kClusterTolerance = 1e-6;
constexpr double kNullSpaceTolerance = 1e-14;
constexpr double kPhaseTieTolerance = 1e-7;

double phase_angle(Complex z) {
  double a = std::arg(z);
  if (a < 0) a += 2 * std::numbers::pi;
  if (a > 2 * std::numbers::pi - 1e-9) a = 0;
  return a;
}

void normalize_global_phase(ComplexVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-6) {
      v *= std::conj(v[i]) / std::abs(v[i]);
      return;
    }
  }
}

}  // namespace

ComplexMatrix pauli(std::string_view name) {
  using namespace std::complex_literals;
  ComplexMatrix m(2, 2);
  if (name == "I") {
    m << 1, 0, 0, 1;
  } else if (name == "X") {
    m << 0, 1, 1, 0;
  } else if (name == "Y") {
    m << 0, -1i, 1i, 0;
  } else if (name == "Z") {
    m << 1, 0, 0, -1;
  } else {
    throw DomainError("unknown Pauli matrix '" + std::string(name) + "'");
  }
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols())) < tol;
}

QubitLabeling::QubitLabeling(FieldPtr field, std::vector<std::uint32_t> q_basis,
                             std::vector<std::uint32_t> p_basis,
                             std::vector<int> factor_order)
    : field_(std::move(field)),
      q_basis_(std::move(q_basis)),
      p_basis_(std::move(p_basis)),
      factor_order_(std::move(factor_order)) {
  const int n = field_->degree();
  if (static_cast<int>(factor_order_.size()) != n) {
    throw PreconditionError("factor order must list one slot per qubit");
  }
  std::vector<int> sorted = factor_order_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[i] != i) throw PreconditionError("factor order is not a permutation");
  }
  auto masks_for = [&](const std::vector<std::uint32_t>& basis) {
    std::vector<std::uint32_t> masks(field_->order());
    for (std::uint32_t e = 0; e < field_->order(); ++e) {
      const std::uint32_t coords = field_->coordinates(e, basis);
      std::uint32_t mask = 0;
      for (int i = 0; i < n; ++i) {
        if ((coords >> i) & 1u) mask |= 1u << (n - 1 - factor_order_[i]);
      }
      masks[e] = mask;
    }
    return masks;
  };
  try {
    x_masks_ = masks_for(q_basis_);
    z_masks_ = masks_for(p_basis_);
  } catch (const DomainError& e) {
    throw PreconditionError(std::string("labeling basis does not span the field: ") +
                            e.what());
  }
}

QubitLabeling QubitLabeling::polynomial(FieldPtr field) {
  const int n = field->degree();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = n - 1 - i;
  auto basis = field->polynomial_basis();
  return QubitLabeling(std::move(field), basis, basis, std::move(order));
}

QubitLabeling QubitLabeling::trace_dual(FieldPtr field) {
  return polynomial(std::move(field)).with_trace_dual_p();
}

QubitLabeling QubitLabeling::default_for(FieldPtr field) {
  return field->degree() <= 2 ? polynomial(std::move(field))
                              : trace_dual(std::move(field));
}

QubitLabeling QubitLabeling::with_trace_dual_p() const {
  return QubitLabeling(field_, q_basis_, field_->trace_dual_basis(q_basis_),
                       factor_order_);
}

bool QubitLabeling::p_is_trace_dual() const {
  return p_basis_ == field_->trace_dual_basis(q_basis_);
}

TranslationOperator translation_unitary(const Point& v, const QubitLabeling& labeling) {
  const GaloisField& field = labeling.field();
  field.check(v.q);
  field.check(v.p);
  const std::uint32_t dim = labeling.dimension();
  const std::uint32_t x = labeling.x_mask(v.q.bits());
  const std::uint32_t z = labeling.z_mask(v.p.bits());
  // X^x Z^z |s> = (-1)^{z.s} |s ^ x>
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  for (std::uint32_t s = 0; s < dim; ++s) {
    u(s ^ x, s) = (std::popcount(z & s) & 1) ? -1.0 : 1.0;
  }
  return TranslationOperator{v, std::move(u)};
}

Complex projective_check(const TranslationOperator& u, const TranslationOperator& w,
                         const QubitLabeling& labeling) {
  if (u.unitary.rows() != w.unitary.rows()) {
    throw PreconditionError("projective_check: dimension mismatch");
  }
  const ComplexMatrix target =
      translation_unitary(translate(u.vector, w.vector), labeling).unitary;
  const ComplexMatrix product = u.unitary * w.unitary;
  Eigen::Index r = 0, c = 0;
  target.cwiseAbs().maxCoeff(&r, &c);
  const Complex lambda = product(r, c) / target(r, c);
  if (std::abs(std::abs(lambda) - 1.0) > kUnitaryTolerance ||
      max_abs(product - lambda * target) > kCommutationTolerance) {
    throw ConstructionError("translation operators do not compose projectively");
  }
  return lambda;
}

std::vector<ComplexVector> joint_eigenbasis(std::span<const ComplexMatrix> ops) {
  if (ops.empty()) throw PreconditionError("joint_eigenbasis: no operators");
  const Eigen::Index dim = ops.front().rows();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].rows() != dim || ops[i].cols() != dim) {
      throw PreconditionError("joint_eigenbasis: operators must share one square shape");
    }
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (max_abs(ops[i] * ops[j] - ops[j] * ops[i]) > kCommutationTolerance) {
        throw PreconditionError("joint_eigenbasis: operators " + std::to_string(i) +
                                " and " + std::to_string(j) + " do not commute");
      }
    }
  }

  struct Block {
    ComplexMatrix basis;
    std::vector<double> phases;
  };
  std::vector<Block> blocks{{ComplexMatrix::Identity(dim, dim), {}}};

  for (const ComplexMatrix& op : ops) {
    std::vector<Block> next;
    for (Block& blk : blocks) {
      const ComplexMatrix m = blk.basis.adjoint() * op * blk.basis;
      const Eigen::Index k = m.rows();
      if (k == 1) {
        blk.phases.push_back(phase_angle(m(0, 0)));
        next.push_back(std::move(blk));
        continue;
      }
      Eigen::ComplexEigenSolver<ComplexMatrix> ces(m, false);
      std::vector<std::vector<Complex>> clusters;
      for (Eigen::Index i = 0; i < k; ++i) {
        const Complex ev = ces.eigenvalues()[i];
        auto it = std::find_if(clusters.begin(), clusters.end(), [&](const auto& cl) {
          return std::abs(cl.front() - ev) < kClusterTolerance;
        });
        if (it == clusters.end()) {
          clusters.push_back({ev});
        } else {
          it->push_back(ev);
        }
      }
      Eigen::Index found = 0;
      for (const auto& cl : clusters) {
        Complex rep = 0;
        for (Complex ev : cl) rep += ev;
        rep /= static_cast<double>(cl.size());
        const ComplexMatrix shifted = m - rep * ComplexMatrix::Identity(k, k);
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(shifted.adjoint() * shifted);
        Eigen::Index null_dim = 0;
        while (null_dim < k && es.eigenvalues()[null_dim] < kNullSpaceTolerance) ++null_dim;
        if (null_dim == 0) continue;
        Block child{blk.basis * es.eigenvectors().leftCols(null_dim), blk.phases};
        child.phases.push_back(phase_angle(rep));
        next.push_back(std::move(child));
        found += null_dim;
      }
      if (found != k) {
        throw ConstructionError("joint_eigenbasis: eigenspace decomposition is incomplete");
      }
    }
    blocks = std::move(next);
  }

  std::stable_sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    for (std::size_t i = 0; i < a.phases.size(); ++i) {
      if (std::abs(a.phases[i] - b.phases[i]) > kPhaseTieTolerance) {
        return a.phases[i] < b.phases[i];
      }
    }
    return false;
  });

  std::vector<ComplexVector> out;
  out.reserve(dim);
  for (const Block& blk : blocks) {
    for (Eigen::Index c = 0; c < blk.basis.cols(); ++c) {
      ComplexVector v = blk.basis.col(c);
      v.normalize();
      normalize_global_phase(v);
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace qphase
