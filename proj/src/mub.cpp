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
#include <string>

#include "qphase/errors.hpp"

namespace qphase {

StriationBasis basis_for_striation(const Striation& striation,
                                   const QubitLabeling& labeling) {
  StriationBasis out;
  out.striation = striation.direction;
  std::vector<ComplexMatrix> ops;
  for (const Point& v : striation.stabilizer_vectors) {
    out.stabilizers.push_back(translation_unitary(v, labeling));
    ops.push_back(out.stabilizers.back().unitary);
  }
  const std::uint32_t dim = labeling.dimension();
  if (ops.empty()) throw ConstructionError("striation has no stabilizers");

  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (max_abs(ops[i] * ops[j] - ops[j] * ops[i]) > kCommutationTolerance) {
        const Point& a = striation.stabilizer_vectors[i];
        const Point& b = striation.stabilizer_vectors[j];
        throw LabelingError(
            striation.direction,
            "striation " + std::to_string(striation.direction) +
                ": translations (" + a.q.label() + "," + a.p.label() + ") and (" +
                b.q.label() + "," + b.p.label() + ") do not commute under this labeling");
      }
    }
  }

  out.vectors = joint_eigenbasis(ops);

  // Every vector must be a joint eigenvector, and no two vectors may share
  // an eigenvalue tuple (otherwise the basis is not unique).
  std::vector<std::vector<Complex>> signatures;
  for (const ComplexVector& v : out.vectors) {
    std::vector<Complex> sig;
    for (const ComplexMatrix& op : ops) {
      const Complex ev = v.dot(op * v);  // <v|U|v>
      if ((op * v - ev * v).norm() > kEigenResidualTolerance) {
        throw LabelingError(striation.direction,
                            "striation " + std::to_string(striation.direction) +
                                ": eigen-residual above tolerance");
      }
      sig.push_back(ev);
    }
    for (const auto& other : signatures) {
      double diff = 0;
      for (std::size_t i = 0; i < sig.size(); ++i) diff = std::max(diff, std::abs(sig[i] - other[i]));
      if (diff < 1e-6) {
        throw LabelingError(striation.direction,
                            "striation " + std::to_string(striation.direction) +
                                ": stabilizers do not determine a unique basis");
      }
    }
    signatures.push_back(std::move(sig));
  }
  if (out.vectors.size() != dim) {
    throw ConstructionError("joint eigenbasis has the wrong size");
  }
  return out;
}

MubSet full_mub_set(const PhaseSpace& space, const QubitLabeling& labeling) {
  if (&space.field() != &labeling.field()) {
    throw ContextMismatch("labeling belongs to another field");
  }
  auto build = [&](const QubitLabeling& lab) {
    MubSet set{lab, {}, false};
    for (const Striation& s : space.striations()) {
      set.bases.push_back(basis_for_striation(s, lab));
    }
    return set;
  };
  try {
    return build(labeling);
  } catch (const LabelingError&) {
    if (labeling.p_is_trace_dual()) throw;
  }
  MubSet set = build(labeling.with_trace_dual_p());
  set.used_fallback = true;
  return set;
}

bool ConjugacyReport::all_orthonormal() const {
  for (double r : orthonormality_residuals) {
    if (!(r < tolerance)) return false;
  }
  return true;
}

bool ConjugacyReport::all_conjugate() const {
  for (const auto& p : pairs) {
    if (!p.conjugate) return false;
  }
  return true;
}

Eigen::MatrixXd overlap_matrix(std::span<const ComplexVector> first,
                               std::span<const ComplexVector> second) {
  Eigen::MatrixXd out(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (std::size_t j = 0; j < second.size(); ++j) {
      out(i, j) = std::abs(first[i].dot(second[j]));
    }
  }
  return out;
}

ConjugacyReport check_conjugacy(std::span<const StriationBasis> bases, double tolerance) {
  ConjugacyReport report;
  report.tolerance = tolerance;
  if (bases.empty()) return report;
  const Eigen::Index dim = bases.front().vectors.front().size();
  for (const auto& b : bases) {
    for (const auto& v : b.vectors) {
      if (v.size() != dim) throw PreconditionError("check_conjugacy: dimension mismatch");
    }
  }
  report.expected = 1.0 / std::sqrt(static_cast<double>(dim));

  for (const auto& b : bases) {
    double worst = 0;
    for (std::size_t i = 0; i < b.vectors.size(); ++i) {
      for (std::size_t j = 0; j < b.vectors.size(); ++j) {
        const Complex g = b.vectors[i].dot(b.vectors[j]);
        worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
      }
    }
    if (static_cast<Eigen::Index>(b.vectors.size()) != dim) worst = 1.0;
    report.orthonormality_residuals.push_back(worst);
  }

  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      const Eigen::MatrixXd ov = overlap_matrix(bases[i].vectors, bases[j].vectors);
      BasisPairOverlap p;
      p.first = bases[i].striation;
      p.second = bases[j].striation;
      p.max_overlap = ov.maxCoeff();
      p.min_overlap = ov.minCoeff();
      p.conjugate = std::abs(p.max_overlap - report.expected) <= tolerance &&
                    std::abs(p.min_overlap - report.expected) <= tolerance;
      report.pairs.push_back(p);
    }
  }
  return report;
}

std::vector<ComplexVector> bell_reference_basis() {
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<ComplexVector> out(4, ComplexVector::Zero(4));
  out[0] << h, 0, 0, h;
  out[1] << h, 0, 0, -h;
  out[2] << 0, h, h, 0;
  out[3] << 0, h, -h, 0;
  return out;
}

}  // namespace qphase
