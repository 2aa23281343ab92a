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

#include "qphase/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "qphase/errors.hpp"

namespace qphase {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

void check_counts_shape(const CountsRecord& counts, const QuantumNet& net) {
  const std::size_t striations = net.space().striations().size();
  const std::size_t n = net.dimension();
  const auto rows = counts.frequencies();
  if (rows.size() != striations) {
    throw PreconditionError("counts cover " + std::to_string(rows.size()) + " of " +
                            std::to_string(striations) + " striations");
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].size() != n) {
      throw PreconditionError("striation " + std::to_string(k) + " has " +
                              std::to_string(rows[k].size()) + " outcomes, expected " +
                              std::to_string(n));
    }
  }
}

}  // namespace

std::vector<std::vector<double>> CountsRecord::frequencies() const {
  if (exact()) return probabilities;
  std::vector<std::vector<double>> out;
  for (const auto& row : counts) {
    std::vector<double> f;
    for (std::int64_t c : row) f.push_back(static_cast<double>(c) / static_cast<double>(shots));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<double> outcome_probabilities(const ComplexMatrix& rho, const StriationBasis& basis) {
  std::vector<double> probs;
  double total = 0;
  for (const ComplexVector& v : basis.vectors) {
    if (v.size() != rho.rows()) throw InvalidState("state dimension does not match basis");
    const double p = v.dot(rho * v).real();
    probs.push_back(p);
    total += p;
  }
  if (std::abs(total - 1.0) >= 1e-9) {
    throw InvalidState("outcome probabilities sum to " + std::to_string(total));
  }
  double clipped = 0;
  for (double& p : probs) {
    p = std::clamp(p, 0.0, 1.0);
    clipped += p;
  }
  for (double& p : probs) p /= clipped;
  return probs;
}

double keyed_uniform(std::uint64_t seed, std::uint64_t striation, std::uint64_t shot) {
  const std::uint64_t x = splitmix64(splitmix64(splitmix64(seed) ^ striation) ^ shot);
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

CountsRecord simulate_counts(const ComplexMatrix& rho, const QuantumNet& net,
                             const MeasurementPlan& plan) {
  if (plan.shots < 0) throw PreconditionError("shots must be nonnegative");
  validate_density_matrix(rho, net.dimension());
  CountsRecord rec;
  rec.qubits = net.space().qubits();
  rec.shots = plan.shots;
  rec.seed = plan.seed;
  const auto& bases = net.mubs().bases;
  for (std::size_t k = 0; k < bases.size(); ++k) {
    const std::vector<double> probs = outcome_probabilities(rho, bases[k]);
    if (plan.shots == 0) {
      rec.probabilities.push_back(probs);
      rec.counts.emplace_back(probs.size(), 0);
      continue;
    }
    std::vector<double> cumulative(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
    std::size_t last_possible = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (probs[i] > 0) last_possible = i;
    }
    std::vector<std::int64_t> row(probs.size(), 0);
    for (std::int64_t s = 0; s < plan.shots; ++s) {
      const double u = keyed_uniform(plan.seed, k, static_cast<std::uint64_t>(s));
      auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      std::size_t outcome = static_cast<std::size_t>(it - cumulative.begin());
      if (outcome > last_possible) outcome = last_possible;
      ++row[outcome];
    }
    rec.counts.push_back(std::move(row));
  }
  return rec;
}

WignerGrid estimate_wigner(const CountsRecord& counts, const QuantumNet& net) {
  check_counts_shape(counts, net);
  const auto freq = counts.frequencies();
  const std::uint32_t n = net.dimension();
  const int striations = static_cast<int>(freq.size());
  WignerGrid grid{net.space().field_ptr(), Eigen::MatrixXd(n, n)};
  for (std::uint32_t q = 0; q < n; ++q) {
    for (std::uint32_t p = 0; p < n; ++p) {
      double s = 0;
      for (int k = 0; k < striations; ++k) {
        s += freq[k][net.vector_index(k, net.space().line_through(k, q, p))];
      }
      grid.values(q, p) = (s - 1.0) / n;
    }
  }
  return grid;
}

ComplexMatrix project_to_density(const ComplexMatrix& m) {
  const ComplexMatrix h = hermitian_part(m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const Eigen::VectorXd ev = es.eigenvalues();
  if (ev.minCoeff() >= 0 && std::abs(ev.sum() - 1.0) < 1e-12) return h;
  Eigen::VectorXd clipped = ev.cwiseMax(0.0);
  const double total = clipped.sum();
  if (total <= 0) {
    return ComplexMatrix::Identity(m.rows(), m.cols()) / static_cast<double>(m.rows());
  }
  clipped /= total;
  return es.eigenvectors() * clipped.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(m));
  const Eigen::VectorXd root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * root.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  const ComplexMatrix r = psd_sqrt(rho);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(r * sigma * r),
                                                  Eigen::EigenvaluesOnly);
  const double t = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return t * t;
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(a - b), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

ReconstructionReport estimate_state(const CountsRecord& counts, const QuantumNet& net,
                                    bool project, const std::optional<ComplexMatrix>& truth) {
  ReconstructionReport rep;
  rep.wigner = estimate_wigner(counts, net);
  rep.raw_state = state_from_wigner(rep.wigner, net);
  rep.projected_state = project_to_density(rep.raw_state);
  rep.projected = project;
  rep.shots = counts.shots;
  if (truth) {
    validate_density_matrix(*truth, net.dimension());
    rep.fidelity = fidelity(*truth, rep.projected_state);
    rep.trace_distance = trace_distance(*truth, rep.estimate());
    rep.max_wigner_error =
        (rep.wigner.values - wigner_transform(*truth, net).values).cwiseAbs().maxCoeff();
  }
  return rep;
}

std::vector<ScalingRow> error_scaling_study(const ComplexMatrix& rho, const QuantumNet& net,
                                            std::span<const std::int64_t> shot_list,
                                            std::span<const std::uint64_t> seeds) {
  if (!std::is_sorted(shot_list.begin(), shot_list.end())) {
    throw PreconditionError("shot list must be ascending");
  }
  if (seeds.empty()) throw PreconditionError("scaling study needs at least one seed");
  const WignerGrid truth = wigner_from_state(rho, net);
  std::vector<ScalingRow> rows;
  for (std::int64_t shots : shot_list) {
    ScalingRow row;
    row.shots = shots;
    row.seeds = seeds.size();
    for (std::uint64_t seed : seeds) {
      const CountsRecord counts = simulate_counts(rho, net, {shots, seed});
      const WignerGrid est = estimate_wigner(counts, net);
      row.mean_max_wigner_error += (est.values - truth.values).cwiseAbs().maxCoeff();
      row.mean_trace_distance += trace_distance(state_from_wigner(est, net), rho);
    }
    row.mean_max_wigner_error /= static_cast<double>(seeds.size());
    row.mean_trace_distance /= static_cast<double>(seeds.size());
    rows.push_back(row);
  }
  return rows;
}

double loglog_slope(std::span<const ScalingRow> rows) {
  if (rows.size() < 2) throw PreconditionError("slope needs at least two rows");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const ScalingRow& r : rows) {
    if (r.shots <= 0 || r.mean_max_wigner_error <= 0) {
      throw PreconditionError("log-log slope needs positive shots and errors");
    }
    const double x = std::log(static_cast<double>(r.shots));
    const double y = std::log(r.mean_max_wigner_error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(rows.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace qphase
