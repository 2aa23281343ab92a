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
#include <optional>
#include <span>
#include <vector>

#include "qphase/mub.hpp"
#include "qphase/wigner.hpp"

namespace qphase {

/// Shots per basis and the sampling seed. shots == 0 selects exact mode:
/// the true outcome probabilities stand in for measured frequencies.
struct MeasurementPlan {
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
};

/// Outcome counts per striation, indexed [striation][basis vector].
struct CountsRecord {
  int qubits = 0;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<std::int64_t>> counts;
  /// Exact mode only: the outcome probabilities themselves.
  std::vector<std::vector<double>> probabilities;

  bool exact() const { return shots == 0; }
  /// Empirical frequencies (or exact probabilities in exact mode).
  std::vector<std::vector<double>> frequencies() const;
};

struct ReconstructionReport {
  WignerGrid wigner;
  ComplexMatrix raw_state;
  /// Eigenvalue-truncated, trace-renormalized raw_state.
  ComplexMatrix projected_state;
  bool projected = false;
  std::int64_t shots = 0;
  // Filled only when a true state was supplied. Fidelity is always taken
  // against projected_state; trace distance against estimate().
  std::optional<double> fidelity;
  std::optional<double> trace_distance;
  std::optional<double> max_wigner_error;

  const ComplexMatrix& estimate() const { return projected ? projected_state : raw_state; }
};

/// p_k = <v_k|rho|v_k>, clipped to [0, 1] and renormalized. Throws
/// InvalidState if the raw sum drifts from 1 by 1e-9 or more.
std::vector<double> outcome_probabilities(const ComplexMatrix& rho, const StriationBasis& basis);

/// Uniform double in [0, 1) keyed by (seed, striation, shot); independent of
/// evaluation order.
double keyed_uniform(std::uint64_t seed, std::uint64_t striation, std::uint64_t shot);

/// plan.shots independent categorical draws per striation basis.
CountsRecord simulate_counts(const ComplexMatrix& rho, const QuantumNet& net,
                             const MeasurementPlan& plan);

/// W_alpha = (sum over lines through alpha of the line's frequency - 1) / N.
WignerGrid estimate_wigner(const CountsRecord& counts, const QuantumNet& net);

ReconstructionReport estimate_state(const CountsRecord& counts, const QuantumNet& net,
                                    bool project,
                                    const std::optional<ComplexMatrix>& truth = std::nullopt);

/// Hermitian part with negative eigenvalues clipped to 0, trace renormalized.
/// Already-physical input is returned unchanged.
ComplexMatrix project_to_density(const ComplexMatrix& m);
/// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 of PSD matrices.
double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);
/// Half the trace norm of (a - b) for Hermitian a, b.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

struct ScalingRow {
  std::int64_t shots = 0;
  double mean_max_wigner_error = 0;
  double mean_trace_distance = 0;
  std::size_t seeds = 0;
};

/// Monte-Carlo mean errors of the raw linear-inversion estimate per shot
/// count. shot_list must be ascending.
std::vector<ScalingRow> error_scaling_study(const ComplexMatrix& rho, const QuantumNet& net,
                                            std::span<const std::int64_t> shot_list,
                                            std::span<const std::uint64_t> seeds);

/// Least-squares slope of log(mean max |dW|) against log(shots).
double loglog_slope(std::span<const ScalingRow> rows);

}  // namespace qphase
