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

#include "qphase/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "qphase/mub.hpp"
#include "qphase/operators.hpp"
#include "qphase/phase_space.hpp"
#include "qphase/states.hpp"
#include "qphase/tomography.hpp"
#include "qphase/wigner.hpp"

namespace qphase {

namespace {

constexpr double kTol = 1e-9;

std::string sci(double x) {
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << x;
  return os.str();
}

}  // namespace

std::vector<CheckResult> verify_invariants(int qubits, std::uint64_t seed) {
  std::vector<CheckResult> results;
  // Each check returns "" on success or a failure description.
  auto run = [&](const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, qubits, false, {}};
    try {
      r.detail = body();
      r.passed = r.detail.empty() || r.detail.rfind("ok", 0) == 0;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  };

  FieldPtr field;
  run("field axioms", [&]() -> std::string {
    field = GaloisField::create(qubits);
    const std::uint32_t n = field->order();
    for (std::uint32_t a = 0; a < n; ++a) {
      if (field->add(a, a) != 0) return "a + a != 0";
      if (a != 0 && field->mul(a, field->inv(a)) != 1) return "missing inverse";
      for (std::uint32_t b = 0; b < n; ++b) {
        for (std::uint32_t c = 0; c < n; ++c) {
          if (field->mul(field->mul(a, b), c) != field->mul(a, field->mul(b, c))) {
            return "multiplication not associative";
          }
          if (field->mul(a, b ^ c) != (field->mul(a, b) ^ field->mul(a, c))) {
            return "not distributive";
          }
        }
      }
    }
    return "";
  });
  if (!field) return results;

  const PhaseSpace space(field);
  const std::uint32_t n = space.size();

  run("striations partition the grid", [&]() -> std::string {
    if (space.striations().size() != n + 1) return "wrong striation count";
    for (const Striation& s : space.striations()) {
      std::vector<int> hits(space.point_count(), 0);
      if (s.lines.size() != n) return "striation with wrong line count";
      for (const Line& l : s.lines) {
        if (l.points().size() != n) return "line with wrong point count";
        for (const Point& pt : l.points()) ++hits[space.index(pt)];
      }
      for (int h : hits) {
        if (h != 1) return "striation " + std::to_string(s.direction) + " is not a partition";
      }
      if (s.stabilizer_vectors.size() != n - 1) return "wrong stabilizer count";
    }
    return "";
  });

  run("affine plane axioms", [&]() -> std::string {
    std::vector<const Line*> lines;
    for (const Striation& s : space.striations()) {
      for (const Line& l : s.lines) lines.push_back(&l);
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        const std::size_t common = intersect(*lines[i], *lines[j]).size();
        const bool parallel = lines[i]->parallel_to(*lines[j]);
        if ((parallel && common != 0) || (!parallel && common != 1)) {
          return "line pair with " + std::to_string(common) + " common points";
        }
      }
    }
    return "";
  });

  const QubitLabeling labeling = QubitLabeling::default_for(field);
  run("translation operators", [&]() -> std::string {
    std::vector<TranslationOperator> ops;
    for (std::uint32_t i = 0; i < space.point_count(); ++i) {
      ops.push_back(translation_unitary(space.point_at(i), labeling));
      if (!is_unitary(ops.back().unitary)) return "non-unitary translation";
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, space.point_count() - 1);
    const bool exhaustive = qubits <= 2;
    const std::size_t trials = exhaustive ? ops.size() * ops.size() : 500;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& u = exhaustive ? ops[t / ops.size()] : ops[pick(rng)];
      const auto& w = exhaustive ? ops[t % ops.size()] : ops[pick(rng)];
      const Complex lambda = projective_check(u, w, labeling);
      const Complex l4 = lambda * lambda * lambda * lambda;
      if (std::abs(l4 - 1.0) > 1e-12) return "projective phase is not a 4th root of unity";
    }
    return "";
  });

  std::optional<MubSet> mubs;
  run("mutually unbiased bases", [&]() -> std::string {
    mubs = full_mub_set(space, labeling);
    if (mubs->bases.size() != n + 1) return "wrong number of bases";
    const ConjugacyReport rep = check_conjugacy(mubs->bases);
    if (!rep.ok()) return "bases are not mutually conjugate";
    double worst = 0;
    for (const auto& p : rep.pairs) {
      worst = std::max({worst, std::abs(p.max_overlap - rep.expected),
                        std::abs(p.min_overlap - rep.expected)});
    }
    return "ok (max deviation " + sci(worst) + ")";
  });
  if (!mubs) return results;

  std::optional<QuantumNet> net;
  run("phase-point operators", [&]() -> std::string {
    net.emplace(default_net(space, *mubs));
    const auto& a = net->phase_points();
    const ComplexMatrix identity = ComplexMatrix::Identity(n, n);
    ComplexMatrix total = ComplexMatrix::Zero(n, n);
    const ComplexMatrix& origin = a[0];
    for (std::uint32_t i = 0; i < a.size(); ++i) {
      if (max_abs(a[i] - a[i].adjoint()) > kTol) return "A is not Hermitian";
      if (std::abs(a[i].trace() - 1.0) > kTol) return "tr A != 1";
      const ComplexMatrix u = translation_unitary(space.point_at(i), labeling).unitary;
      if (max_abs(u * origin * u.adjoint() - a[i]) > kTol) return "A is not translation covariant";
      total += a[i];
      for (std::uint32_t j = 0; j < a.size(); ++j) {
        const Complex t = a[i].transpose().cwiseProduct(a[j]).sum();
        if (std::abs(t - (i == j ? double(n) : 0.0)) > kTol) return "tr(A_a A_b) != N delta";
      }
    }
    if (max_abs(total - double(n) * identity) > kTol) return "sum of A != N I";
    return "";
  });
  if (!net) return results;

  std::mt19937_64 rng(seed);
  std::vector<ComplexMatrix> states;
  for (int i = 0; i < 20; ++i) states.push_back(random_density_matrix(n, rng));

  run("Wigner line sums", [&]() -> std::string {
    for (const ComplexMatrix& rho : states) {
      const WignerGrid w = wigner_from_state(rho, *net);
      if (std::abs(w.sum() - 1.0) > kTol) return "grid does not sum to 1";
      for (std::size_t k = 0; k < space.striations().size(); ++k) {
        for (std::uint32_t j = 0; j < n; ++j) {
          const double expect = (rho * net->projector(k, j)).trace().real();
          if (std::abs(line_sum(w, space.striation(k).lines[j]) - expect) > kTol) {
            return "line sum differs from outcome probability";
          }
        }
      }
      if (max_abs(state_from_wigner(w, *net) - rho) > kTol) return "inverse transform failed";
    }
    return "";
  });

  run("Wigner translation covariance", [&]() -> std::string {
    std::uniform_int_distribution<std::uint32_t> pick(0, space.point_count() - 1);
    const bool exhaustive = qubits <= 2;
    const std::uint32_t count = exhaustive ? space.point_count() : 20;
    for (std::uint32_t t = 0; t < count; ++t) {
      const Point v = space.point_at(exhaustive ? t : pick(rng));
      const ComplexMatrix u = translation_unitary(v, labeling).unitary;
      for (std::size_t s = 0; s < 5; ++s) {
        const ComplexMatrix& rho = states[s];
        const WignerGrid moved = translate_grid(wigner_from_state(rho, *net), v);
        const WignerGrid direct = wigner_from_state(u * rho * u.adjoint(), *net);
        if ((moved.values - direct.values).cwiseAbs().maxCoeff() > kTol) {
          return "covariance fails";
        }
      }
    }
    return "";
  });

  run("exact tomographic reconstruction", [&]() -> std::string {
    for (std::size_t s = 0; s < 5; ++s) {
      const CountsRecord counts = simulate_counts(states[s], *net, {0, seed});
      const ReconstructionReport rep = estimate_state(counts, *net, false, states[s]);
      if (*rep.trace_distance > kTol) return "trace distance " + sci(*rep.trace_distance);
    }
    return "";
  });

  return results;
}

}  // namespace qphase
