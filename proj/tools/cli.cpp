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

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qphase/errors.hpp"
#include "qphase/finite_field.hpp"
#include "qphase/mub.hpp"
#include "qphase/phase_space.hpp"
#include "qphase/serialize.hpp"
#include "qphase/states.hpp"
#include "qphase/tomography.hpp"
#include "qphase/verify.hpp"
#include "qphase/wigner.hpp"

namespace qphase::cli {

namespace {

constexpr int kMaxPhaseSpaceQubits = 5;

struct GlobalOptions {
  std::string format = "ascii";
  int precision = 3;
  std::uint64_t seed = 1;
};

struct UsageError : Error {
  using Error::Error;
};

QubitLabeling labeling_by_name(const std::string& name, const FieldPtr& field) {
  if (name == "default") return QubitLabeling::default_for(field);
  if (name == "polynomial") return QubitLabeling::polynomial(field);
  if (name == "trace-dual") return QubitLabeling::trace_dual(field);
  throw UsageError("unknown labeling '" + name + "'");
}

QuantumNet build_net(int qubits, const std::string& labeling, std::ostream& err) {
  const FieldPtr field = GaloisField::create(qubits);
  const PhaseSpace space(field);
  MubSet mubs = full_mub_set(space, labeling_by_name(labeling, field));
  if (mubs.used_fallback) {
    err << "warning: labeling '" << labeling
        << "' failed; p axis relabeled with the trace-dual basis\n";
  }
  return default_net(space, mubs);
}

ParsedState load_state(const std::string& spec, int qubits, std::ostream& err) {
  ParsedState st = parse_state_spec(spec, qubits);
  if (st.auto_normalized) err << "warning: state vector was not normalized; rescaled\n";
  return st;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

int cmd_field(const GlobalOptions& g, int qubits, std::ostream& out) {
  const FieldPtr field = GaloisField::create(qubits);
  if (g.format == "json") {
    const std::uint32_t n = field->order();
    Json elements = Json::array();
    Json add = Json::array(), mul = Json::array();
    for (std::uint32_t a = 0; a < n; ++a) {
      elements.push_back(field->label(a));
      Json ra = Json::array(), rm = Json::array();
      for (std::uint32_t b = 0; b < n; ++b) {
        ra.push_back(field->label(field->add(a, b)));
        rm.push_back(field->label(field->mul(a, b)));
      }
      add.push_back(std::move(ra));
      mul.push_back(std::move(rm));
    }
    emit_json(out, Json{{"add", add}, {"elements", elements}, {"modulus", field->modulus()},
                        {"mul", mul}, {"n", qubits}});
  } else if (g.format == "ascii") {
    out << render_field_tables(*field);
  } else {
    throw UsageError("field supports --format ascii|json");
  }
  return kSuccess;
}

int cmd_striations(const GlobalOptions& g, int qubits, std::ostream& out) {
  const PhaseSpace space(GaloisField::create(qubits));
  if (g.format == "json") {
    Json arr = Json::array();
    for (const Striation& s : space.striations()) arr.push_back(striation_to_json(s));
    emit_json(out, arr);
  } else if (g.format == "ascii") {
    for (const Striation& s : space.striations()) out << render_striation(space, s) << "\n";
  } else {
    throw UsageError("striations supports --format ascii|json");
  }
  return kSuccess;
}

int cmd_mub(const GlobalOptions& g, int qubits, const std::string& labeling, bool verify,
            std::ostream& out, std::ostream& err) {
  const FieldPtr field = GaloisField::create(qubits);
  const PhaseSpace space(field);
  const MubSet mubs = full_mub_set(space, labeling_by_name(labeling, field));
  if (mubs.used_fallback) {
    err << "warning: labeling '" << labeling
        << "' failed; p axis relabeled with the trace-dual basis\n";
  }
  const ConjugacyReport report = check_conjugacy(mubs.bases);
  if (g.format == "json") {
    Json j = bases_to_json(qubits, mubs.bases);
    j["report"] = conjugacy_to_json(report);
    emit_json(out, j);
  } else if (g.format == "ascii") {
    for (const StriationBasis& b : mubs.bases) out << render_basis(b, g.precision);
    out << "\n" << render_conjugacy(report, g.precision);
  } else {
    throw UsageError("mub supports --format ascii|json");
  }
  if (verify && !report.ok()) return kVerificationFailed;
  return kSuccess;
}

int cmd_wigner(const GlobalOptions& g, int qubits, const std::string& state_spec,
               const std::string& labeling, bool lines, std::ostream& out, std::ostream& err) {
  const ParsedState st = load_state(state_spec, qubits, err);
  const QuantumNet net = build_net(qubits, labeling, err);
  const WignerGrid grid = wigner_from_state(st.rho, net);
  const PhaseSpace& space = net.space();

  std::vector<std::vector<double>> sums;
  if (lines) {
    for (const Striation& s : space.striations()) {
      std::vector<double> row;
      for (const Line& l : s.lines) row.push_back(line_sum(grid, l));
      sums.push_back(std::move(row));
    }
  }

  if (g.format == "json") {
    Json j = grid_to_json(grid);
    if (lines) j["line_sums"] = sums;
    emit_json(out, j);
  } else if (g.format == "csv") {
    out << "q,p,value\n";
    for (std::uint32_t q = 0; q < space.size(); ++q) {
      for (std::uint32_t p = 0; p < space.size(); ++p) {
        out << space.field().label(q) << ',' << space.field().label(p) << ','
            << format_real(grid.values(q, p), g.precision) << "\n";
      }
    }
  } else {
    out << render_grid(grid, g.precision);
    if (lines) {
      out << "\nline sums (line k has intercept k):\n";
      for (std::size_t k = 0; k < sums.size(); ++k) {
        out << "  striation " << k << ":";
        for (double v : sums[k]) out << ' ' << format_real(v, g.precision);
        out << "\n";
      }
    }
  }
  return kSuccess;
}

struct TomoArgs {
  std::string state;
  std::string labeling = "default";
  std::int64_t shots = 1000;
  bool raw = false;
  std::string counts_out;
  std::string from_counts;
  std::vector<std::int64_t> scaling;
  int seeds = 200;
};

int cmd_tomo(const GlobalOptions& g, int qubits, const TomoArgs& a, std::ostream& out,
             std::ostream& err) {
  if (a.shots < 0) throw UsageError("--shots must be nonnegative");
  std::optional<ParsedState> st;
  if (!a.state.empty()) st = load_state(a.state, qubits, err);
  const QuantumNet net = build_net(qubits, a.labeling, err);

  if (!a.scaling.empty()) {
    if (!st) throw UsageError("--scaling needs --state");
    if (a.seeds < 1) throw UsageError("--seeds must be positive");
    std::vector<std::uint64_t> seeds(a.seeds);
    std::iota(seeds.begin(), seeds.end(), g.seed);
    const auto rows = error_scaling_study(st->rho, net, a.scaling, seeds);
    if (g.format == "json") {
      Json arr = Json::array();
      for (const ScalingRow& r : rows) {
        arr.push_back(Json{{"mean_max_wigner_error", r.mean_max_wigner_error},
                           {"mean_trace_distance", r.mean_trace_distance},
                           {"seeds", r.seeds},
                           {"shots", r.shots}});
      }
      emit_json(out, arr);
    } else {
      out << scaling_csv(rows);
    }
    return kSuccess;
  }

  CountsRecord counts;
  if (!a.from_counts.empty()) {
    std::ifstream in(a.from_counts);
    if (!in) throw UsageError("cannot read " + a.from_counts);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw UsageError(std::string("malformed counts file: ") + e.what());
    }
    counts = counts_from_json(j);
    if (counts.qubits != qubits) throw UsageError("counts file is for a different n");
  } else {
    if (!st) throw UsageError("tomo needs --state or --from-counts");
    counts = simulate_counts(st->rho, net, {a.shots, g.seed});
  }
  if (!a.counts_out.empty()) {
    std::ofstream f(a.counts_out);
    if (!f) throw UsageError("cannot write " + a.counts_out);
    f << counts_to_json(counts).dump() << "\n";
  }

  std::optional<ComplexMatrix> truth;
  if (st) truth = st->rho;
  const ReconstructionReport rep = estimate_state(counts, net, !a.raw, truth);
  if (g.format == "json") {
    emit_json(out, report_to_json(rep));
  } else if (g.format == "ascii") {
    out << render_report(rep, g.precision);
  } else {
    throw UsageError("tomo supports --format ascii|json (csv with --scaling)");
  }
  return kSuccess;
}

int cmd_verify(const GlobalOptions& g, int n_max, std::ostream& out) {
  bool all_ok = true;
  Json arr = Json::array();
  std::ostringstream table;
  table << " n  status  check\n";
  for (int qubits = 1; qubits <= n_max; ++qubits) {
    const auto start = std::chrono::steady_clock::now();
    for (const CheckResult& r : verify_invariants(qubits, g.seed)) {
      all_ok = all_ok && r.passed;
      table << (qubits < 10 ? " " : "") << qubits << "  " << (r.passed ? "pass  " : "FAIL  ")
            << "  " << r.name << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
      arr.push_back(Json{{"detail", r.detail}, {"n", r.qubits}, {"name", r.name},
                         {"passed", r.passed}});
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    table << "    (n = " << qubits << " took " << format_real(secs, 2) << " s)\n";
  }
  if (g.format == "json") {
    emit_json(out, Json{{"checks", arr}, {"passed", all_ok}});
  } else {
    out << table.str() << (all_ok ? "all checks passed\n" : "SOME CHECKS FAILED\n");
  }
  return all_ok ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete phase space, mutually unbiased bases and Wigner functions for n qubits"};
  app.name("qphase");
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"ascii", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--precision", g.precision, "Decimal places for text output")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Sampling seed")->capture_default_str();

  int qubits = 1;
  auto add_n = [&](CLI::App* sub, int max) {
    sub->add_option("-n,--qubits", qubits, "Number of qubits")->required()->check(CLI::Range(1, max));
  };
  std::string labeling = "default";
  auto add_labeling = [&](CLI::App* sub) {
    sub->add_option("--labeling", labeling, "Axis labeling: default, polynomial or trace-dual")
        ->check(CLI::IsMember({"default", "polynomial", "trace-dual"}));
  };

  auto* field = app.add_subcommand("field", "Addition and multiplication tables of GF(2^n)");
  add_n(field, GaloisField::kMaxDegree);

  auto* striations = app.add_subcommand("striations", "The N+1 striations of phase space");
  add_n(striations, kMaxPhaseSpaceQubits);

  bool verify_flag = false;
  auto* mub = app.add_subcommand("mub", "Mutually unbiased bases derived from the striations");
  add_n(mub, kMaxPhaseSpaceQubits);
  add_labeling(mub);
  mub->add_flag("--verify", verify_flag, "Exit 1 unless every overlap is 1/sqrt(N)");

  std::string state;
  bool lines_flag = false;
  auto* wigner = app.add_subcommand("wigner", "Discrete Wigner function of a state");
  add_n(wigner, kMaxPhaseSpaceQubits);
  add_labeling(wigner);
  wigner->add_option("--state", state, "Registry name or inline JSON vector/matrix")->required();
  wigner->add_flag("--lines", lines_flag, "Append the sum over every line");

  TomoArgs tomo_args;
  auto* tomo = app.add_subcommand("tomo", "Simulated tomography with the conjugate bases");
  add_n(tomo, kMaxPhaseSpaceQubits);
  add_labeling(tomo);
  tomo->add_option("--state", tomo_args.state, "True state (registry name or inline JSON)");
  tomo->add_option("--shots", tomo_args.shots, "Shots per basis; 0 = exact probabilities")
      ->capture_default_str();
  tomo->add_flag("--raw", tomo_args.raw, "Report the raw linear-inversion estimate");
  tomo->add_option("--counts-out", tomo_args.counts_out, "Write the counts record (JSON)");
  tomo->add_option("--from-counts", tomo_args.from_counts, "Reconstruct from a counts record");
  tomo->add_option("--scaling", tomo_args.scaling, "Ascending shot counts for an error study")
      ->delimiter(',');
  tomo->add_option("--seeds", tomo_args.seeds, "Seeds per shot count in the study")
      ->capture_default_str();

  int n_max = 4;
  auto* verify = app.add_subcommand("verify", "Run every invariant check for n = 1..n-max");
  verify->add_option("--n-max", n_max, "Largest qubit count")
      ->check(CLI::Range(1, kMaxPhaseSpaceQubits))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*field) return cmd_field(g, qubits, out);
    if (*striations) return cmd_striations(g, qubits, out);
    if (*mub) return cmd_mub(g, qubits, labeling, verify_flag, out, err);
    if (*wigner) return cmd_wigner(g, qubits, state, labeling, lines_flag, out, err);
    tomo_args.labeling = labeling;
    if (*tomo) return cmd_tomo(g, qubits, tomo_args, out, err);
    if (*verify) return cmd_verify(g, n_max, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidState& e) {
    err << "error: " << e.what() << "\n"
        << "known states:";
    for (const auto& name : registry_names()) err << ' ' << name;
    err << "\n";
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "construction failed: " << e.what() << "\n";
    return kConstructionFailed;
  }
  return kUsageError;
}

}  // namespace qphase::cli
