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
#include <string>

#include <json.hpp>

#include "qphase/mub.hpp"
#include "qphase/phase_space.hpp"
#include "qphase/tomography.hpp"
#include "qphase/wigner.hpp"

namespace qphase {

using Json = nlohmann::json;

// JSON forms. Keys are emitted in sorted order and doubles in shortest
// round-trip form, so parse-then-emit reproduces the input byte for byte.
// Values with magnitude below 1e-14 are written as 0.

Json matrix_to_json(const ComplexMatrix& m);  // rows of [re, im]
ComplexMatrix matrix_from_json(const Json& j);
Json vector_to_json(const ComplexVector& v);  // list of [re, im]
ComplexVector vector_from_json(const Json& j);

/// {"direction": k, "lines": [[["q", "p"], ...], ...]}
Json striation_to_json(const Striation& s);

/// {"bases": [[vector, ...], ...], "n": n}
Json bases_to_json(int qubits, std::span<const StriationBasis> bases);
std::vector<std::vector<ComplexVector>> bases_from_json(const Json& j);

/// {"n": n, "order": ["0", "1", "w", ...], "values": [[W(q, p) ...] ...]}
Json grid_to_json(const WignerGrid& grid);
WignerGrid grid_from_json(const Json& j, const FieldPtr& field);

/// {"counts": {"k": [...]}, "n": n, "seed": s, "shots": M}; exact mode adds
/// "probabilities": {"k": [...]}.
Json counts_to_json(const CountsRecord& rec);
CountsRecord counts_from_json(const Json& j);

Json report_to_json(const ReconstructionReport& rep);
Json conjugacy_to_json(const ConjugacyReport& rep);

// Text renderings.

std::string format_real(double x, int precision);
std::string format_complex(Complex z, int precision);

/// Addition and multiplication tables with element labels.
std::string render_field_tables(const GaloisField& field);
/// One small grid per line (bullet = on the line), origin bottom-left.
std::string render_striation(const PhaseSpace& space, const Striation& s);
/// Fixed-point table, p increasing upward, q increasing rightward.
std::string render_grid(const WignerGrid& grid, int precision);
std::string render_basis(const StriationBasis& basis, int precision);
std::string render_conjugacy(const ConjugacyReport& rep, int precision);
std::string render_report(const ReconstructionReport& rep, int precision);
std::string scaling_csv(std::span<const ScalingRow> rows);

}  // namespace qphase
