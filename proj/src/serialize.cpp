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

#include "qphase/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qphase/errors.hpp"

namespace qphase {

namespace {

double clean(double x) { return std::abs(x) < 1e-14 ? 0.0 : x; }

Json complex_to_json(Complex z) { return Json::array({clean(z.real()), clean(z.imag())}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw PreconditionError("complex entry must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string striation_title(const PhaseSpace& space, const Striation& s) {
  if (s.direction == 0) return "vertical lines q = c";
  if (s.direction == 1) return "horizontal lines p = c";
  const std::uint32_t slope = space.field().pow_generator(s.direction - 2);
  return "lines p = " + (slope == 1 ? std::string() : space.field().label(slope) + " ") +
         "q + c";
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw PreconditionError("matrix must be a nonempty array");
  const std::size_t rows = j.size(), cols = j[0].size();
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw PreconditionError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

Json vector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v[i]));
  return out;
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw PreconditionError("vector must be a nonempty array");
  ComplexVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = complex_from_json(j[i]);
  return v;
}

Json striation_to_json(const Striation& s) {
  Json lines = Json::array();
  for (const Line& line : s.lines) {
    Json pts = Json::array();
    for (const Point& pt : line.points()) pts.push_back(Json::array({pt.q.label(), pt.p.label()}));
    lines.push_back(std::move(pts));
  }
  return Json{{"direction", s.direction}, {"lines", std::move(lines)}};
}

Json bases_to_json(int qubits, std::span<const StriationBasis> bases) {
  Json arr = Json::array();
  for (const StriationBasis& b : bases) {
    Json vecs = Json::array();
    for (const ComplexVector& v : b.vectors) vecs.push_back(vector_to_json(v));
    arr.push_back(std::move(vecs));
  }
  return Json{{"bases", std::move(arr)}, {"n", qubits}};
}

std::vector<std::vector<ComplexVector>> bases_from_json(const Json& j) {
  std::vector<std::vector<ComplexVector>> out;
  for (const Json& basis : j.at("bases")) {
    std::vector<ComplexVector> vecs;
    for (const Json& v : basis) vecs.push_back(vector_from_json(v));
    out.push_back(std::move(vecs));
  }
  return out;
}

Json grid_to_json(const WignerGrid& grid) {
  const GaloisField& f = *grid.field;
  Json order = Json::array();
  for (std::uint32_t a = 0; a < f.order(); ++a) order.push_back(f.label(a));
  Json values = Json::array();
  for (Eigen::Index q = 0; q < grid.values.rows(); ++q) {
    Json row = Json::array();
    for (Eigen::Index p = 0; p < grid.values.cols(); ++p) row.push_back(clean(grid.values(q, p)));
    values.push_back(std::move(row));
  }
  return Json{{"n", f.degree()}, {"order", std::move(order)}, {"values", std::move(values)}};
}

WignerGrid grid_from_json(const Json& j, const FieldPtr& field) {
  if (j.at("n").get<int>() != field->degree()) throw PreconditionError("grid has the wrong n");
  const Json& order = j.at("order");
  const std::uint32_t n = field->order();
  if (order.size() != n) throw PreconditionError("grid order has the wrong length");
  for (std::uint32_t a = 0; a < n; ++a) {
    if (order[a].get<std::string>() != field->label(a)) {
      throw PreconditionError("grid order does not match field enumeration");
    }
  }
  const Json& values = j.at("values");
  if (values.size() != n) throw PreconditionError("grid has the wrong number of rows");
  WignerGrid grid{field, Eigen::MatrixXd(n, n)};
  for (std::uint32_t q = 0; q < n; ++q) {
    if (values[q].size() != n) throw PreconditionError("grid row has the wrong length");
    for (std::uint32_t p = 0; p < n; ++p) grid.values(q, p) = values[q][p].get<double>();
  }
  return grid;
}

Json counts_to_json(const CountsRecord& rec) {
  Json counts = Json::object();
  for (std::size_t k = 0; k < rec.counts.size(); ++k) counts[std::to_string(k)] = rec.counts[k];
  Json out{{"counts", std::move(counts)}, {"n", rec.qubits}, {"seed", rec.seed}, {"shots", rec.shots}};
  if (rec.exact()) {
    Json probs = Json::object();
    for (std::size_t k = 0; k < rec.probabilities.size(); ++k) {
      Json row = Json::array();
      for (double p : rec.probabilities[k]) row.push_back(clean(p));
      probs[std::to_string(k)] = std::move(row);
    }
    out["probabilities"] = std::move(probs);
  }
  return out;
}

CountsRecord counts_from_json(const Json& j) {
  CountsRecord rec;
  rec.qubits = j.at("n").get<int>();
  rec.shots = j.at("shots").get<std::int64_t>();
  rec.seed = j.at("seed").get<std::uint64_t>();
  if (rec.shots < 0) throw PreconditionError("shots must be nonnegative");
  auto rows_of = [](const Json& obj, auto tag) {
    using T = decltype(tag);
    std::vector<std::vector<T>> rows(obj.size());
    for (const auto& [key, value] : obj.items()) {
      std::size_t k = 0;
      try {
        k = std::stoul(key);
      } catch (const std::exception&) {
        throw PreconditionError("striation key '" + key + "' is not an integer");
      }
      if (k >= rows.size()) throw PreconditionError("striation ids must be 0..count-1");
      rows[k] = value.template get<std::vector<T>>();
    }
    return rows;
  };
  rec.counts = rows_of(j.at("counts"), std::int64_t{});
  if (rec.exact()) {
    rec.probabilities = rows_of(j.at("probabilities"), double{});
  } else {
    for (std::size_t k = 0; k < rec.counts.size(); ++k) {
      std::int64_t total = 0;
      for (std::int64_t c : rec.counts[k]) {
        if (c < 0) throw PreconditionError("counts must be nonnegative");
        total += c;
      }
      if (total != rec.shots) {
        throw PreconditionError("counts of striation " + std::to_string(k) +
                                " do not sum to the shot count");
      }
    }
  }
  return rec;
}

Json report_to_json(const ReconstructionReport& rep) {
  Json out{{"estimate", matrix_to_json(rep.estimate())},
           {"projected", rep.projected},
           {"raw_state", matrix_to_json(rep.raw_state)},
           {"shots", rep.shots},
           {"wigner", grid_to_json(rep.wigner)}};
  if (rep.fidelity) out["fidelity"] = clean(*rep.fidelity);
  if (rep.trace_distance) out["trace_distance"] = clean(*rep.trace_distance);
  if (rep.max_wigner_error) out["max_wigner_error"] = clean(*rep.max_wigner_error);
  return out;
}

Json conjugacy_to_json(const ConjugacyReport& rep) {
  Json pairs = Json::array();
  for (const auto& p : rep.pairs) {
    pairs.push_back(Json{{"conjugate", p.conjugate},
                         {"first", p.first},
                         {"max_overlap", p.max_overlap},
                         {"min_overlap", p.min_overlap},
                         {"second", p.second}});
  }
  return Json{{"all_conjugate", rep.all_conjugate()},
              {"all_orthonormal", rep.all_orthonormal()},
              {"expected", rep.expected},
              {"orthonormality_residuals", rep.orthonormality_residuals},
              {"pairs", std::move(pairs)},
              {"tolerance", rep.tolerance}};
}

std::string format_real(double x, int precision) {
  const double threshold = 0.5 * std::pow(10.0, -precision);
  if (std::abs(x) < threshold) x = 0.0;  // no "-0.000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, x);
  return buf;
}

std::string format_complex(Complex z, int precision) {
  const double threshold = 0.5 * std::pow(10.0, -precision);
  const double re = std::abs(z.real()) < threshold ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < threshold ? 0.0 : z.imag();
  if (im == 0.0) return format_real(re, precision);
  if (re == 0.0) return format_real(im, precision) + "i";
  return format_real(re, precision) + (im < 0 ? "-" : "+") + format_real(std::abs(im), precision) +
         "i";
}

std::string render_field_tables(const GaloisField& field) {
  const std::uint32_t n = field.order();
  std::size_t width = 1;
  for (std::uint32_t a = 0; a < n; ++a) width = std::max(width, field.label(a).size());
  width += 1;
  std::ostringstream os;
  os << "GF(" << n << "), modulus bits 0b";
  for (int i = field.degree(); i >= 0; --i) os << ((field.modulus() >> i) & 1u);
  os << "\n";
  auto table = [&](const char* op, auto fn) {
    os << "\n" << pad_left(op, width) << " |";
    for (std::uint32_t b = 0; b < n; ++b) os << pad_left(field.label(b), width);
    os << "\n" << std::string(width + 1, '-') << '+' << std::string(width * n, '-') << "\n";
    for (std::uint32_t a = 0; a < n; ++a) {
      os << pad_left(field.label(a), width) << " |";
      for (std::uint32_t b = 0; b < n; ++b) os << pad_left(field.label(fn(a, b)), width);
      os << "\n";
    }
  };
  table("+", [&](std::uint32_t a, std::uint32_t b) { return field.add(a, b); });
  table("*", [&](std::uint32_t a, std::uint32_t b) { return field.mul(a, b); });
  return os.str();
}

std::string render_striation(const PhaseSpace& space, const Striation& s) {
  const std::uint32_t n = space.size();
  std::ostringstream os;
  os << "striation " << s.direction << ": " << striation_title(space, s) << "\n";
  for (std::uint32_t row = 0; row < n; ++row) {
    const std::uint32_t p = n - 1 - row;
    for (std::uint32_t j = 0; j < s.lines.size(); ++j) {
      if (j > 0) os << "   ";
      for (std::uint32_t q = 0; q < n; ++q) {
        if (q > 0) os << ' ';
        os << (s.lines[j].contains(space.point(q, p)) ? "•" : "∘");
      }
    }
    os << "\n";
  }
  return os.str();
}

std::string render_grid(const WignerGrid& grid, int precision) {
  const GaloisField& f = *grid.field;
  const std::uint32_t n = f.order();
  std::size_t width = static_cast<std::size_t>(precision) + 4;
  std::size_t label_width = 3;
  for (std::uint32_t a = 0; a < n; ++a) label_width = std::max(label_width, f.label(a).size());
  std::ostringstream os;
  for (std::uint32_t row = 0; row < n; ++row) {
    const std::uint32_t p = n - 1 - row;
    os << pad_left(f.label(p), label_width) << " |";
    for (std::uint32_t q = 0; q < n; ++q) {
      os << pad_left(format_real(grid.values(q, p), precision), width);
    }
    os << "\n";
  }
  os << std::string(label_width, ' ') << " +" << std::string(width * n, '-') << "\n";
  os << pad_left("p/q", label_width) << "  ";
  for (std::uint32_t q = 0; q < n; ++q) os << pad_left(f.label(q), width);
  os << "\n";
  return os.str();
}

std::string render_basis(const StriationBasis& basis, int precision) {
  std::ostringstream os;
  os << "basis for striation " << basis.striation << "\n";
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
    os << "  v" << i << " = (";
    for (Eigen::Index k = 0; k < basis.vectors[i].size(); ++k) {
      if (k > 0) os << ", ";
      os << format_complex(basis.vectors[i][k], precision);
    }
    os << ")\n";
  }
  return os.str();
}

std::string render_conjugacy(const ConjugacyReport& rep, int precision) {
  std::ostringstream os;
  os << "pair      max|<v|w>|   min|<v|w>|   conjugate\n";
  for (const auto& p : rep.pairs) {
    os << pad_left(std::to_string(p.first), 3) << " -" << pad_left(std::to_string(p.second), 3)
       << pad_left(format_real(p.max_overlap, precision + 3), 13)
       << pad_left(format_real(p.min_overlap, precision + 3), 13)
       << (p.conjugate ? "   yes" : "   NO") << "\n";
  }
  double worst = 0;
  for (double r : rep.orthonormality_residuals) worst = std::max(worst, r);
  std::ostringstream expected;
  expected << rep.expected;
  os << "max orthonormality residual: " << worst << "\n";
  if (rep.ok()) {
    os << "all overlaps " << expected.str() << "\n";
  } else {
    os << "FAILED: overlaps differ from " << expected.str() << " beyond tolerance "
       << rep.tolerance << "\n";
  }
  return os.str();
}

std::string render_report(const ReconstructionReport& rep, int precision) {
  std::ostringstream os;
  os << "shots per basis: " << (rep.shots == 0 ? std::string("exact") : std::to_string(rep.shots))
     << "\n";
  if (rep.fidelity) os << "fidelity: " << format_real(*rep.fidelity, precision) << "\n";
  if (rep.trace_distance) {
    os << "trace distance: " << format_real(*rep.trace_distance, precision) << "\n";
  }
  if (rep.max_wigner_error) {
    os << "max |dW|: " << format_real(*rep.max_wigner_error, precision) << "\n";
  }
  os << "\nestimated Wigner function:\n" << render_grid(rep.wigner, precision);
  os << "\nestimated density matrix (" << (rep.projected ? "projected" : "raw") << "):\n";
  const ComplexMatrix& m = rep.estimate();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << " ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      os << pad_left(format_complex(m(i, j), precision), 2 * precision + 8);
    }
    os << "\n";
  }
  return os.str();
}

std::string scaling_csv(std::span<const ScalingRow> rows) {
  std::ostringstream os;
  os.precision(17);
  os << "shots,seeds,mean_max_wigner_error,mean_trace_distance\n";
  for (const ScalingRow& r : rows) {
    os << r.shots << ',' << r.seeds << ',' << r.mean_max_wigner_error << ','
       << r.mean_trace_distance << "\n";
  }
  return os.str();
}

}  // namespace qphase
