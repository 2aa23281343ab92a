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
#include <utility>
#include <vector>

#include "qphase/finite_field.hpp"

namespace qphase {

/// A point (q, p) of the N x N discrete phase space.
struct Point {
  FieldElement q;
  FieldElement p;

  friend bool operator==(const Point&, const Point&) = default;
  /// Ascending by (q, p) in enumeration order.
  friend bool operator<(const Point& a, const Point& b) {
    return a.q.bits() != b.q.bits() ? a.q.bits() < b.q.bits()
                                     : a.p.bits() < b.p.bits();
  }
};

/// Componentwise field addition. In characteristic 2 this is also the
/// inverse translation.
Point translate(const Point& pt, const Point& v);

/// The solution set of a q + b p = c, stored with its canonical equation
/// (leading nonzero coefficient of (a, b) scaled to 1) and its N points
/// sorted ascending by (q, p).
class Line {
 public:
  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  const FieldElement& c() const { return c_; }
  const std::vector<Point>& points() const { return points_; }

  bool contains(const Point& pt) const;
  bool parallel_to(const Line& other) const;

  friend bool operator==(const Line& x, const Line& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }

 private:
  Line(FieldElement a, FieldElement b, FieldElement c, std::vector<Point> pts)
      : a_(a), b_(b), c_(c), points_(std::move(pts)) {}
  friend Line line_from_equation(const FieldElement&, const FieldElement&,
                                 const FieldElement&);

  FieldElement a_, b_, c_;
  std::vector<Point> points_;
};

/// Throws DomainError when a = b = 0 and ContextMismatch on mixed fields.
Line line_from_equation(const FieldElement& a, const FieldElement& b,
                        const FieldElement& c);

Line translate(const Line& line, const Point& v);

/// Empty for distinct parallel lines, all points for equal lines, and
/// exactly one point otherwise.
std::vector<Point> intersect(const Line& l1, const Line& l2);

/// A complete set of N parallel lines. lines[0] is the ray (through the
/// origin); lines[k] has intercept k in enumeration order, where the
/// intercept is q for vertical lines, p for horizontal lines and the value
/// of p at q = 0 for lines p = s q + c.
struct Striation {
  int direction = 0;
  std::vector<Line> lines;
  /// The N - 1 nonzero points of the ray, ascending.
  std::vector<Point> stabilizer_vectors;

  const Line& ray() const { return lines.front(); }
};

/// All N + 1 striations: vertical (q = const), horizontal (p = const), then
/// lines p = s q + c for slopes s = 1, w, w^2, ... in power order.
std::vector<Striation> enumerate_striations(const FieldPtr& field);

/// A field together with its striations and index lookups.
class PhaseSpace {
 public:
  explicit PhaseSpace(FieldPtr field);

  const GaloisField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int qubits() const { return field_->degree(); }
  std::uint32_t size() const { return field_->order(); }
  std::uint32_t point_count() const { return size() * size(); }

  const std::vector<Striation>& striations() const { return striations_; }
  const Striation& striation(int k) const { return striations_.at(k); }

  Point point(std::uint32_t q, std::uint32_t p) const;
  /// Row-major index q * N + p.
  std::uint32_t index(const Point& pt) const;
  Point point_at(std::uint32_t index) const;

  /// Index within striation k of the line through (q, p).
  std::uint32_t line_through(int striation, std::uint32_t q, std::uint32_t p) const;

  /// Striation and line index of `line`.
  std::pair<int, std::uint32_t> locate(const Line& line) const;

 private:
  FieldPtr field_;
  std::vector<Striation> striations_;
};

/// Solutions of a q + b p = c over the ring Z_m, as (q, p) integer pairs
/// in ascending order. Throws PreconditionError for m < 2 or a = b = 0.
std::vector<std::pair<int, int>> ring_line_points(int a, int b, int c, int modulus);

struct RingLineWitness {
  int a1, b1, c1;
  int a2, b2, c2;
  std::vector<std::pair<int, int>> shared;
};

/// First pair (in equation order) of distinct m-point Z_m solution sets
/// sharing at least two points, if any.
std::optional<RingLineWitness> find_ring_line_witness(int modulus);

}  // namespace qphase
