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

#include "qphase/phase_space.hpp"

#include <algorithm>
#include <set>

#include "qphase/errors.hpp"

namespace qphase {

Point translate(const Point& pt, const Point& v) {
  return Point{pt.q + v.q, pt.p + v.p};
}

bool Line::contains(const Point& pt) const {
  return a_ * pt.q + b_ * pt.p == c_;
}

bool Line::parallel_to(const Line& other) const {
  return a_ == other.a_ && b_ == other.b_;
}

Line line_from_equation(const FieldElement& a, const FieldElement& b,
                        const FieldElement& c) {
  const GaloisField& field = a.field();
  field.check(b);
  field.check(c);
  if (a.is_zero() && b.is_zero()) {
    throw DomainError("degenerate line equation: a = b = 0");
  }
  const FieldElement scale = (a.is_zero() ? b : a).inverse();
  const FieldElement ca = scale * a, cb = scale * b, cc = scale * c;

  std::vector<Point> pts;
  pts.reserve(field.order());
  for (std::uint32_t q = 0; q < field.order(); ++q) {
    for (std::uint32_t p = 0; p < field.order(); ++p) {
      Point pt{field.element(q), field.element(p)};
      if (ca * pt.q + cb * pt.p == cc) pts.push_back(pt);
    }
  }
  return Line(ca, cb, cc, std::move(pts));
}

Line translate(const Line& line, const Point& v) {
  // a(q + q0) + b(p + p0) = c  <=>  a q + b p = c + a q0 + b p0
  return line_from_equation(line.a(), line.b(),
                            line.c() + line.a() * v.q + line.b() * v.p);
}

std::vector<Point> intersect(const Line& l1, const Line& l2) {
  l1.a().field().check(l2.a());
  std::vector<Point> out;
  for (const Point& pt : l1.points()) {
    if (l2.contains(pt)) out.push_back(pt);
  }
  return out;
}

std::vector<Striation> enumerate_striations(const FieldPtr& field) {
  const GaloisField& f = *field;
  const std::uint32_t n = f.order();
  std::vector<Striation> out;
  out.reserve(n + 1);

  auto finish = [&](Striation s) {
    for (const Point& pt : s.ray().points()) {
      if (!(pt.q.is_zero() && pt.p.is_zero())) s.stabilizer_vectors.push_back(pt);
    }
    out.push_back(std::move(s));
  };

  Striation vertical{0, {}, {}};
  Striation horizontal{1, {}, {}};
  for (std::uint32_t c = 0; c < n; ++c) {
    vertical.lines.push_back(line_from_equation(f.one(), f.zero(), f.element(c)));
    horizontal.lines.push_back(line_from_equation(f.zero(), f.one(), f.element(c)));
  }
  finish(std::move(vertical));
  finish(std::move(horizontal));

  for (std::uint32_t k = 0; k + 1 < n; ++k) {
    const FieldElement slope = f.element(f.pow_generator(k));
    Striation s{static_cast<int>(k) + 2, {}, {}};
    for (std::uint32_t c = 0; c < n; ++c) {
      // p = s q + c
      s.lines.push_back(line_from_equation(slope, f.one(), f.element(c)));
    }
    finish(std::move(s));
  }
  return out;
}

PhaseSpace::PhaseSpace(FieldPtr field)
    : field_(std::move(field)), striations_(enumerate_striations(field_)) {}

Point PhaseSpace::point(std::uint32_t q, std::uint32_t p) const {
  return Point{field_->element(q), field_->element(p)};
}

std::uint32_t PhaseSpace::index(const Point& pt) const {
  field_->check(pt.q);
  field_->check(pt.p);
  return pt.q.bits() * size() + pt.p.bits();
}

Point PhaseSpace::point_at(std::uint32_t index) const {
  return point(index / size(), index % size());
}

std::uint32_t PhaseSpace::line_through(int striation, std::uint32_t q,
                                       std::uint32_t p) const {
  if (striation == 0) return q;
  if (striation == 1) return p;
  const std::uint32_t slope =
      field_->pow_generator(static_cast<std::uint32_t>(striation - 2));
  return p ^ field_->mul(slope, q);
}

std::pair<int, std::uint32_t> PhaseSpace::locate(const Line& line) const {
  field_->check(line.a());
  if (line.b().is_zero()) return {0, line.c().bits()};
  if (line.a().is_zero()) return {1, line.c().bits()};
  // q + b p = c  <=>  p = b^-1 q + b^-1 c
  const std::uint32_t slope = field_->inv(line.b().bits());
  return {static_cast<int>(field_->log(slope)) + 2,
          field_->mul(slope, line.c().bits())};
}

std::vector<std::pair<int, int>> ring_line_points(int a, int b, int c, int modulus) {
  if (modulus < 2) throw PreconditionError("ring modulus must be at least 2");
  auto reduce = [modulus](int v) { return ((v % modulus) + modulus) % modulus; };
  a = reduce(a);
  b = reduce(b);
  c = reduce(c);
  if (a == 0 && b == 0) throw PreconditionError("degenerate ring equation: a = b = 0");
  std::vector<std::pair<int, int>> pts;
  for (int q = 0; q < modulus; ++q) {
    for (int p = 0; p < modulus; ++p) {
      if ((a * q + b * p) % modulus == c) pts.emplace_back(q, p);
    }
  }
  return pts;
}

std::optional<RingLineWitness> find_ring_line_witness(int modulus) {
  struct Eq {
    int a, b, c;
    std::vector<std::pair<int, int>> pts;
  };
  std::vector<Eq> eqs;
  std::set<std::vector<std::pair<int, int>>> seen;
  for (int a = 0; a < modulus; ++a) {
    for (int b = 0; b < modulus; ++b) {
      if (a == 0 && b == 0) continue;
      for (int c = 0; c < modulus; ++c) {
        auto pts = ring_line_points(a, b, c, modulus);
        // Only line-sized solution sets (exactly m points) count as lines.
        if (static_cast<int>(pts.size()) != modulus || !seen.insert(pts).second) continue;
        eqs.push_back({a, b, c, std::move(pts)});
      }
    }
  }
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (std::size_t j = i + 1; j < eqs.size(); ++j) {
      std::vector<std::pair<int, int>> shared;
      std::set_intersection(eqs[i].pts.begin(), eqs[i].pts.end(),
                            eqs[j].pts.begin(), eqs[j].pts.end(),
                            std::back_inserter(shared));
      if (shared.size() >= 2) {
        return RingLineWitness{eqs[i].a, eqs[i].b, eqs[i].c,
                               eqs[j].a, eqs[j].b, eqs[j].c, std::move(shared)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace qphase
