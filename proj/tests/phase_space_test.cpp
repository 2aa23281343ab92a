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

#include <set>

#include <gtest/gtest.h>

#include "qphase/errors.hpp"

namespace qphase {
namespace {

TEST(PhaseSpace, StriationCounts) {
  const std::size_t expected[] = {3, 5, 9, 17, 33};
  for (int n = 1; n <= 5; ++n) {
    const PhaseSpace space(GaloisField::create(n));
    ASSERT_EQ(space.striations().size(), expected[n - 1]);
    for (const Striation& s : space.striations()) {
      EXPECT_EQ(s.lines.size(), space.size());
      EXPECT_EQ(s.stabilizer_vectors.size(), space.size() - 1);
      for (const Line& l : s.lines) EXPECT_EQ(l.points().size(), space.size());
    }
  }
}

TEST(PhaseSpace, StriationOrderAtTwoQubits) {
  const FieldPtr f = GaloisField::create(2);
  const PhaseSpace space(f);
  const auto& s = space.striations();
  // Vertical rays q = 0, horizontal p = 0, then p = s q for s = 1, w, w2.
  EXPECT_EQ(s[0].ray(), line_from_equation(f->one(), f->zero(), f->zero()));
  EXPECT_EQ(s[1].ray(), line_from_equation(f->zero(), f->one(), f->zero()));
  const std::uint32_t slopes[] = {1, 2, 3};
  for (int k = 0; k < 3; ++k) {
    const Line& ray = s[2 + k].ray();
    for (const Point& pt : ray.points()) {
      EXPECT_EQ(pt.p.bits(), f->mul(slopes[k], pt.q.bits()));
    }
  }
  // The line through (0,0), (1,w), (w,w2), (w2,1) lies in the slope-w striation.
  const Line belle_ray = s[3].ray();
  EXPECT_TRUE(belle_ray.contains(space.point(1, 2)));
  EXPECT_TRUE(belle_ray.contains(space.point(2, 3)));
  EXPECT_TRUE(belle_ray.contains(space.point(3, 1)));
}

TEST(PhaseSpace, LineIndexIsAxisIntercept) {
  const PhaseSpace space(GaloisField::create(3));
  for (int k = 0; k < static_cast<int>(space.striations().size()); ++k) {
    const Striation& s = space.striation(k);
    for (std::uint32_t j = 0; j < s.lines.size(); ++j) {
      // Line j crosses the q axis (vertical) or p axis (all others) at j.
      EXPECT_TRUE(s.lines[j].contains(k == 0 ? space.point(j, 0) : space.point(0, j)));
      for (const Point& pt : s.lines[j].points()) {
        EXPECT_EQ(space.line_through(k, pt.q.bits(), pt.p.bits()), j);
      }
      EXPECT_EQ(space.locate(s.lines[j]), std::make_pair(k, j));
    }
  }
}

TEST(PhaseSpace, AffinePlaneAxiomsBruteForce) {
  for (int n = 1; n <= 3; ++n) {
    const PhaseSpace space(GaloisField::create(n));
    std::vector<Line> lines;
    for (const Striation& s : space.striations()) {
      for (const Line& l : s.lines) lines.push_back(l);
    }
    EXPECT_EQ(lines.size(), space.size() * (space.size() + 1));
    // Every pair of distinct points lies on exactly one line.
    for (std::uint32_t i = 0; i < space.point_count(); ++i) {
      for (std::uint32_t j = i + 1; j < space.point_count(); ++j) {
        int on = 0;
        for (const Line& l : lines) {
          on += l.contains(space.point_at(i)) && l.contains(space.point_at(j));
        }
        ASSERT_EQ(on, 1);
      }
    }
    for (std::size_t a = 0; a < lines.size(); ++a) {
      for (std::size_t b = a + 1; b < lines.size(); ++b) {
        const auto shared = intersect(lines[a], lines[b]);
        if (lines[a].parallel_to(lines[b])) {
          EXPECT_TRUE(shared.empty());
        } else {
          EXPECT_EQ(shared.size(), 1u);
        }
      }
    }
  }
}

TEST(PhaseSpace, TranslationMapsStriationsToThemselves) {
  const PhaseSpace space(GaloisField::create(2));
  for (int k = 0; k < 5; ++k) {
    const Striation& s = space.striation(k);
    for (std::uint32_t i = 0; i < space.point_count(); ++i) {
      const Point v = space.point_at(i);
      std::set<std::uint32_t> images;
      for (const Line& l : s.lines) {
        const Line moved = translate(l, v);
        EXPECT_TRUE(moved.parallel_to(l));
        images.insert(space.locate(moved).second);
        for (const Point& pt : l.points()) EXPECT_TRUE(moved.contains(translate(pt, v)));
      }
      EXPECT_EQ(images.size(), space.size());
    }
  }
}

TEST(PhaseSpace, CanonicalEquations) {
  const FieldPtr f = GaloisField::create(2);
  const FieldElement w = f->generator();
  // w q + w p = w is the same line as q + p = 1.
  EXPECT_EQ(line_from_equation(w, w, w), line_from_equation(f->one(), f->one(), f->one()));
  EXPECT_THROW(line_from_equation(f->zero(), f->zero(), f->one()), DomainError);
}

TEST(PhaseSpace, PointIndexing) {
  const PhaseSpace space(GaloisField::create(2));
  for (std::uint32_t i = 0; i < space.point_count(); ++i) {
    EXPECT_EQ(space.index(space.point_at(i)), i);
  }
  EXPECT_EQ(space.index(space.point(2, 3)), 11u);
}

TEST(RingLines, ModFourWitness) {
  const auto w = find_ring_line_witness(4);
  ASSERT_TRUE(w.has_value());
  EXPECT_GE(w->shared.size(), 2u);
  EXPECT_NE(ring_line_points(w->a1, w->b1, w->c1, 4), ring_line_points(w->a2, w->b2, w->c2, 4));
}

TEST(RingLines, PrimeModulusHasNoWitness) {
  EXPECT_FALSE(find_ring_line_witness(3).has_value());
  EXPECT_FALSE(find_ring_line_witness(5).has_value());
}

TEST(RingLines, Preconditions) {
  EXPECT_THROW(ring_line_points(1, 0, 0, 1), PreconditionError);
  EXPECT_THROW(ring_line_points(4, 0, 0, 4), PreconditionError);
  EXPECT_EQ(ring_line_points(1, 0, 0, 4).size(), 4u);
}

}  // namespace
}  // namespace qphase
