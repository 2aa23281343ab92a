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

#include "qphase/finite_field.hpp"

#include <gtest/gtest.h>

#include "qphase/errors.hpp"

namespace qphase {
namespace {

TEST(GaloisField, DefaultModuli) {
  EXPECT_EQ(GaloisField::default_modulus(1), 0b10u);
  EXPECT_EQ(GaloisField::default_modulus(2), 0b111u);
  EXPECT_EQ(GaloisField::default_modulus(3), 0b1011u);
  EXPECT_EQ(GaloisField::default_modulus(4), 0b10011u);
  for (int n = 1; n <= GaloisField::kMaxDegree; ++n) {
    const FieldPtr f = GaloisField::create(n);
    EXPECT_EQ(f->degree(), n);
    EXPECT_EQ(f->order(), 1u << n);
  }
}

TEST(GaloisField, Gf4Relations) {
  const FieldPtr f = GaloisField::create(2);
  const FieldElement one = f->one(), w = f->generator(), zero = f->zero();
  const FieldElement w2 = w * w;
  EXPECT_EQ(one + w, w2);
  EXPECT_EQ(w * w2, one);
  EXPECT_EQ(w2 * w2, w);
  EXPECT_EQ(w.inverse(), w2);
  for (const FieldElement& a : f->elements()) EXPECT_EQ(a + a, zero);
  EXPECT_EQ(w - one, w2);
}

TEST(GaloisField, Gf2IsBinary) {
  const FieldPtr f = GaloisField::create(1);
  EXPECT_EQ(f->generator(), f->one());
  EXPECT_EQ(f->one() + f->one(), f->zero());
  EXPECT_EQ(f->label(1), "1");
  EXPECT_THROW(f->parse("w"), DomainError);
}

TEST(GaloisField, Gf8InversesExhaustive) {
  const FieldPtr f = GaloisField::create(3);
  for (std::uint32_t a = 1; a < 8; ++a) {
    int found = 0;
    for (std::uint32_t b = 1; b < 8; ++b) found += f->mul(a, b) == 1;
    EXPECT_EQ(found, 1);
    EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
  }
  // x^3 = x + 1
  EXPECT_EQ(f->pow_generator(3), 0b011u);
}

// Carry-less multiply and reduce, independent of the log tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int n) {
  std::uint32_t r = 0;
  for (int i = 0; i < n; ++i) {
    if (b >> i & 1) r ^= a << i;
  }
  for (int bit = 2 * n; bit >= n; --bit) {
    if (r >> bit & 1) r ^= modulus << (bit - n);
  }
  return r;
}

TEST(GaloisField, MultiplicationMatchesPolynomialProduct) {
  for (int n = 1; n <= 6; ++n) {
    const FieldPtr f = GaloisField::create(n);
    for (std::uint32_t a = 0; a < f->order(); ++a) {
      for (std::uint32_t b = 0; b < f->order(); ++b) {
        ASSERT_EQ(f->mul(a, b), slow_mul(a, b, f->modulus(), n)) << n << " " << a << " " << b;
      }
    }
  }
}

TEST(GaloisField, FieldAxiomsSmallDegrees) {
  for (int n = 1; n <= 4; ++n) {
    const FieldPtr f = GaloisField::create(n);
    const std::uint32_t q = f->order();
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        EXPECT_EQ(f->mul(a, b), f->mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
          ASSERT_EQ(f->mul(a, b ^ c), f->mul(a, b) ^ f->mul(a, c));
        }
      }
    }
  }
}

TEST(GaloisField, LabelsRoundTrip) {
  for (int n = 1; n <= 8; ++n) {
    const FieldPtr f = GaloisField::create(n);
    for (std::uint32_t a = 0; a < f->order(); ++a) EXPECT_EQ(f->parse(f->label(a)), a);
  }
  const FieldPtr f = GaloisField::create(2);
  EXPECT_EQ(f->label(0), "0");
  EXPECT_EQ(f->label(1), "1");
  EXPECT_EQ(f->label(2), "w");
  EXPECT_EQ(f->label(3), "w2");
  EXPECT_THROW(f->parse("w3"), DomainError);
  EXPECT_THROW(f->parse("w1"), DomainError);
  EXPECT_THROW(f->parse("x"), DomainError);
  EXPECT_THROW(f->parse(""), DomainError);
}

TEST(GaloisField, LogAndPowerAreInverse) {
  const FieldPtr f = GaloisField::create(4);
  for (std::uint32_t a = 1; a < f->order(); ++a) EXPECT_EQ(f->pow_generator(f->log(a)), a);
}

TEST(GaloisField, TraceIsLinearAndBalanced) {
  for (int n = 1; n <= 5; ++n) {
    const FieldPtr f = GaloisField::create(n);
    int ones = 0;
    for (std::uint32_t a = 0; a < f->order(); ++a) {
      const std::uint32_t t = f->trace(a);
      ASSERT_LE(t, 1u);
      ones += static_cast<int>(t);
      for (std::uint32_t b = 0; b < f->order(); ++b) {
        ASSERT_EQ(f->trace(a ^ b), t ^ f->trace(b));
      }
    }
    EXPECT_EQ(ones, static_cast<int>(f->order() / 2));
  }
}

TEST(GaloisField, TraceDualBasis) {
  for (int n = 1; n <= 6; ++n) {
    const FieldPtr f = GaloisField::create(n);
    const auto e = f->polynomial_basis();
    const auto d = f->trace_dual_basis(e);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) EXPECT_EQ(f->trace(f->mul(e[i], d[j])), i == j ? 1u : 0u);
    }
    for (std::uint32_t a = 0; a < f->order(); ++a) {
      const std::uint32_t c = f->coordinates(a, d);
      std::uint32_t back = 0;
      for (int i = 0; i < n; ++i) {
        if (c >> i & 1) back ^= d[i];
      }
      EXPECT_EQ(back, a);
    }
  }
  const FieldPtr f = GaloisField::create(2);
  const std::vector<std::uint32_t> dependent = {1, 1};
  EXPECT_THROW(f->trace_dual_basis(dependent), DomainError);
}

TEST(GaloisField, RejectsBadModuli) {
  EXPECT_THROW(GaloisField::create(0), ConstructionError);
  EXPECT_THROW(GaloisField::create(9), ConstructionError);
  EXPECT_THROW(GaloisField::create(2, 0b101), ConstructionError);    // (x+1)^2
  EXPECT_THROW(GaloisField::create(3, 0b111), ConstructionError);    // wrong degree
  EXPECT_THROW(GaloisField::create(4, 0b11111), ConstructionError);  // irreducible, not primitive
  EXPECT_NO_THROW(GaloisField::create(3, 0b1101));
  EXPECT_TRUE(GaloisField::is_irreducible(0b1011));
  EXPECT_FALSE(GaloisField::is_irreducible(0b1111));
}

TEST(GaloisField, MixedFieldsThrow) {
  const FieldPtr a = GaloisField::create(2), b = GaloisField::create(2);
  EXPECT_THROW(a->one() + b->one(), ContextMismatch);
  EXPECT_THROW(a->one() * b->one(), ContextMismatch);
  EXPECT_FALSE(a->one() == b->one());
  EXPECT_THROW(a->element(4), DomainError);
  EXPECT_THROW(a->zero().inverse(), DomainError);
}

TEST(GaloisField, ElementsAscendByCoefficients) {
  const FieldPtr f = GaloisField::create(3);
  const auto els = f->elements();
  ASSERT_EQ(els.size(), 8u);
  for (std::uint32_t i = 0; i < 8; ++i) EXPECT_EQ(els[i].bits(), i);
}

}  // namespace
}  // namespace qphase
