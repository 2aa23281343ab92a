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
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qphase {

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

/// An element of GF(2^n). Bit i of `bits()` is the coefficient of x^i.
///
/// Elements are small value types holding a non-owning pointer to their
/// field; the field must outlive them. Arithmetic between elements of
/// different field objects throws ContextMismatch.
class FieldElement {
 public:
  FieldElement(const GaloisField* field, std::uint32_t bits);

  std::uint32_t bits() const { return bits_; }
  const GaloisField& field() const { return *field_; }
  bool is_zero() const { return bits_ == 0; }

  FieldElement inverse() const;
  std::string label() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return a + b;
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.bits_ == b.bits_;
  }
  /// Orders by coefficient value; only meaningful within one field.
  friend bool operator<(const FieldElement& a, const FieldElement& b) {
    return a.bits_ < b.bits_;
  }

 private:
  const GaloisField* field_;
  std::uint32_t bits_;
};

/// The finite field GF(2^n) = Z2[x]/(m(x)) with precomputed log tables.
///
/// The distinguished element w is the class of x. Enumeration order is by
/// increasing coefficient value, so element index and `bits()` coincide.
/// Labels are "0", "1", "w", "w2", ..., the exponent being the discrete
/// logarithm to base w; this requires w to generate the multiplicative
/// group, which holds for every default modulus.
class GaloisField {
 public:
  static constexpr int kMaxDegree = 8;

  /// Field of degree n with the default modulus.
  static FieldPtr create(int degree);
  /// Field of degree n with an explicit modulus (bit i = coefficient of x^i,
  /// bit n must be set).
  static FieldPtr create(int degree, std::uint32_t modulus);

  /// Lowest-weight primitive modulus for each supported degree.
  static std::uint32_t default_modulus(int degree);
  static bool is_irreducible(std::uint32_t poly);

  int degree() const { return degree_; }
  std::uint32_t order() const { return order_; }
  std::uint32_t modulus() const { return modulus_; }

  FieldElement element(std::uint32_t bits) const;
  FieldElement zero() const { return element(0); }
  FieldElement one() const { return element(1); }
  /// The generator w (the class of x; equal to 1 when n = 1).
  FieldElement generator() const { return element(generator_); }
  std::vector<FieldElement> elements() const;

  // Raw arithmetic on coefficient vectors. Inputs must be < order().
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow_generator(std::uint32_t k) const;
  /// Discrete log to base w; requires a != 0.
  std::uint32_t log(std::uint32_t a) const;
  /// Absolute trace into GF(2): a + a^2 + a^4 + ... + a^(2^(n-1)).
  std::uint32_t trace(std::uint32_t a) const;

  /// Basis {f_j} with trace(e_i f_j) = delta_ij. Throws DomainError if
  /// `basis` is not a basis over Z2.
  std::vector<std::uint32_t> trace_dual_basis(
      std::span<const std::uint32_t> basis) const;
  /// The polynomial basis {1, w, ..., w^(n-1)}.
  std::vector<std::uint32_t> polynomial_basis() const;
  /// Coordinates of `a` in `basis` packed as bit i = coefficient of basis[i].
  std::uint32_t coordinates(std::uint32_t a,
                            std::span<const std::uint32_t> basis) const;

  std::string label(std::uint32_t a) const;
  /// Inverse of label(); throws DomainError on unknown text.
  std::uint32_t parse(std::string_view text) const;

  void check(const FieldElement& e) const;

 private:
  GaloisField(int degree, std::uint32_t modulus);
  void self_test() const;

  int degree_;
  std::uint32_t order_;
  std::uint32_t modulus_;
  std::uint32_t generator_ = 1;
  std::vector<std::uint32_t> exp_;  // exp_[k] = w^k, k in [0, 2(order-1))
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

}  // namespace qphase
