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

#include <bit>
#include <charconv>

#include "qphase/errors.hpp"

namespace qphase {

namespace {

int poly_degree(std::uint32_t p) { return p == 0 ? -1 : std::bit_width(p) - 1; }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = poly_degree(m);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) {
    a ^= m << (d - dm);
  }
  return a;
}

// Carry-less product reduced by m; only used while building tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t m) {
  std::uint32_t r = 0;
  for (int i = 0; b >> i; ++i) {
    if ((b >> i) & 1u) r ^= a << i;
  }
  return poly_mod(r, m);
}

}  // namespace

FieldElement::FieldElement(const GaloisField* field, std::uint32_t bits)
    : field_(field), bits_(bits) {
  if (field_ == nullptr) throw PreconditionError("field element without a field");
  if (bits_ >= field_->order()) {
    throw DomainError("coefficient vector " + std::to_string(bits) +
                      " does not fit GF(2^" +
                      std::to_string(field_->degree()) + ")");
  }
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_) throw ContextMismatch("add: elements of different fields");
  return FieldElement(a.field_, a.bits_ ^ b.bits_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_) throw ContextMismatch("mul: elements of different fields");
  return FieldElement(a.field_, a.field_->mul(a.bits_, b.bits_));
}

FieldElement FieldElement::inverse() const {
  return FieldElement(field_, field_->inv(bits_));
}

std::string FieldElement::label() const { return field_->label(bits_); }

std::uint32_t GaloisField::default_modulus(int degree) {
  switch (degree) {
    case 1: return 0b10;          // x
    case 2: return 0b111;         // x^2 + x + 1
    case 3: return 0b1011;        // x^3 + x + 1
    case 4: return 0b10011;       // x^4 + x + 1
    case 5: return 0b100101;      // x^5 + x^2 + 1
    case 6: return 0b1000011;     // x^6 + x + 1
    case 7: return 0b10000011;    // x^7 + x + 1
    case 8: return 0b100011101;   // x^8 + x^4 + x^3 + x^2 + 1
    default:
      throw ConstructionError("no default modulus for degree " +
                              std::to_string(degree));
  }
}

bool GaloisField::is_irreducible(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  for (std::uint32_t g = 2; poly_degree(g) <= d / 2; ++g) {
    if (poly_mod(poly, g) == 0) return false;
  }
  return true;
}

FieldPtr GaloisField::create(int degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw ConstructionError("field degree must lie in [1, " +
                            std::to_string(kMaxDegree) + "], got " +
                            std::to_string(degree));
  }
  return create(degree, default_modulus(degree));
}

FieldPtr GaloisField::create(int degree, std::uint32_t modulus) {
  return FieldPtr(new GaloisField(degree, modulus));
}

GaloisField::GaloisField(int degree, std::uint32_t modulus)
    : degree_(degree), order_(0), modulus_(modulus) {
  if (degree < 1 || degree > kMaxDegree) {
    throw ConstructionError("field degree must lie in [1, " +
                            std::to_string(kMaxDegree) + "], got " +
                            std::to_string(degree));
  }
  if (poly_degree(modulus) != degree) {
    throw ConstructionError("modulus degree does not match field degree");
  }
  if (!is_irreducible(modulus)) {
    throw ConstructionError("modulus is reducible over Z2");
  }
  order_ = 1u << degree;
  const std::uint32_t group = order_ - 1;
  generator_ = degree == 1 ? 1u : poly_mod(0b10, modulus);

  exp_.assign(2 * group, 0);
  log_.assign(order_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < group; ++k) {
    if (k > 0 && x == 1) {
      throw ConstructionError(
          "modulus is irreducible but not primitive; w does not generate "
          "the multiplicative group");
    }
    exp_[k] = exp_[k + group] = x;
    log_[x] = k;
    x = slow_mul(x, generator_, modulus);
  }
  if (degree <= 4) self_test();
}

void GaloisField::self_test() const {
  const std::uint32_t n = order_;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (a != 0 && mul(a, inv(a)) != 1) {
      throw ConstructionError("field self-test: inverse failed");
    }
    for (std::uint32_t b = 0; b < n; ++b) {
      if (mul(a, b) != mul(b, a) || mul(a, b) != slow_mul(a, b, modulus_)) {
        throw ConstructionError("field self-test: multiplication table");
      }
      for (std::uint32_t c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c)) ||
            mul(a, b ^ c) != (mul(a, b) ^ mul(a, c))) {
          throw ConstructionError("field self-test: ring axioms");
        }
      }
    }
  }
}

FieldElement GaloisField::element(std::uint32_t bits) const {
  return FieldElement(this, bits);
}

std::vector<FieldElement> GaloisField::elements() const {
  std::vector<FieldElement> out;
  out.reserve(order_);
  for (std::uint32_t a = 0; a < order_; ++a) out.emplace_back(this, a);
  return out;
}

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("zero has no multiplicative inverse");
  const std::uint32_t group = order_ - 1;
  return exp_[(group - log_[a]) % group];
}

std::uint32_t GaloisField::pow_generator(std::uint32_t k) const {
  return exp_[k % (order_ - 1)];
}

std::uint32_t GaloisField::log(std::uint32_t a) const {
  if (a == 0) throw DomainError("log of zero");
  return log_[a];
}

std::uint32_t GaloisField::trace(std::uint32_t a) const {
  std::uint32_t sum = 0;
  std::uint32_t term = a;
  for (int i = 0; i < degree_; ++i) {
    sum ^= term;
    term = mul(term, term);
  }
  return sum;
}

std::vector<std::uint32_t> GaloisField::polynomial_basis() const {
  std::vector<std::uint32_t> basis;
  for (int i = 0; i < degree_; ++i) basis.push_back(1u << i);
  return basis;
}

std::uint32_t GaloisField::coordinates(
    std::uint32_t a, std::span<const std::uint32_t> basis) const {
  if (static_cast<int>(basis.size()) != degree_) {
    throw DomainError("basis has the wrong number of elements");
  }
  for (std::uint32_t coeffs = 0; coeffs < order_; ++coeffs) {
    std::uint32_t v = 0;
    for (int i = 0; i < degree_; ++i) {
      if ((coeffs >> i) & 1u) v ^= basis[i];
    }
    if (v == a) return coeffs;
  }
  throw DomainError("element is not in the span of the basis");
}

std::vector<std::uint32_t> GaloisField::trace_dual_basis(
    std::span<const std::uint32_t> basis) const {
  if (static_cast<int>(basis.size()) != degree_) {
    throw DomainError("basis has the wrong number of elements");
  }
  std::vector<std::uint32_t> dual;
  for (int j = 0; j < degree_; ++j) {
    bool found = false;
    for (std::uint32_t f = 1; f < order_ && !found; ++f) {
      bool ok = true;
      for (int i = 0; i < degree_ && ok; ++i) {
        ok = trace(mul(basis[i], f)) == (i == j ? 1u : 0u);
      }
      if (ok) {
        dual.push_back(f);
        found = true;
      }
    }
    if (!found) throw DomainError("elements do not form a basis over Z2");
  }
  return dual;
}

std::string GaloisField::label(std::uint32_t a) const {
  if (a >= order_) throw DomainError("element out of range");
  if (a == 0) return "0";
  if (a == 1) return "1";
  const std::uint32_t k = log_[a];
  return k == 1 ? std::string("w") : "w" + std::to_string(k);
}

std::uint32_t GaloisField::parse(std::string_view text) const {
  if (text == "0") return 0;
  if (text == "1") return 1;
  if (degree_ >= 2 && !text.empty() && text.front() == 'w') {
    if (text == "w") return generator_;
    std::string_view digits = text.substr(1);
    std::uint32_t k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() &&
        digits.front() != '0' && k >= 2 && k < order_ - 1) {
      return exp_[k];
    }
  }
  throw DomainError("not an element of GF(" + std::to_string(order_) +
                    "): '" + std::string(text) + "'");
}

void GaloisField::check(const FieldElement& e) const {
  if (&e.field() != this) throw ContextMismatch("element belongs to another field");
}

}  // namespace qphase
