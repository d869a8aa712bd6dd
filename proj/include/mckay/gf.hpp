#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mckay {

// Element of GF(p^e) encoded as sum c_i p^i, where c_i are the coefficients
// of its residue modulo the field's defining polynomial.
using Fq = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
};
// Throws ValidationError when q is not a prime power.
PrimePower split_prime_power(std::uint64_t q);

// GF(q), q = p^e <= 2^20. The defining polynomial is the irreducible monic
// polynomial of degree e whose lower coefficients, read as base-p digits,
// give the smallest integer. Multiplication uses log/exp tables.
class FiniteField {
 public:
  explicit FiniteField(std::uint32_t q);

  // Shared, lazily built instance per q.
  static std::shared_ptr<const FiniteField> get(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  // c_0, ..., c_{e-1}, 1
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Fq primitive() const { return exp_[1]; }

  Fq add(Fq a, Fq b) const {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) return a + b >= p_ ? a + b - p_ : a + b;
    return add_digits(a, b);
  }
  Fq neg(Fq a) const {
    if (p_ == 2) return a;
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_digits(a);
  }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq mul(Fq a, Fq b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t k) const;
  // Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(Fq a) const;
  Fq exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
  // Image of an integer in the prime field.
  Fq from_int(std::int64_t k) const;
  // Absolute trace to GF(p), returned as an integer in [0, p).
  std::uint32_t trace(Fq a) const;
  // Square root; unique in characteristic 2, throws if a is a nonsquare.
  Fq sqrt(Fq a) const;
  bool is_square(Fq a) const { return a == 0 || p_ == 2 || log_[a] % 2 == 0; }
  std::string describe() const;

 private:
  Fq add_digits(Fq a, Fq b) const;
  Fq neg_digits(Fq a) const;

  std::uint32_t p_ = 0, e_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Fq> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

// Embedding of GF(q) into GF(q^k): the defining polynomial of GF(q) maps to
// the polynomial over GF(p) with a root in the larger field; the least such
// root (by encoding) is used.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr small, FieldPtr large);
  Fq operator()(Fq a) const { return image_[a]; }
  const FieldPtr& small() const { return small_; }
  const FieldPtr& large() const { return large_; }

 private:
  FieldPtr small_, large_;
  std::vector<Fq> image_;
};

}  // namespace mckay
