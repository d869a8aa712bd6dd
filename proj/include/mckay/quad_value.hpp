#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "mckay/bigint.hpp"

namespace mckay {

// Square-free part of a nonzero integer: m = s^2 * D with D square-free
// (sign kept on D). Trial division; fine for |m| up to ~10^12.
struct SquareFreeSplit {
  std::int64_t square_root = 1;  // s
  std::int64_t radicand = 1;     // D
};
SquareFreeSplit split_square_free(std::int64_t m);

// a + b*sqrt(D) with a, b rational and D square-free. b == 0 forces D == 1.
// Arithmetic between two irrational values needs equal D.
class QuadValue {
 public:
  QuadValue() = default;
  QuadValue(const BigRational& a);  // NOLINT: rationals embed implicitly
  QuadValue(long long a) : QuadValue(BigRational(a)) {}  // NOLINT
  QuadValue(const BigRational& a, const BigRational& b, std::int64_t radicand);

  // sqrt(m) in canonical form, e.g. sqrt(-12) = 2*sqrt(-3), sqrt(9) = 3.
  static QuadValue sqrt_of(std::int64_t m);

  const BigRational& a() const { return a_; }
  const BigRational& b() const { return b_; }
  std::int64_t radicand() const { return radicand_; }
  bool is_rational() const { return b_ == 0; }

  // Complex conjugate (flips b when D < 0).
  QuadValue conj() const;

  QuadValue operator-() const;
  friend QuadValue operator+(const QuadValue& x, const QuadValue& y);
  friend QuadValue operator-(const QuadValue& x, const QuadValue& y);
  friend QuadValue operator*(const QuadValue& x, const QuadValue& y);
  friend QuadValue operator/(const QuadValue& x, const BigRational& r);
  friend bool operator==(const QuadValue& x, const QuadValue& y) = default;

  std::string to_string() const;

 private:
  static std::int64_t common_radicand(const QuadValue& x, const QuadValue& y);
  BigRational a_ = 0;
  BigRational b_ = 0;
  std::int64_t radicand_ = 1;
};

// Sum of values with possibly different radicands, kept as one rational
// coefficient per radicand (radicand 1 is the rational part).
class QuadSum {
 public:
  void add(const QuadValue& v);
  const BigRational& rational_part() const;
  // True when every irrational coefficient is zero.
  bool is_rational() const;

 private:
  std::map<std::int64_t, BigRational> parts_;
  static const BigRational kZero;
};

}  // namespace mckay
