#include "mckay/quad_value.hpp"

#include <sstream>

#include "mckay/errors.hpp"

namespace mckay {

SquareFreeSplit split_square_free(std::int64_t m) {
  if (m == 0) throw ValidationError("square-free part of zero");
  SquareFreeSplit out;
  std::int64_t rest = m < 0 ? -m : m;
  std::int64_t d = 1;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      out.square_root *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      d *= p;
    }
  }
  d *= rest;
  out.radicand = m < 0 ? -d : d;
  return out;
}

QuadValue::QuadValue(const BigRational& a) : a_(a) {}

QuadValue::QuadValue(const BigRational& a, const BigRational& b, std::int64_t radicand)
    : a_(a), b_(b), radicand_(radicand) {
  if (radicand == 0) throw ValidationError("radicand must be nonzero");
  const auto split = split_square_free(radicand);
  if (split.square_root != 1) throw ValidationError("radicand must be square-free");
  if (radicand_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) radicand_ = 1;
}

QuadValue QuadValue::sqrt_of(std::int64_t m) {
  if (m == 0) return QuadValue(0);
  const auto split = split_square_free(m);
  return QuadValue(0, BigRational(split.square_root), split.radicand);
}

QuadValue QuadValue::conj() const {
  QuadValue out = *this;
  if (radicand_ < 0) out.b_ = -out.b_;
  return out;
}

QuadValue QuadValue::operator-() const {
  QuadValue out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

std::int64_t QuadValue::common_radicand(const QuadValue& x, const QuadValue& y) {
  if (x.is_rational()) return y.radicand_;
  if (y.is_rational()) return x.radicand_;
  if (x.radicand_ != y.radicand_) {
    throw InvariantError("QuadValue arithmetic mixes sqrt(" + std::to_string(x.radicand_) +
                         ") and sqrt(" + std::to_string(y.radicand_) + ")");
  }
  return x.radicand_;
}

QuadValue operator+(const QuadValue& x, const QuadValue& y) {
  const auto d = QuadValue::common_radicand(x, y);
  return QuadValue(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadValue operator-(const QuadValue& x, const QuadValue& y) { return x + (-y); }

QuadValue operator*(const QuadValue& x, const QuadValue& y) {
  const auto d = QuadValue::common_radicand(x, y);
  return QuadValue(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadValue operator/(const QuadValue& x, const BigRational& r) {
  if (r == 0) throw InvariantError("QuadValue division by zero");
  return QuadValue(x.a_ / r, x.b_ / r, x.radicand_);
}

std::string QuadValue::to_string() const {
  std::ostringstream os;
  os << a_;
  if (!is_rational()) os << (b_ < 0 ? "-" : "+") << abs(b_) << "*sqrt(" << radicand_ << ")";
  return os.str();
}

const BigRational QuadSum::kZero = 0;

void QuadSum::add(const QuadValue& v) {
  parts_[1] += v.a();
  if (!v.is_rational()) parts_[v.radicand()] += v.b();
}

const BigRational& QuadSum::rational_part() const {
  auto it = parts_.find(1);
  return it == parts_.end() ? kZero : it->second;
}

bool QuadSum::is_rational() const {
  for (const auto& [d, coeff] : parts_) {
    if (d != 1 && coeff != 0) return false;
  }
  return true;
}

}  // namespace mckay
