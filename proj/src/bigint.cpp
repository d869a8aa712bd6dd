#include "mckay/bigint.hpp"

#include <limits>

#include "mckay/errors.hpp"

namespace mckay {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

BigInt double_factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = n; i >= 2; i -= 2) r *= i;
  return r;
}

BigInt exact_div(const BigInt& a, const BigInt& b, std::string_view what) {
  if (b == 0) throw InvariantError(std::string(what) + ": division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) {
    throw InvariantError(std::string(what) + ": " + a.str() + " not divisible by " + b.str());
  }
  return q;
}

BigInt iroot(const BigInt& x, unsigned k) {
  if (x < 0) throw ValidationError("iroot of negative number");
  if (x < 2 || k == 1) return x;
  // Newton from an upper bound 2^ceil(bits/k).
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
  BigInt r = BigInt(1) << ((bits + k - 1) / k);
  while (true) {
    BigInt next = ((k - 1) * r + x / ipow(r, k - 1)) / k;
    if (next >= r) break;
    r = next;
  }
  while (ipow(r, k) > x) --r;
  while (ipow(r + 1, k) <= x) ++r;
  return r;
}

std::string to_decimal(const BigInt& x) { return x.str(); }

BigInt from_decimal(std::string_view text) {
  if (text.empty()) throw ValidationError("empty integer literal");
  std::size_t i = (text[0] == '-') ? 1 : 0;
  if (i == text.size()) throw ValidationError("malformed integer literal");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw ValidationError("malformed integer literal: " + std::string(text));
    }
  }
  return BigInt(std::string(text));
}

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw InvariantError("integer does not fit in 64 bits: " + x.str());
  }
  return static_cast<std::int64_t>(x);
}

}  // namespace mckay
