#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mckay {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt ipow(const BigInt& base, unsigned exponent);
BigInt double_factorial(unsigned n);

// a / b, throwing InvariantError when b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b, std::string_view what = "exact_div");

// floor(x^(1/k)) for x >= 0.
BigInt iroot(const BigInt& x, unsigned k);

std::string to_decimal(const BigInt& x);
BigInt from_decimal(std::string_view text);

// Checked narrowing; throws InvariantError if |x| does not fit.
std::int64_t to_int64(const BigInt& x);

}  // namespace mckay
