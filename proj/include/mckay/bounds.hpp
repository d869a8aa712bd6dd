#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mckay/bigint.hpp"

namespace mckay {

// Exponents of q are kept in twelfths, so q^(k/12) is exact data.
struct BoundParams {
  int n = 0;               // dimension of the natural module
  std::uint32_t q = 0;
  int l = 0;               // power of the character; 4n in the main application
  int v = 0;               // 0 symplectic, 1 orthogonal
  BigRational c{76, 5};    // class-number constant
};

// A certified enclosure lo <= x <= hi with lo, hi dyadic.
struct Enclosure {
  BigRational lo, hi;
  std::string to_string(int digits = 6) const;
};

struct SigmaBounds {
  BoundParams params;
  // exponent (in twelfths) of each term after division by the p-part proxy
  std::vector<std::int64_t> sigma1_exponents, sigma2_exponents;
  Enclosure sigma1, sigma2;
  bool sigma1_below_half = false;
  bool sigma2_below_half = false;
  bool verdict() const { return sigma1_below_half && sigma2_below_half; }
};

// Sigma_1 = sum_{1<=s<n/2} c q^(s(2n-s+1)/2 + n/2 - ls/3 + ((n-s)^2+s^2)/4 - v(n-1)/2)
// Sigma_2 = sum_{n/2<=s<n} q^((n^2+n)/2 - vn - ls/3 + (n^2-ns)/4)
// both divided by q^(n^2/4 - v(n-1)/2), the bound used for |G|_p. The
// comparisons with 1/2 are decided by refining the enclosures until they
// separate; exact equality cannot occur since the sums are irrational or
// have odd denominators.
SigmaBounds sigma_bounds(const BoundParams& params);

// floor(2^bits * q^(k/12))
BigInt scaled_power(std::uint32_t q, std::int64_t twelfths, unsigned bits);

struct SestCase {
  bool eigenvalue_pm1 = false;  // largest eigenspace has eigenvalue +-1
  std::vector<std::pair<int, int>> gl_blocks;  // (d_i, k_i), d non-increasing
  int a = 0, b = 0;
  int s = 0;
  BigRational D;
  BigRational bound;  // n (n-s) / 4
};

struct SestReport {
  int n = 0;
  long cases = 0;
  long failures = 0;
  long equalities = 0;  // failures with D equal to the bound
  std::vector<SestCase> counterexamples;
  bool pass() const { return failures == 0; }
};

// Enumerates the centralizer data of the semisimple-element argument for
// s >= n/2 and tests D < n (n-s) / 4 in every case.
SestReport sest_exponent_check(int n);

struct ConstantEntry {
  std::string name;
  std::string expression;
  BigInt lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

std::vector<ConstantEntry> constants_ledger();

// Parametric Delta_1m, Delta_2m for PSL/PSU: f(n) and log prod chi_i(1) are
// caller-supplied; evaluated in log space for display only.
struct DeltaSums {
  double delta1 = 0, delta2 = 0;
};
DeltaSums delta_sums(int n, std::uint32_t q, int m, double f_n, double log_degree_product, double c = 15.2);

}  // namespace mckay
