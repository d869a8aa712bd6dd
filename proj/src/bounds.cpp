#include "mckay/bounds.hpp"

#include <bit>
#include <cmath>
#include <functional>

#include "mckay/errors.hpp"
#include "mckay/gf.hpp"

namespace mckay {

namespace {

BigInt pow2(unsigned bits) { return BigInt(1) << bits; }

// floor(x * 10^digits) / 10^digits as a decimal string, x >= 0
std::string decimal(const BigRational& x, int digits) {
  const BigInt scale = ipow(BigInt(10), static_cast<unsigned>(digits));
  const BigInt v = numerator(x) * scale / denominator(x);
  std::string s = to_decimal(v);
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return s;
}

// Encloses sum_k c q^(k/12), refining until the comparison with 1/2 is
// decided.
std::pair<Enclosure, bool> enclose_below_half(std::uint32_t q, const BigRational& c,
                                              const std::vector<std::int64_t>& exps) {
  const BigRational half(1, 2);
  for (unsigned bits = 64; bits <= 1u << 14; bits *= 2) {
    BigInt lo = 0, hi = 0;
    for (std::int64_t k : exps) {
      const BigInt f = scaled_power(q, k, bits);
      lo += f;
      hi += f + 1;
    }
    Enclosure e{c * BigRational(lo, pow2(bits)), c * BigRational(hi, pow2(bits))};
    if (e.hi < half) return {e, true};
    if (e.lo >= half) return {e, false};
  }
  throw InvariantError("sigma bound comparison did not separate from 1/2");
}

}  // namespace

std::string Enclosure::to_string(int digits) const { return "[" + decimal(lo, digits) + ", " + decimal(hi, digits) + "]"; }

BigInt scaled_power(std::uint32_t q, std::int64_t twelfths, unsigned bits) {
  if (q < 2) throw ValidationError("q must be at least 2");
  if (twelfths >= 0) return iroot(ipow(BigInt(q), static_cast<unsigned>(twelfths)) << (12 * bits), 12);
  const std::uint64_t k = static_cast<std::uint64_t>(-twelfths);
  const unsigned log2q = static_cast<unsigned>(std::bit_width(q) - 1);
  if (k * log2q >= 12ull * bits + 12) return 0;
  return iroot(pow2(12 * bits) / ipow(BigInt(q), static_cast<unsigned>(k)), 12);
}

SigmaBounds sigma_bounds(const BoundParams& p) {
  if (p.n < 10) throw ValidationError("sigma bounds need n >= 10");
  split_prime_power(p.q);
  if (p.v != 0 && p.v != 1) throw ValidationError("v must be 0 or 1");
  if (p.l < 1) throw ValidationError("l must be positive");
  SigmaBounds r;
  r.params = p;
  const std::int64_t n = p.n, l = p.l, v = p.v;
  const std::int64_t gp = 3 * n * n - 6 * v * (n - 1);  // 12 * (n^2/4 - v(n-1)/2)
  for (std::int64_t s = 1; 2 * s < n; ++s)
    r.sigma1_exponents.push_back(6 * s * (2 * n - s + 1) + 6 * n - 4 * l * s + 3 * ((n - s) * (n - s) + s * s) -
                                 6 * v * (n - 1) - gp);
  for (std::int64_t s = (n + 1) / 2; s < n; ++s)
    r.sigma2_exponents.push_back(6 * (n * n + n) - 12 * v * n - 4 * l * s + 3 * (n * n - n * s) - gp);
  std::tie(r.sigma1, r.sigma1_below_half) = enclose_below_half(p.q, p.c, r.sigma1_exponents);
  std::tie(r.sigma2, r.sigma2_below_half) = enclose_below_half(p.q, BigRational(1), r.sigma2_exponents);
  return r;
}

SestReport sest_exponent_check(int n) {
  if (n < 4 || n > 30) throw ValidationError("sest check needs 4 <= n <= 30");
  SestReport r;
  r.n = n;
  std::vector<std::pair<int, int>> blocks;
  auto test = [&](bool pm1, int a, int b, int top) {
    const int s = n - top;
    if (2 * s < n || s >= n) return;
    ++r.cases;
    BigInt four_d = a * a + b * b;
    for (auto [d, k] : blocks) four_d += 2 * k * d * (d - 1);
    const BigInt four_bound = n * top;
    if (four_d < four_bound) return;
    ++r.failures;
    if (four_d == four_bound) ++r.equalities;
    if (r.counterexamples.size() < 50)
      r.counterexamples.push_back({pm1, blocks, a, b, s, BigRational(four_d, 4), BigRational(four_bound, 4)});
  };
  // blocks in non-increasing (d, k) order with sum k d = rest
  std::function<void(int, int, int, const std::function<void()>&)> gen = [&](int rest, int maxd, int maxk,
                                                                              const std::function<void()>& leaf) {
    if (rest == 0) {
      leaf();
      return;
    }
    for (int d = std::min(maxd, rest); d >= 1; --d) {
      for (int k = (d == maxd ? std::min(maxk, rest / d) : rest / d); k >= 1; --k) {
        blocks.emplace_back(d, k);
        gen(rest - k * d, d, k, leaf);
        blocks.pop_back();
      }
    }
  };
  for (int a = 0; 2 * a <= n; ++a) {
    for (int b = 0; b <= a; ++b) {
      const int rest2 = n - a - b;
      if (rest2 < 0 || rest2 % 2) continue;
      // largest eigenspace has eigenvalue +-1: n - s = a >= d_1
      if (a >= 1) gen(rest2 / 2, a, n, [&] { test(true, a, b, a); });
      // otherwise n - s = d_1 >= a
      for (int d1 = std::max(a, 1); 2 * d1 <= n && d1 <= rest2 / 2; ++d1) {
        for (int k1 = 1; k1 * d1 <= rest2 / 2; ++k1) {
          blocks.emplace_back(d1, k1);
          gen(rest2 / 2 - k1 * d1, d1, k1, [&] { test(false, a, b, d1); });
          blocks.pop_back();
        }
      }
    }
  }
  return r;
}

std::vector<ConstantEntry> constants_ledger() {
  return {
      {"product exponent", "3 * 163", BigInt(3) * 163, BigInt(489)},
      {"Steinberg power, symplectic/orthogonal", "2 * (4n + 4n), coefficient of n", BigInt(2) * (4 + 4), BigInt(16)},
      {"squared power doubling", "2 * 2 * 4n, coefficient of n", BigInt(2) * 2 * 4, BigInt(16)},
      {"extra factor 4", "4 * 8n, coefficient of n", BigInt(4) * 8, BigInt(32)},
      {"alternating constant at C1 = 2", "5 * C1^2", BigInt(5) * 2 * 2, BigInt(20)},
  };
}

DeltaSums delta_sums(int n, std::uint32_t q, int m, double f_n, double log_degree_product, double c) {
  if (n < 2 || m < 1 || f_n <= 0) throw ValidationError("delta sums need n >= 2, m >= 1, f(n) > 0");
  const double lq = std::log(static_cast<double>(q));
  DeltaSums d;
  for (int s = 1; 2 * s < n; ++s)
    d.delta1 += std::exp(m * std::log(f_n) + (n * s + 1.5 * n - 1) * lq - log_degree_product * s / n);
  d.delta1 *= c;
  for (int s = (n + 1) / 2; s < n; ++s)
    d.delta2 += std::exp(m * std::log(f_n) + (1.0 * n * n - 0.5 * n * (s - 1) - 1) * lq - log_degree_product * s / n);
  return d;
}

}  // namespace mckay
