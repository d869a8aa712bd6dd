#include <doctest.h>

#include <cmath>
#include <map>

#include "mckay/bounds.hpp"
#include "mckay/errors.hpp"

using namespace mckay;

namespace {

// Term exponents straight from the displayed sums, as long doubles.
long double sigma_float(int n, unsigned q, int l, int v, bool first) {
  long double sum = 0;
  const long double gp = n * n / 4.0L - v * (n - 1) / 2.0L;
  for (int s = 1; s < n; ++s) {
    long double e;
    if (first && 2 * s < n)
      e = s * (2.0L * n - s + 1) / 2 + n / 2.0L - l * s / 3.0L + ((n - s) * (n - s) + s * s) / 4.0L -
          v * (n - 1) / 2.0L;
    else if (!first && 2 * s >= n)
      e = (1.0L * n * n + n) / 2 - v * n - l * s / 3.0L + (1.0L * n * n - n * s) / 4;
    else
      continue;
    sum += (first ? 15.2L : 1.0L) * std::pow(static_cast<long double>(q), e - gp);
  }
  return sum;
}

struct SestTally {
  long cases = 0, failures = 0;
};

// Multisets of (d, k) stored as multiplicities over a fixed list of pairs.
void sest_oracle(int n, SestTally& t) {
  std::vector<std::pair<int, int>> pairs;
  for (int d = 1; d <= n; ++d)
    for (int k = 1; d * k <= n; ++k) pairs.emplace_back(d, k);
  std::vector<int> mult(pairs.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
    if (i == pairs.size()) {
      int d1 = 0;
      long twice_sum = 0;
      for (std::size_t j = 0; j < pairs.size(); ++j)
        if (mult[j]) {
          d1 = std::max(d1, pairs[j].first);
          twice_sum += 2L * mult[j] * pairs[j].second * pairs[j].first * (pairs[j].first - 1);
        }
      for (int a = 0; a <= rest; ++a) {
        const int b = rest - a;
        if (b > a) continue;
        for (int pm1 = 0; pm1 < 2; ++pm1) {
          const int top = pm1 ? a : d1;
          if (pm1 && (a < d1 || a == 0)) continue;
          if (!pm1 && (d1 == 0 || d1 < a)) continue;
          const int s = n - top;
          if (2 * s < n || s >= n) continue;
          ++t.cases;
          if (twice_sum + a * a + b * b >= static_cast<long>(n) * top) ++t.failures;
        }
      }
      return;
    }
    const int w = pairs[i].first * pairs[i].second * 2;
    for (int m = 0; m * w <= rest; ++m) {
      mult[i] = m;
      rec(i + 1, rest - m * w);
    }
    mult[i] = 0;
  };
  rec(0, n);
}

}  // namespace

TEST_CASE("scaled powers are certified floors") {
  for (unsigned q : {2u, 3u, 5u, 9u}) {
    for (std::int64_t k = -40; k <= 40; k += 7) {
      const unsigned bits = 20;
      const BigInt f = scaled_power(q, k, bits);
      // f^12 <= 2^(12 bits) q^k < (f+1)^12, cleared of the negative power
      const BigInt two = BigInt(1) << (12 * bits);
      const BigInt qk = ipow(BigInt(q), static_cast<unsigned>(std::abs(k)));
      if (k >= 0) {
        CHECK(ipow(f, 12) <= two * qk);
        CHECK(ipow(f + 1, 12) > two * qk);
      } else {
        CHECK(ipow(f, 12) * qk <= two);
        CHECK(ipow(f + 1, 12) * qk > two);
      }
    }
  }
  CHECK(scaled_power(2, -100000, 64) == 0);
}

TEST_CASE("sigma bounds agree with a floating evaluation") {
  for (unsigned q : {2u, 3u, 4u, 7u}) {
    for (int n : {10, 13, 20, 31}) {
      for (int v : {0, 1}) {
        const auto r = sigma_bounds({n, q, 4 * n, v});
        const long double s1 = sigma_float(n, q, 4 * n, v, true), s2 = sigma_float(n, q, 4 * n, v, false);
        CHECK(std::abs(static_cast<long double>(r.sigma1.lo) - s1) <= 1e-9L * (1 + s1));
        CHECK(std::abs(static_cast<long double>(r.sigma2.hi) - s2) <= 1e-9L * (1 + s2));
        CHECK(r.sigma1.lo <= r.sigma1.hi);
        if (std::abs(s1 - 0.5L) > 1e-6L) CHECK(r.sigma1_below_half == (s1 < 0.5L));
      }
    }
  }
}

TEST_CASE("sigma bound examples") {
  CHECK(sigma_bounds({15, 2, 60, 0}).sigma2_below_half);
  CHECK_FALSE(sigma_bounds({10, 2, 40, 0}).verdict());
  CHECK(sigma_bounds({21, 2, 84, 0}).verdict());
  CHECK(sigma_bounds({11, 3, 44, 0}).verdict());
  CHECK_THROWS_AS(sigma_bounds({9, 2, 36, 0}), ValidationError);
  CHECK_THROWS_AS(sigma_bounds({10, 6, 40, 0}), ValidationError);
  CHECK_THROWS_AS(sigma_bounds({10, 2, 40, 2}), ValidationError);
}

TEST_CASE("sigma bounds are monotone in l") {
  for (unsigned q : {2u, 3u, 8u}) {
    for (int n = 10; n <= 30; n += 5) {
      for (int l = 2 * n; l < 6 * n; l += 3) {
        const auto a = sigma_bounds({n, q, l, 0}), b = sigma_bounds({n, q, l + 1, 0});
        for (std::size_t i = 0; i < a.sigma1_exponents.size(); ++i)
          CHECK(b.sigma1_exponents[i] < a.sigma1_exponents[i]);
        for (std::size_t i = 0; i < a.sigma2_exponents.size(); ++i)
          CHECK(b.sigma2_exponents[i] < a.sigma2_exponents[i]);
        CHECK(b.sigma1.lo <= a.sigma1.hi);
        CHECK(b.sigma2.lo <= a.sigma2.hi);
      }
    }
  }
}

TEST_CASE("centralizer exponent search against a second enumeration") {
  for (int n = 4; n <= 18; ++n) {
    SestTally t;
    sest_oracle(n, t);
    const auto r = sest_exponent_check(n);
    CAPTURE(n);
    CHECK(r.cases == t.cases);
    CHECK(r.failures == t.failures);
  }
  // the only failures are a = b = n/2 with no GL blocks, where D equals the bound
  for (int n = 4; n <= 30; ++n) {
    const auto r = sest_exponent_check(n);
    CHECK(r.failures == (n % 2 == 0 ? 1 : 0));
    CHECK(r.equalities == r.failures);
    for (const auto& c : r.counterexamples) {
      CHECK(c.gl_blocks.empty());
      CHECK(2 * c.a == n);
      CHECK(c.a == c.b);
    }
  }
  CHECK_THROWS_AS(sest_exponent_check(31), ValidationError);
}

TEST_CASE("constants ledger") {
  const auto entries = constants_ledger();
  CHECK(entries.size() >= 4);
  for (const auto& e : entries) CHECK(e.holds());
  CHECK(entries[0].rhs == 489);
}

TEST_CASE("parametric delta sums shrink with larger degree products") {
  const auto a = delta_sums(6, 7, 3, 2.0, 400.0), b = delta_sums(6, 7, 3, 2.0, 800.0);
  CHECK(b.delta1 < a.delta1);
  CHECK(b.delta2 < a.delta2);
  CHECK_THROWS_AS(delta_sums(6, 7, 0, 2.0, 1.0), ValidationError);
}
