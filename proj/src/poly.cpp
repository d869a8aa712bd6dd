#include "mckay/poly.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "mckay/errors.hpp"

namespace mckay {
namespace poly {

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly x() { return {0, 1}; }
Poly constant(Fq c) { return c == 0 ? Poly{} : Poly{c}; }

Poly add(const FiniteField& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  return trim(std::move(r));
}

Poly sub(const FiniteField& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  return trim(std::move(r));
}

Poly mul(const FiniteField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return trim(std::move(r));
}

Poly scale(const FiniteField& F, const Poly& a, Fq c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  return trim(std::move(r));
}

Poly monic(const FiniteField& F, const Poly& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

void divmod(const FiniteField& F, const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  if (b.empty()) throw InvariantError("polynomial division by zero");
  rem = a;
  if (a.size() < b.size()) {
    quot.clear();
    return;
  }
  quot.assign(a.size() - b.size() + 1, 0);
  const Fq lead_inv = F.inv(b.back());
  for (std::size_t i = rem.size(); i-- >= b.size();) {
    if (rem[i] == 0) continue;
    const Fq c = F.mul(rem[i], lead_inv);
    quot[i - b.size() + 1] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t at = i - b.size() + 1 + j;
      rem[at] = F.sub(rem[at], F.mul(c, b[j]));
    }
  }
  rem = trim(std::move(rem));
  quot = trim(std::move(quot));
}

Poly mod(const FiniteField& F, const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(F, a, b, q, r);
  return r;
}

Poly div_exact(const FiniteField& F, const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(F, a, b, q, r);
  if (!r.empty()) throw InvariantError("polynomial division is not exact");
  return q;
}

Poly gcd(const FiniteField& F, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Poly derivative(const FiniteField& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], F.from_int(static_cast<std::int64_t>(i)));
  return trim(std::move(r));
}

Poly powmod(const FiniteField& F, const Poly& base, const BigInt& exponent, const Poly& m) {
  Poly result = mod(F, {1}, m);
  Poly b = mod(F, base, m);
  const unsigned bits = exponent == 0 ? 0 : static_cast<unsigned>(msb(exponent)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    result = mod(F, mul(F, result, result), m);
    if (bit_test(exponent, i)) result = mod(F, mul(F, result, b), m);
  }
  return result;
}

Fq eval(const FiniteField& F, const Poly& f, Fq at) {
  Fq acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, at), f[i]);
  return acc;
}

std::string to_string(const FiniteField& F, const Poly& f) {
  if (f.empty()) return "0";
  std::string s;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (f[i] != 1 || i == 0) s += std::to_string(f[i]);
    if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  (void)F;
  return s;
}

}  // namespace poly

namespace {

using poly::degree;

// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const FiniteField& F, const Poly& f) {
  const std::uint32_t p = F.p();
  Poly r(f.size() / p + 1, 0);
  for (std::size_t i = 0; i < f.size(); i += p) r[i / p] = F.pow(f[i], F.q() / p);
  return poly::trim(std::move(r));
}

void square_free(const FiniteField& F, const Poly& f, int scale, std::vector<Factor>& out) {
  Poly c = poly::gcd(F, f, poly::derivative(F, f));
  Poly w = poly::div_exact(F, f, c);
  int i = 1;
  while (degree(w) > 0) {
    Poly y = poly::gcd(F, w, c);
    Poly fac = poly::div_exact(F, w, y);
    if (degree(fac) > 0) out.push_back({fac, i * scale});
    w = y;
    c = poly::div_exact(F, c, y);
    ++i;
  }
  if (degree(c) > 0) square_free(F, pth_root(F, c), scale * static_cast<int>(F.p()), out);
}

// Splits a square-free monic f into products of irreducibles of equal degree.
std::vector<std::pair<Poly, int>> distinct_degree(const FiniteField& F, Poly f) {
  std::vector<std::pair<Poly, int>> out;
  Poly h = poly::mod(F, poly::x(), f);
  for (int i = 1; degree(f) >= 2 * i; ++i) {
    h = poly::powmod(F, h, F.q(), f);
    Poly g = poly::gcd(F, poly::sub(F, h, poly::x()), f);
    if (degree(g) > 0) {
      out.emplace_back(g, i);
      f = poly::div_exact(F, f, g);
      h = poly::mod(F, h, f);
    }
  }
  if (degree(f) > 0) out.emplace_back(f, degree(f));
  return out;
}

void equal_degree(const FiniteField& F, const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  std::uniform_int_distribution<std::uint32_t> coeff(0, F.q() - 1);
  const BigInt qd = ipow(BigInt(F.q()), static_cast<unsigned>(d));
  for (;;) {
    Poly a(static_cast<std::size_t>(degree(f)));
    for (auto& c : a) c = coeff(rng);
    a = poly::trim(std::move(a));
    if (degree(a) < 1) continue;
    Poly b;
    if (F.p() == 2) {
      // absolute trace a + a^2 + ... + a^(2^(e d - 1))
      Poly t = a, sq = a;
      for (std::uint32_t k = 1; k < F.e() * static_cast<std::uint32_t>(d); ++k) {
        sq = poly::mod(F, poly::mul(F, sq, sq), f);
        t = poly::add(F, t, sq);
      }
      b = t;
    } else {
      b = poly::sub(F, poly::powmod(F, a, (qd - 1) / 2, f), {1});
    }
    Poly g = poly::gcd(F, b, f);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, poly::div_exact(F, f, g), d, rng, out);
      return;
    }
  }
}

struct CacheKey {
  std::uint32_t q;
  Poly f;
  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

}  // namespace

Factorization factor(const FiniteField& F, const Poly& f_in, std::uint64_t seed) {
  const Poly f = poly::trim(f_in);
  if (f.empty()) throw ValidationError("cannot factor the zero polynomial");
  thread_local std::map<CacheKey, Factorization> cache;
  CacheKey key{F.q(), f};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  Factorization out;
  out.unit = f.back();
  const Poly g = poly::monic(F, f);
  std::vector<Factor> sq;
  if (degree(g) > 0) square_free(F, g, 1, sq);
  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : sq) {
    for (const auto& [block, d] : distinct_degree(F, part)) {
      std::vector<Poly> irreducibles;
      equal_degree(F, block, d, rng, irreducibles);
      for (auto& p : irreducibles) out.factors.push_back({std::move(p), mult});
    }
  }
  // merge repeated irreducibles (possible across square-free layers after p-th roots)
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
    if (a.f.size() != b.f.size()) return a.f.size() < b.f.size();
    if (a.f != b.f) return a.f < b.f;
    return a.multiplicity < b.multiplicity;
  });
  std::vector<Factor> merged;
  for (auto& fac : out.factors) {
    if (!merged.empty() && merged.back().f == fac.f) {
      merged.back().multiplicity += fac.multiplicity;
    } else {
      merged.push_back(std::move(fac));
    }
  }
  out.factors = std::move(merged);
  if (cache.size() > 200000) cache.clear();
  cache.emplace(std::move(key), out);
  return out;
}

Poly multiply_out(const FiniteField& F, const Factorization& fac) {
  Poly r = poly::constant(fac.unit);
  for (const auto& [f, m] : fac.factors) {
    for (int i = 0; i < m; ++i) r = poly::mul(F, r, f);
  }
  return r;
}

bool is_irreducible(const FiniteField& F, const Poly& f_in) {
  const Poly f = poly::monic(F, poly::trim(f_in));
  const int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  auto x_power = [&](int k) {
    return poly::powmod(F, poly::x(), ipow(BigInt(F.q()), static_cast<unsigned>(k)), f);
  };
  if (poly::sub(F, x_power(n), poly::mod(F, poly::x(), f)) != Poly{}) return false;
  int m = n;
  for (int r = 2; r <= m; ++r) {
    if (m % r != 0) continue;
    while (m % r == 0) m /= r;
    const Poly g = poly::gcd(F, poly::sub(F, x_power(n / r), poly::x()), f);
    if (degree(g) > 0) return false;
  }
  return true;
}

}  // namespace mckay
