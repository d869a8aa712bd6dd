#include "mckay/gf.hpp"

#include <map>
#include <mutex>

#include "mckay/errors.hpp"

namespace mckay {

PrimePower split_prime_power(std::uint64_t q) {
  if (q < 2) throw ValidationError("field order must be at least 2");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  PrimePower out{static_cast<std::uint32_t>(p), 0};
  while (q % p == 0) {
    q /= p;
    ++out.e;
  }
  if (q != 1) throw ValidationError("field order is not a prime power");
  return out;
}

namespace {

using Digits = std::vector<std::uint32_t>;  // low to high, over GF(p)

Digits decode(std::uint32_t code, std::uint32_t p, std::uint32_t len) {
  Digits d(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t encode(const Digits& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

// Remainder of a modulo the monic b over GF(p); trailing zeros allowed.
Digits prime_mod(Digits a, const Digits& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    const std::uint32_t c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + (p - c) * b[j]) % p;
  }
  a.resize(std::min(a.size(), db));
  return a;
}

bool prime_irreducible(const Digits& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Digits g = decode(static_cast<std::uint32_t>(code), p, d);
      g.push_back(1);
      const Digits r = prime_mod(f, g, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) {
  const auto pe = split_prime_power(q);
  if (q > kMaxFieldOrder) throw ValidationError("field order exceeds 2^20");
  p_ = pe.p;
  e_ = pe.e;
  q_ = q;

  if (e_ == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint32_t code = 0;; ++code) {
      Digits f = decode(code, p_, e_);
      f.push_back(1);
      if (f[0] != 0 && prime_irreducible(f, p_)) {
        modulus_ = f;
        break;
      }
    }
  }

  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (e_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    const Digits da = decode(a, p_, e_), db = decode(b, p_, e_);
    Digits prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
      if (da[i] == 0) continue;
      for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    return encode(prime_mod(prod, modulus_, p_), p_);
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t k) {
    std::uint32_t r = 1;
    while (k) {
      if (k & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return r;
  };

  std::vector<std::uint64_t> primes;
  {
    std::uint64_t m = q_ - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) primes.push_back(d);
      while (m % d == 0) m /= d;
    }
    if (m > 1) primes.push_back(m);
  }
  std::uint32_t g = 0;
  for (std::uint32_t cand = 1; cand < q_ && g == 0; ++cand) {
    bool primitive = true;
    for (auto r : primes) primitive = primitive && slow_pow(cand, (q_ - 1) / r) != 1;
    if (primitive) g = cand;
  }
  if (q_ == 2) g = 1;
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = slow_mul(x, g);
  }
  if (x != 1) throw InvariantError("field construction: generator order mismatch");
}

std::shared_ptr<const FiniteField> FiniteField::get(std::uint32_t q) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::shared_ptr<const FiniteField>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[q];
  if (!slot) slot = std::make_shared<const FiniteField>(q);
  return slot;
}

Fq FiniteField::add_digits(Fq a, Fq b) const {
  Fq out = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const std::uint32_t s = (a % p_ + b % p_) % p_;
    out += s * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

Fq FiniteField::neg_digits(Fq a) const {
  Fq out = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const std::uint32_t c = a % p_;
    out += (c == 0 ? 0 : p_ - c) * scale;
    scale *= p_;
    a /= p_;
  }
  return out;
}

Fq FiniteField::inv(Fq a) const {
  if (a == 0) throw InvariantError("inverse of zero in GF(" + std::to_string(q_) + ")");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Fq FiniteField::pow(Fq a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1)) % (q_ - 1)];
}

std::uint32_t FiniteField::log(Fq a) const {
  if (a == 0) throw InvariantError("log of zero");
  return log_[a];
}

Fq FiniteField::from_int(std::int64_t k) const {
  const std::int64_t m = ((k % p_) + p_) % p_;
  return static_cast<Fq>(m);
}

std::uint32_t FiniteField::trace(Fq a) const {
  Fq t = 0, x = a;
  for (std::uint32_t i = 0; i < e_; ++i) {
    t = add(t, x);
    x = pow(x, p_);
  }
  if (t >= p_) throw InvariantError("trace left the prime field");
  return t;
}

Fq FiniteField::sqrt(Fq a) const {
  if (a == 0) return 0;
  if (p_ == 2) return pow(a, q_ / 2);
  if (log_[a] % 2 != 0) throw InvariantError("square root of a nonsquare");
  return exp_[log_[a] / 2];
}

std::string FiniteField::describe() const {
  std::string s = "GF(" + std::to_string(q_) + ")";
  if (e_ > 1) {
    s += " mod ";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) s += "+";
      first = false;
      if (modulus_[i] != 1 || i == 0) s += std::to_string(modulus_[i]);
      if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return s;
}

FieldEmbedding::FieldEmbedding(FieldPtr small, FieldPtr large)
    : small_(std::move(small)), large_(std::move(large)) {
  if (small_->p() != large_->p() || large_->e() % small_->e() != 0)
    throw ValidationError("no embedding " + small_->describe() + " -> " + large_->describe());
  const auto& m = small_->modulus();
  const FiniteField& L = *large_;
  Fq root = 0;
  bool found = small_->e() == 1;
  for (Fq b = 0; b < L.q() && !found; ++b) {
    Fq acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = L.add(L.mul(acc, b), L.from_int(m[i]));
    if (acc == 0) {
      root = b;
      found = true;
    }
  }
  if (!found) throw InvariantError("defining polynomial has no root in the larger field");
  image_.resize(small_->q());
  const std::uint32_t p = small_->p();
  for (Fq a = 0; a < small_->q(); ++a) {
    Fq x = a, acc = 0, power = 1;
    for (std::uint32_t i = 0; i < small_->e(); ++i) {
      acc = L.add(acc, L.mul(L.from_int(x % p), power));
      power = L.mul(power, root);
      x /= p;
    }
    image_[a] = acc;
  }
}

}  // namespace mckay
