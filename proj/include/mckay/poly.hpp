#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mckay/bigint.hpp"
#include "mckay/gf.hpp"

namespace mckay {

// Polynomial over GF(q), coefficients low to high without trailing zeros.
// The zero polynomial is empty.
using Poly = std::vector<Fq>;

namespace poly {

int degree(const Poly& f);
Poly trim(Poly f);
Poly x();
Poly constant(Fq c);
Poly add(const FiniteField& F, const Poly& a, const Poly& b);
Poly sub(const FiniteField& F, const Poly& a, const Poly& b);
Poly mul(const FiniteField& F, const Poly& a, const Poly& b);
Poly scale(const FiniteField& F, const Poly& a, Fq c);
Poly monic(const FiniteField& F, const Poly& a);
// a = quot * b + rem with deg rem < deg b.
void divmod(const FiniteField& F, const Poly& a, const Poly& b, Poly& quot, Poly& rem);
Poly mod(const FiniteField& F, const Poly& a, const Poly& b);
Poly div_exact(const FiniteField& F, const Poly& a, const Poly& b);
Poly gcd(const FiniteField& F, Poly a, Poly b);  // monic
Poly derivative(const FiniteField& F, const Poly& a);
Poly powmod(const FiniteField& F, const Poly& base, const BigInt& exponent, const Poly& m);
Fq eval(const FiniteField& F, const Poly& f, Fq at);
std::string to_string(const FiniteField& F, const Poly& f);

}  // namespace poly

struct Factor {
  Poly f;  // monic irreducible
  int multiplicity = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct Factorization {
  Fq unit = 1;
  std::vector<Factor> factors;  // sorted by degree, then coefficients
};

// Square-free decomposition, distinct-degree splitting, then randomized
// equal-degree splitting from a generator seeded with `seed`. The result is
// sorted, so it does not depend on the seed. Results are cached per thread.
Factorization factor(const FiniteField& F, const Poly& f, std::uint64_t seed = 0);

Poly multiply_out(const FiniteField& F, const Factorization& fac);

// Rabin's test.
bool is_irreducible(const FiniteField& F, const Poly& f);

}  // namespace mckay
