#pragma once

// Brute-force references for the classical-group computations: everything is
// enumerated over the whole space or the whole group.

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "mckay/classical.hpp"

namespace oracle {

using mckay::Fq;
using mckay::FqMatrix;
using mckay::FqVector;
using mckay::QuadraticSpace;

inline std::vector<FqVector> all_vectors(std::uint32_t q, int d) {
  std::vector<FqVector> out;
  FqVector v(d, 0);
  while (true) {
    out.push_back(v);
    int i = 0;
    while (i < d && ++v[i] == q) v[i++] = 0;
    if (i == d) break;
  }
  return out;
}

inline FqVector scale(const mckay::FiniteField& F, Fq c, FqVector v) {
  for (auto& x : v) x = F.mul(c, x);
  return v;
}

struct Counts {
  std::int64_t rho = 0, rho_sp = 0, ind_pp = 0, ind_h = 0, pi_plus = 0, pi_minus = 0;
};

// Fixed points read off directly: v spans a fixed line iff g v is a multiple
// of v; the forms Q_0 + B(v,.)^2 are tested on every vector.
inline Counts brute_counts(const QuadraticSpace& s, const FqMatrix& g) {
  const auto& F = *s.field;
  const auto vs = all_vectors(F.q(), s.d);
  Counts c;
  std::int64_t fixed_lines_vectors = 0, singular_line_vectors = 0;
  for (const auto& v : vs) {
    bool zero = true;
    for (Fq x : v) zero = zero && x == 0;
    if (zero) continue;
    const FqVector gv = g.apply(v);
    bool on_line = false;
    for (Fq l = 1; l < F.q() && !on_line; ++l) on_line = gv == scale(F, l, v);
    if (!on_line) continue;
    ++fixed_lines_vectors;
    const bool singular = !s.has_quadratic_form() || s.Q(v) == 0;
    if (singular) ++singular_line_vectors;
    if (gv == v && s.has_quadratic_form()) {
      if (s.Q(v) == 0) ++c.ind_pp;
      if (s.Q(v) == 1) ++c.ind_h;
    }
  }
  c.rho_sp = fixed_lines_vectors / (F.q() - 1);
  c.rho = singular_line_vectors / (F.q() - 1);
  if (F.p() == 2 && s.d % 2 == 0) {
    const int n = s.d / 2;
    auto q0 = [&](const FqVector& x) {
      Fq r = 0;
      for (int i = 0; i < n; ++i) r = F.add(r, F.mul(x[i], x[n + i]));
      return r;
    };
    for (const auto& v : vs) {
      auto qv = [&](const FqVector& x) {
        const Fq b = s.B(v, x);
        return F.add(q0(x), F.mul(b, b));
      };
      bool invariant = true;
      std::int64_t zeros = 0;
      for (const auto& x : vs) {
        const Fq val = qv(x);
        if (val == 0) ++zeros;
        if (invariant && qv(g.apply(x)) != val) invariant = false;
      }
      if (!invariant) continue;
      // plus type has q^(2n-1) + q^n - q^(n-1) zeros
      std::int64_t plus_zeros = 1;
      for (int i = 0; i < 2 * n - 1; ++i) plus_zeros *= F.q();
      std::int64_t qn = 1;
      for (int i = 0; i < n - 1; ++i) qn *= F.q();
      plus_zeros += qn * F.q() - qn;
      (zeros == plus_zeros ? c.pi_plus : c.pi_minus) += 1;
    }
  }
  return c;
}

inline std::string key(const FqMatrix& m) {
  std::string k;
  for (Fq x : m.data()) k.push_back(static_cast<char>(x));
  return k;
}

// Closure of a generating set, breadth first.
inline std::vector<FqMatrix> closure(const std::vector<FqMatrix>& gens, std::size_t cap) {
  std::vector<FqMatrix> elems{FqMatrix::identity(gens.at(0).field(), gens[0].rows())};
  std::unordered_set<std::string> seen{key(elems[0])};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : gens) {
      FqMatrix h = elems[i] * s;
      if (seen.insert(key(h)).second) {
        elems.push_back(std::move(h));
        if (elems.size() > cap) return elems;
      }
    }
  }
  return elems;
}

}  // namespace oracle
