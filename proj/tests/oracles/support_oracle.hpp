#pragma once
// Eigenspace maxima by enumerating every element of GF(q^k), k <= d, with a
// standalone elimination routine.

#include <algorithm>
#include <vector>

#include "mckay/gf.hpp"
#include "mckay/matrix.hpp"

namespace oracle {

inline int nullity_plain(const mckay::FiniteField& F, std::vector<std::vector<mckay::Fq>> m) {
  const int n = static_cast<int>(m.size());
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = rank;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    const mckay::Fq inv = F.inv(m[rank][col]);
    for (int i = rank + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      const mckay::Fq c = F.mul(m[i][col], inv);
      for (int j = col; j < n; ++j) m[i][j] = F.sub(m[i][j], F.mul(c, m[rank][j]));
    }
    ++rank;
  }
  return n - rank;
}

// Largest dim ker(g - lambda) over lambda in GF(q^k) for all k <= d. Since g
// has entries in GF(q), ker(g - lambda^q) is the Frobenius image of
// ker(g - lambda), so one lambda per Frobenius orbit suffices; each lambda is
// visited in the field of its exact degree, as the least exponent t with
// lambda = w^t among t, tq, tq^2, ... mod q^k - 1.
inline int max_eigenspace_brute(const mckay::FqMatrix& g) {
  const auto& small = g.field();
  const int d = g.rows();
  const std::uint64_t q = small->q();
  int best = 0;
  for (int k = 1; k <= d; ++k) {
    std::uint64_t order = 1;
    for (int i = 0; i < k; ++i) order *= q;
    if (order > mckay::kMaxFieldOrder) throw std::runtime_error("extension field too large for the oracle");
    const auto large = mckay::FiniteField::get(static_cast<std::uint32_t>(order));
    const mckay::FieldEmbedding emb(small, large);
    std::vector<std::vector<mckay::Fq>> lifted(d, std::vector<mckay::Fq>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) lifted[i][j] = emb(g(i, j));
    const std::uint64_t units = order - 1;
    for (std::uint64_t t = 0; t < units; ++t) {
      // orbit of t under multiplication by q; skip unless t is its least
      // member and the orbit has exactly k elements
      bool representative = true;
      int size = 1;
      for (std::uint64_t u = t * q % units; u != t; u = u * q % units, ++size) {
        if (u < t) {
          representative = false;
          break;
        }
      }
      if (!representative || size != k) continue;
      const mckay::Fq lambda = large->exp(t);
      auto m = lifted;
      for (int i = 0; i < d; ++i) m[i][i] = large->sub(m[i][i], lambda);
      best = std::max(best, nullity_plain(*large, std::move(m)));
    }
  }
  return best;
}

}  // namespace oracle
