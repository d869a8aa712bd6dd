#pragma once
// Brute-force permutation-group helpers used as independent oracles.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "mckay/partitions.hpp"

namespace oracle {

using Perm = std::vector<int>;

inline std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline mckay::Partition cycle_type(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(n, false);
  std::vector<int> parts;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return mckay::Partition(parts);
}

inline bool is_even(const Perm& p) {
  const auto mu = cycle_type(p);
  return (mu.size() - mu.length()) % 2 == 0;
}

inline int fixed_points(const Perm& p) {
  int f = 0;
  for (std::size_t i = 0; i < p.size(); ++i) f += p[i] == static_cast<int>(i);
  return f;
}

// (p*q)(i) = p(q(i))
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

// (1 2 .. mu_1)(mu_1+1 ..)... in 0-based points.
inline Perm canonical_perm(const mckay::Partition& mu) {
  Perm p(mu.size());
  int start = 0;
  for (int len : mu.parts()) {
    for (int k = 0; k < len; ++k) p[start + k] = start + (k + 1) % len;
    start += len;
  }
  return p;
}

// Conjugacy classes of the subgroup `group` (closed under products).
inline std::vector<std::vector<Perm>> classes_of(const std::vector<Perm>& group) {
  std::set<Perm> done;
  std::vector<std::vector<Perm>> out;
  for (const auto& g : group) {
    if (done.count(g)) continue;
    std::set<Perm> cls;
    for (const auto& h : group) cls.insert(compose(compose(h, g), inverse(h)));
    done.insert(cls.begin(), cls.end());
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

}  // namespace oracle
