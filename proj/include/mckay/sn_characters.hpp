#pragma once

#include <map>
#include <vector>

#include "mckay/bigint.hpp"
#include "mckay/partitions.hpp"

namespace mckay {

// Cycle types label conjugacy classes of S_n; they are partitions of n.
using CycleType = Partition;

inline constexpr int kSnTableCap = 14;

// prod_k k^{m_k} m_k! over part sizes k with multiplicity m_k.
BigInt centralizer_order(const CycleType& mu);
BigInt class_size(const CycleType& mu);

// chi^lambda(mu) by the Murnaghan-Nakayama rule: strip the largest part of mu
// as a rim hook in every possible way, with sign (-1)^(leg length).
// Memoized per thread on (shape, remaining cycle type).
BigInt mn_value(const Partition& lambda, const CycleType& mu);

struct SnTable {
  int n = 0;
  std::vector<CycleType> classes;   // lexicographically descending
  std::vector<BigInt> class_sizes;
  std::vector<Partition> chars;     // lexicographically descending
  std::vector<std::vector<BigInt>> values;  // values[char][class]

  int char_index(const Partition& lambda) const;
  int class_index(const CycleType& mu) const;
  int identity_class() const { return static_cast<int>(classes.size()) - 1; }
  BigInt order() const { return factorial(n); }
};

struct TableOptions {
  bool allow_large = false;  // lift the n <= 14 cap
  int workers = 1;
};

// Complete table; both orthogonality relations are checked before returning.
SnTable build_sn_table(int n, const TableOptions& options = {});

// Throws InvariantError on any failed orthogonality or degree relation.
void validate_sn_table(const SnTable& table);

// Constituent multiplicities of chi^a * chi^b, nonzero entries only.
std::map<Partition, BigInt> kronecker_support(const SnTable& table, const Partition& a,
                                              const Partition& b);

// Branching: remove (resp. add) one node in every possible way.
std::vector<Partition> restrict_to_sn_minus_1(const Partition& lambda);
std::vector<Partition> induce_from_sn_minus_1(const Partition& mu);

}  // namespace mckay
