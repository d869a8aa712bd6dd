#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mckay/bigint.hpp"

namespace mckay {

inline constexpr int kMaxPartitionSize = 40;

// A cell of a Young diagram, 1-based (English convention).
struct Node {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Node&, const Node&) = default;
};

// Integer partition stored as a weakly decreasing list of positive parts.
// Comparison is lexicographic on the parts, so sorting a list of partitions
// of the same n in descending order gives (n), (n-1,1), ..., (1^n).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // Row length, 0 beyond the last row. `row` is 1-based.
  int row_length(int row) const;

  Partition conjugate() const;
  bool is_self_conjugate() const { return *this == conjugate(); }

  std::vector<Node> addable_nodes() const;
  std::vector<Node> removable_nodes() const;
  Partition add_node(Node node) const;
  Partition remove_node(Node node) const;

  // Diagonal hook lengths h_1 > h_2 > ... > h_k.
  std::vector<int> principal_hooks() const;

  // "(3,2,1)"; the empty partition prints as "()".
  std::string to_string() const;
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// All partitions of n, lexicographically descending. Throws ValidationError
// for n < 0 or n > kMaxPartitionSize unless allow_large is set.
std::vector<Partition> enumerate_partitions(int n, bool allow_large = false);

// Number of partitions of n by the standard dynamic program.
BigInt partition_count(int n);

// hooks[i][j] is the hook length of node (i+1, j+1).
std::vector<std::vector<int>> hook_lengths(const Partition& lambda);
BigInt hook_product(const Partition& lambda);

// Number of standard Young tableaux, n!/H(lambda).
BigInt dimension(const Partition& lambda);

// (m, m-1, ..., 1).
Partition staircase(int m);

// Staircase degree bound: dimension(staircase(m))^11 >= (n!)^5 with
// n = m(m+1)/2, compared exactly.
bool staircase_degree_bound_holds(int m);

// Step inequality used to push the staircase bound from m to m+2:
// prod_{i=1}^{2m+3} (m(m+1)/2 + i) > ((2m+3)!! (2m+1)!!)^(11/6),
// compared as LHS^6 > ((2m+3)!!(2m+1)!!)^11.
bool staircase_step_inequality_holds(int m);

// The partition mu = (n-1-m(m-1)/2, m-1, ..., 2, 1) of n-1 where m is the
// unique integer with m(m+1)/2 <= n-3 < (m+1)(m+2)/2. Every partition
// obtained by adding one node to mu is not self-conjugate.
struct BranchPartition {
  int m = 0;
  Partition mu;
};
BranchPartition staircase_branch_partition(int n);

}  // namespace mckay
