#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mckay/bigint.hpp"
#include "mckay/quad_value.hpp"
#include "mckay/sn_characters.hpp"

namespace mckay {

// Group-agnostic exact character table. Every value is (u + v*sqrt(D))/2
// with integers u, v and one radicand D per column.
struct CharacterTable {
  std::string group;  // "S" or "A"
  int n = 0;
  BigInt order;
  std::vector<std::string> class_labels;
  std::vector<BigInt> class_sizes;
  std::vector<std::string> char_labels;
  std::vector<std::vector<QuadValue>> values;  // values[char][class]
  int identity_class = 0;

  int size() const { return static_cast<int>(char_labels.size()); }
  int class_count() const { return static_cast<int>(class_labels.size()); }
  int trivial_char() const;
  BigInt degree(int i) const;
  // Index of the complex conjugate character.
  int dual(int i) const;
  int char_index(const std::string& label) const;
};

CharacterTable to_character_table(const SnTable& table);

// Set of character indices.
class CharSupport {
 public:
  CharSupport() = default;
  explicit CharSupport(int universe);

  int universe() const { return universe_; }
  void insert(int i);
  bool contains(int i) const;
  int count() const;
  bool full() const { return count() == universe_; }
  bool empty() const { return count() == 0; }
  std::vector<int> indices() const;
  CharSupport& operator|=(const CharSupport& other);
  friend bool operator==(const CharSupport&, const CharSupport&) = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Exact multiplicities [chi_i chi_j, chi_k]. Sums run in 128-bit integers
// when a worst-case bound allows it and in BigInt otherwise. Irrational parts
// of every sum are required to cancel.
class KroneckerKernel {
 public:
  explicit KroneckerKernel(const CharacterTable& table);

  int size() const { return chars_; }
  bool uses_wide_path() const { return !narrow_; }

  // Multiplicity of every chi_k in chi_i * chi_j.
  std::vector<std::int64_t> decompose(int i, int j) const;
  CharSupport product_support(int i, int j) const;
  // Multiplicities of sum_a coeffs[a] chi_a times chi_j, with coeffs >= 0.
  std::vector<BigInt> decompose_weighted(const std::vector<BigInt>& coeffs, int j) const;

 private:
  template <typename Acc>
  std::vector<std::int64_t> decompose_impl(int i, int j) const;

  int chars_ = 0;
  int classes_ = 0;
  std::vector<BigInt> weights_;                 // class sizes
  std::vector<std::int64_t> radicand_;          // per class
  std::vector<int> radicand_slot_;              // per class, -1 if rational
  int slots_ = 0;
  std::vector<std::int64_t> u_, v_;             // [char * classes + class]
  BigInt order_;
  bool narrow_ = true;
};

// support(chi_i * chi_j) for all pairs, symmetric.
class ProductTable {
 public:
  ProductTable(const KroneckerKernel& kernel, int workers = 1);
  const CharSupport& at(int i, int j) const { return cells_[i * size_ + j]; }
  int size() const { return size_; }
  // support(S * chi_j) = union over psi in S of support(psi * chi_j).
  CharSupport multiply(const CharSupport& s, int j) const;
  CharSupport multiply(const CharSupport& s, const CharSupport& t) const;

 private:
  int size_ = 0;
  std::vector<CharSupport> cells_;
};

}  // namespace mckay

namespace mckay {

// Exact checks shared by S_n and A_n tables: integral degrees, sum of
// squared degrees equal to the group order, row and column orthogonality.
void validate_character_table(const CharacterTable& table);

}  // namespace mckay
