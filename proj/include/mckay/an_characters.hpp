#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mckay/char_table.hpp"
#include "mckay/quad_value.hpp"
#include "mckay/sn_characters.hpp"

namespace mckay {

enum class SplitTag { whole, plus, minus };

// An A_n class: an even cycle type, tagged plus/minus when it splits. The
// plus class contains the permutation (1 2 .. mu_1)(mu_1+1 ..)...
struct AnClass {
  CycleType type;
  SplitTag tag = SplitTag::whole;
  std::string to_string() const;
  friend bool operator==(const AnClass&, const AnClass&) = default;
};

// An irreducible of A_n: the larger of {lambda, lambda'} when they differ,
// or one of the two constituents of a self-conjugate lambda. The plus
// constituent takes (eps + sqrt(eps*h_1...h_k))/2 on the plus class of
// cycle type (h_1, ..., h_k).
struct AnChar {
  Partition lambda;
  SplitTag tag = SplitTag::whole;
  std::string to_string() const;
  friend bool operator==(const AnChar&, const AnChar&) = default;
};

bool is_even_cycle_type(const CycleType& mu);
// All parts odd and distinct.
bool splits_in_an(const CycleType& mu);

struct AnTable {
  int n = 0;
  std::vector<AnClass> classes;
  std::vector<BigInt> class_sizes;
  std::vector<AnChar> chars;
  std::vector<std::vector<QuadValue>> values;  // values[char][class]

  BigInt order() const { return factorial(n) / 2; }
  int identity_class() const { return static_cast<int>(classes.size()) - 1; }
  int char_index(const AnChar& chi) const;
  int class_index(const AnClass& c) const;
};

AnTable build_an_table(int n, const TableOptions& options = {});
AnTable build_an_table(const SnTable& sn);

// Degrees, both orthogonality relations, and sum of squared degrees.
void validate_an_table(const AnTable& table);

CharacterTable to_character_table(const AnTable& table);

// Nonzero multiplicities of chi_i * chi_j as (index, multiplicity).
std::vector<std::pair<int, std::int64_t>> an_kronecker_support(const AnTable& table, int i, int j);

struct DegreeFloorRow {
  AnChar chi;
  BigInt degree;
  bool holds = false;  // degree^4 >= 2^(n-5)
};

struct DegreeFloorReport {
  int n = 0;
  std::vector<DegreeFloorRow> rows;  // split characters only
  bool pass = true;
};

DegreeFloorReport check_degree_floor(const AnTable& table);
DegreeFloorReport check_degree_floor(int n, const TableOptions& options = {});

}  // namespace mckay
