#include <doctest.h>

#include <map>
#include <set>

#include "mckay/an_characters.hpp"
#include "mckay/errors.hpp"
#include "an_oracle.hpp"

using namespace mckay;

using oracle::brute_an;
using oracle::BruteAn;
using oracle::label_of;

TEST_CASE("splitting rule") {
  CHECK(splits_in_an(Partition({5})));
  CHECK(splits_in_an(Partition({3, 1})));
  CHECK_FALSE(splits_in_an(Partition({3, 1, 1})));
  CHECK_FALSE(splits_in_an(Partition({2, 2})));
  CHECK(is_even_cycle_type(Partition({2, 2})));
  CHECK_FALSE(is_even_cycle_type(Partition({2, 1})));
}

TEST_CASE("QuadValue") {
  const QuadValue r5 = QuadValue::sqrt_of(5);
  CHECK(r5 * r5 == QuadValue(5));
  CHECK(QuadValue::sqrt_of(-12) == QuadValue(0, 2, -3));
  CHECK(QuadValue::sqrt_of(9) == QuadValue(3));
  CHECK(QuadValue(1, 0, 7).radicand() == 1);
  CHECK(QuadValue(1, 1, -3).conj() == QuadValue(1, -1, -3));
  CHECK(QuadValue(1, 1, 5).conj() == QuadValue(1, 1, 5));
  CHECK_THROWS_AS(QuadValue(0, 1, 12), ValidationError);
  CHECK_THROWS_AS(QuadValue::sqrt_of(2) + QuadValue::sqrt_of(3), InvariantError);
}

TEST_CASE("tables agree with brute-force class algebra, n <= 6") {
  for (int n = 3; n <= 6; ++n) {
    const AnTable t = build_an_table(n);
    const BruteAn b = brute_an(n);
    REQUIRE(b.classes.size() == t.classes.size());
    CHECK(oracle::class_algebra_mismatches(t, b) == 0);
  }
}

TEST_CASE("split values for A_4 and A_5") {
  const AnTable t4 = build_an_table(4);
  const int p = t4.char_index({Partition({2, 2}), SplitTag::plus});
  const int m = t4.char_index({Partition({2, 2}), SplitTag::minus});
  const int c3p = t4.class_index({Partition({3, 1}), SplitTag::plus});
  const int c3m = t4.class_index({Partition({3, 1}), SplitTag::minus});
  const QuadValue w(BigRational(-1, 2), BigRational(1, 2), -3);
  CHECK(t4.values[p][c3p] == w);
  CHECK(t4.values[p][c3m] == w.conj());
  CHECK(t4.values[m][c3p] == w.conj());
  CHECK(t4.values[p][t4.identity_class()] == QuadValue(1));

  const AnTable t5 = build_an_table(5);
  const int q = t5.char_index({Partition({3, 1, 1}), SplitTag::plus});
  const int c5 = t5.class_index({Partition({5}), SplitTag::plus});
  CHECK(t5.values[q][c5] == QuadValue(BigRational(1, 2), BigRational(1, 2), 5));
  std::vector<BigInt> degrees;
  BigInt squares = 0;
  for (const auto& row : t5.values) {
    degrees.push_back(numerator(row[t5.identity_class()].a()));
    squares += degrees.back() * degrees.back();
  }
  CHECK(squares == 60);
  std::multiset<BigInt> ds(degrees.begin(), degrees.end());
  CHECK(ds == std::multiset<BigInt>{1, 3, 3, 4, 5});
}

TEST_CASE("A_n tables, n <= 12") {
  for (int n = 3; n <= 12; ++n) {
    const SnTable sn = build_sn_table(n, {.allow_large = false, .workers = 4});
    const AnTable t = build_an_table(sn);
    BigInt squares = 0;
    for (const auto& row : t.values) {
      const BigInt d = numerator(row[t.identity_class()].a());
      squares += d * d;
    }
    CHECK(squares == factorial(n) / 2);
    // phi+ + phi- restricts chi^lambda classwise
    for (std::size_t i = 0; i < t.chars.size(); ++i) {
      if (t.chars[i].tag != SplitTag::plus) continue;
      const int j = t.char_index({t.chars[i].lambda, SplitTag::minus});
      const int l = sn.char_index(t.chars[i].lambda);
      for (std::size_t c = 0; c < t.classes.size(); ++c) {
        const QuadValue s = t.values[i][c] + t.values[j][c];
        CHECK(s == QuadValue(BigRational(sn.values[l][sn.class_index(t.classes[c].type)])));
      }
    }
  }
}

TEST_CASE("A_n Kronecker products") {
  const AnTable t5 = build_an_table(5);
  const int triv = 0;
  CHECK(t5.chars[triv].lambda == Partition({5}));
  for (int i = 0; i < static_cast<int>(t5.chars.size()); ++i) {
    CHECK(an_kronecker_support(t5, triv, i) == std::vector<std::pair<int, std::int64_t>>{{i, 1}});
  }
  const int p = t5.char_index({Partition({3, 1, 1}), SplitTag::plus});
  const int m = t5.char_index({Partition({3, 1, 1}), SplitTag::minus});
  const int d4 = t5.char_index({Partition({4, 1}), SplitTag::whole});
  const int d5 = t5.char_index({Partition({3, 2}), SplitTag::whole});
  // brute-force sum over the 60 group elements
  const BruteAn b = brute_an(5);
  std::map<int, std::int64_t> want;
  for (std::size_t k = 0; k < t5.chars.size(); ++k) {
    QuadSum s;
    for (const auto& g : b.group) {
      const auto mu = oracle::cycle_type(g);
      AnClass cls{mu, SplitTag::whole};
      if (splits_in_an(mu)) cls = label_of(b, b.class_of.at(g));
      const int c = t5.class_index(cls);
      s.add(t5.values[p][c] * t5.values[m][c] * t5.values[k][c].conj());
    }
    REQUIRE(s.is_rational());
    const BigRational mult = s.rational_part() / 60;
    if (mult != 0) want[static_cast<int>(k)] = static_cast<std::int64_t>(numerator(mult));
  }
  const auto got = an_kronecker_support(t5, p, m);
  CHECK(std::map<int, std::int64_t>(got.begin(), got.end()) == want);
  CHECK(want.count(d4) == 1);
  CHECK(want.count(d5) == 1);

  for (int n = 3; n <= 10; ++n) {
    const AnTable t = build_an_table(n);
    const CharacterTable ct = to_character_table(t);
    const KroneckerKernel kernel(ct);
    // swapping every plus/minus tag on characters and classes
    std::vector<int> char_swap(ct.size());
    for (int i = 0; i < ct.size(); ++i) {
      AnChar c = t.chars[i];
      if (c.tag != SplitTag::whole) c.tag = c.tag == SplitTag::plus ? SplitTag::minus : SplitTag::plus;
      char_swap[i] = t.char_index(c);
    }
    for (int i = 0; i < ct.size(); ++i) {
      for (int j = 0; j < ct.size(); ++j) {
        const auto mij = kernel.decompose(i, j);
        BigInt total = 0;
        for (int k = 0; k < ct.size(); ++k) total += BigInt(mij[k]) * ct.degree(k);
        CHECK(total == ct.degree(i) * ct.degree(j));
        const auto swapped = kernel.decompose(char_swap[i], char_swap[j]);
        for (int k = 0; k < ct.size(); ++k) CHECK(mij[k] == swapped[char_swap[k]]);
      }
    }
  }
}

TEST_CASE("degree bound for split characters") {
  const auto r5 = check_degree_floor(5);
  CHECK(r5.pass);
  REQUIRE(r5.rows.size() == 2);
  CHECK(r5.rows[0].degree == 3);
  CHECK(check_degree_floor(8).pass);
  CHECK(check_degree_floor(13).pass);
  CHECK_THROWS_AS(check_degree_floor(4), ValidationError);
}
