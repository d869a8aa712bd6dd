#include <doctest.h>

#include "mckay/an_characters.hpp"
#include "mckay/errors.hpp"
#include "mckay/mckay_graph.hpp"

using namespace mckay;

namespace {

struct Fixture {
  CharacterTable table;
  KroneckerKernel kernel;
  ProductTable products;
  explicit Fixture(CharacterTable t) : table(std::move(t)), kernel(table), products(kernel) {}
};

Fixture sn(int n) { return Fixture(to_character_table(build_sn_table(n))); }
Fixture an(int n) { return Fixture(to_character_table(build_an_table(n))); }

// Full multiplicity vector of chi_{i_1} ... chi_{i_l}, no support shortcuts.
std::vector<BigInt> exact_product(const Fixture& f, const std::vector<int>& chars) {
  std::vector<BigInt> acc(f.table.size(), 0);
  acc[chars[0]] = 1;
  for (std::size_t i = 1; i < chars.size(); ++i) acc = f.kernel.decompose_weighted(acc, chars[i]);
  return acc;
}

// k-th power distances from trivial via exact multiplicities.
std::vector<int> power_distances(const Fixture& f, int alpha, int max_k) {
  std::vector<int> dist(f.table.size(), -1);
  std::vector<BigInt> acc(f.table.size(), 0);
  acc[f.table.trivial_char()] = 1;
  for (int k = 0; k <= max_k; ++k) {
    for (int i = 0; i < f.table.size(); ++i) {
      if (acc[i] > 0 && dist[i] < 0) dist[i] = k;
    }
    acc = f.kernel.decompose_weighted(acc, alpha);
  }
  return dist;
}

}  // namespace

TEST_CASE("trivial alpha gives self-loops only") {
  auto f = sn(5);
  const auto g = build_mckay(f.products, f.table.trivial_char());
  for (int v = 0; v < g.size(); ++v) CHECK(g.out[v] == std::vector<int>{v});
  CHECK_FALSE(diameter(g).has_value());
  CHECK_FALSE(covering_exponent(f.products, f.table.trivial_char()).has_value());
}

TEST_CASE("S_4 connectivity follows faithfulness") {
  auto f = sn(4);
  const int std4 = f.table.char_index("(3,1)");
  const int sign = f.table.char_index("(1,1,1,1)");
  CHECK(is_faithful(f.table, std4));
  CHECK_FALSE(is_faithful(f.table, sign));
  CHECK(diameter(build_mckay(f.products, std4)).has_value());
  CHECK_FALSE(diameter(build_mckay(f.products, sign)).has_value());
  CHECK_FALSE(covering_exponent(f.products, sign).has_value());
}

TEST_CASE("A_5 with a degree-3 character") {
  auto f = an(5);
  const int alpha = f.table.char_index("(3,1,1)+");
  const auto g = build_mckay(f.products, alpha);
  // brute-force distance matrix from exact multiplicities of alpha^k * chi
  int brute_diam = 0;
  for (int s = 0; s < f.table.size(); ++s) {
    std::vector<BigInt> acc(f.table.size(), 0);
    acc[s] = 1;
    std::vector<int> dist(f.table.size(), -1);
    for (int k = 0; k <= 10; ++k) {
      for (int i = 0; i < f.table.size(); ++i) {
        if (acc[i] > 0 && dist[i] < 0) dist[i] = k;
      }
      acc = f.kernel.decompose_weighted(acc, alpha);
    }
    for (int d : dist) {
      REQUIRE(d >= 0);
      brute_diam = std::max(brute_diam, d);
    }
    CHECK(bfs_distances(g, s) == dist);
  }
  CHECK(diameter(g) == brute_diam);
  CHECK(brute_diam == 3);
  // covering exponent from exact powers alpha^k
  int brute_cover = 0;
  std::vector<BigInt> acc(f.table.size(), 0);
  acc[alpha] = 1;
  for (int k = 1; k <= 10 && brute_cover == 0; ++k) {
    if (std::all_of(acc.begin(), acc.end(), [](const BigInt& m) { return m > 0; })) brute_cover = k;
    acc = f.kernel.decompose_weighted(acc, alpha);
  }
  CHECK(covering_exponent(f.products, alpha) == brute_cover);
  CHECK(brute_cover == 3);
  const auto row = mckay_row(f.table, f.products, alpha);
  CHECK(row.alpha_degree == 3);
  CHECK(row.log_ratio == doctest::Approx(std::log(60.0) / std::log(3.0)));
  CHECK(*row.diameter >= bfs_distances(g, f.table.trivial_char())[f.table.char_index("(3,2)")]);
}

TEST_CASE("distances from trivial match exact power decompositions, n <= 8") {
  for (int n = 3; n <= 8; ++n) {
    for (auto* make : {&sn, &an}) {
      auto f = make(n);
      for (int alpha = 0; alpha < f.table.size(); ++alpha) {
        const auto g = build_mckay(f.products, alpha);
        CHECK(bfs_distances(g, f.table.trivial_char()) == power_distances(f, alpha, f.table.size()));
      }
    }
  }
}

TEST_CASE("finite diameter iff faithful, n <= 10") {
  for (int n = 3; n <= 10; ++n) {
    for (auto* make : {&sn, &an}) {
      auto f = make(n);
      for (int alpha = 0; alpha < f.table.size(); ++alpha) {
        const auto g = build_mckay(f.products, alpha);
        CHECK(diameter(g).has_value() == is_faithful(f.table, alpha));
        // covering needs faithfulness; the converse fails e.g. for linear characters of A_3
        if (!is_faithful(f.table, alpha)) CHECK_FALSE(covering_exponent(f.products, alpha).has_value());
      }
    }
  }
}

TEST_CASE("support closure equals exact product support, n <= 7") {
  for (int n = 3; n <= 7; ++n) {
    for (auto* make : {&sn, &an}) {
      auto f = make(n);
      const int size = f.table.size();
      for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
          for (int c = 0; c < size; c += (n >= 6 ? 3 : 1)) {
            const auto m = exact_product(f, {a, b, c});
            const auto s = product_support(f.products, {a, b, c});
            for (int k = 0; k < size; ++k) CHECK((m[k] > 0) == s.contains(k));
          }
        }
      }
    }
  }
}

TEST_CASE("product support examples") {
  auto f = an(5);
  const int triv = f.table.trivial_char();
  const auto s = product_support(f.products, {triv, triv});
  CHECK(s.indices() == std::vector<int>{triv});
  for (int chi = 0; chi < f.table.size(); ++chi) {
    if (chi == triv) continue;
    CHECK(covering_tuple_covers(f.table, f.products, 1, std::vector<int>(29, chi)));
  }
  CHECK(covering_tuple_covers(f.table, f.products, 2, std::vector<int>(87, f.table.char_index("(4,1)"))));
  CHECK_THROWS_AS(covering_tuple_covers(f.table, f.products, 1, {triv, triv}), ValidationError);
  CHECK_THROWS_AS(covering_tuple_covers(f.table, f.products, 2, {1, 1, 2}), ValidationError);
}

TEST_CASE("covering-product verifier, small cases") {
  auto f = sn(6);
  const auto r1 = covering_product_verify(f.table, f.products, 1, covering_product_length(6, 1), 100, 7);
  CHECK(r1.l == 37);
  CHECK(r1.pass());
  const auto again = covering_product_verify(f.table, f.products, 1, 37, 100, 7);
  CHECK(again.failures.size() == r1.failures.size());
  CHECK_THROWS_AS(covering_product_verify(f.table, f.products, 1, 36, 1, 7), ValidationError);
  auto g = an(5);
  CHECK(covering_product_verify(g.table, g.products, 2, 87, 20, 11).pass());
}

TEST_CASE("diameter ratio sweep on a small range") {
  const auto report = diameter_ratio_sweep(5, 7, 6);
  CHECK(report.all_finite);
  CHECK(report.c_hat_percent > 0);
  for (const auto& row : report.rows) {
    if (!row.calibration) continue;
    // the calibrated constant bounds every calibration row, exactly
    CHECK(row.percent <= report.c_hat_percent);
  }
}
