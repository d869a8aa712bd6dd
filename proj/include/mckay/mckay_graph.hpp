#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mckay/char_table.hpp"

namespace mckay {

// Edge chi -> psi iff psi is a constituent of alpha * chi.
struct McKayGraph {
  int alpha = 0;
  std::vector<std::vector<int>> out;  // sorted out-neighbours
  int size() const { return static_cast<int>(out.size()); }
};

McKayGraph build_mckay(const ProductTable& products, int alpha);

// Distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const McKayGraph& graph, int source);

// Max over ordered pairs; nullopt when the graph is not strongly connected.
std::optional<int> diameter(const McKayGraph& graph, int workers = 1);
// Same with every edge read in both directions.
std::optional<int> undirected_diameter(const McKayGraph& graph);

// Least k with support(alpha^k) = Irr(G); nullopt when the support sequence
// becomes periodic without covering.
std::optional<int> covering_exponent(const ProductTable& products, int alpha);

// support(chi_1 ... chi_l), left to right.
CharSupport product_support(const ProductTable& products, const std::vector<int>& chars);

// A character is faithful iff it differs from its degree off the identity.
bool is_faithful(const CharacterTable& table, int chi);

struct McKayRow {
  std::string group;
  int n = 0;
  std::string alpha_label;
  BigInt alpha_degree;
  std::optional<int> diameter;
  std::optional<int> undirected_diameter;
  std::optional<int> covering_exponent;
  double log_ratio = 0;  // log|G| / log alpha(1); display only
};

McKayRow mckay_row(const CharacterTable& table, const ProductTable& products, int alpha, int workers = 1);

struct DiameterRatioRow {
  McKayRow row;
  // Least p with alpha(1)^(100*diam) <= |G|^p, i.e. diam <= (p/100) log|G|/log alpha(1).
  int percent = 0;
  bool calibration = false;
  bool within_bound = true;
};

struct DiameterRatioReport {
  int n_min = 0, n_max = 0, calibrate_max = 0;
  int c_hat_percent = 0;  // the constant fixed on calibration rows, in hundredths
  bool all_finite = true;
  bool pass = true;
  std::vector<DiameterRatioRow> rows;
};

// Phase one fixes C-hat on n <= calibrate_max, phase two asserts it on the rest.
DiameterRatioReport diameter_ratio_sweep(int n_min, int n_max, int calibrate_max, int workers = 1);

struct CoveringFailure {
  std::vector<int> tuple;
  int covered = 0;
};

struct CoveringProductReport {
  std::string group;
  int n = 0;
  int part = 1;  // 1: squared product of l >= 8n-11 factors; 2: doubled entries, l >= 24n-33
  int l = 0;
  int single_checked = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<CoveringFailure> failures;
  bool pass() const { return failures.empty(); }
};

int covering_product_length(int n, int part);

// Runs every constant tuple (chi, ..., chi) with chi(1) > 1 and `trials`
// seeded random tuples of non-linear characters.
CoveringProductReport covering_product_verify(const CharacterTable& table, const ProductTable& products, int part, int l,
                           int trials, std::uint64_t seed);

// Checks one explicit tuple; throws ValidationError for linear entries.
bool covering_tuple_covers(const CharacterTable& table, const ProductTable& products, int part,
                         const std::vector<int>& tuple);

}  // namespace mckay
