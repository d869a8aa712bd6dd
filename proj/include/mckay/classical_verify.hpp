#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mckay/classical.hpp"

namespace mckay {

// A failing element, kept small enough to serialize and replay.
struct Counterexample {
  std::string check;
  std::size_t index = 0;  // position in the sample or enumeration order
  std::string matrix_hex;
  int support = 0;
  std::vector<std::pair<std::string, std::string>> values;
};

inline constexpr std::size_t kMaxCounterexamples = 20;

// |chi(g)|^3 q^s <= chi(1)^3, i.e. |chi(g)|/chi(1) <= q^(-s/3)
bool ratio_bound_holds(const BigInt& value, const BigInt& degree, std::uint32_t q, int s);

struct IdentityReport {
  std::string space;
  std::uint32_t q = 0;
  int n = 0;
  int epsilon = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  long identity_a_failures = 0;  // rho_Sp - 1 = 1 + alpha + 2 beta + sum gamma + sum delta
  long identity_b_failures = 0;  // pi+ - pi- = eps (1 + alpha + sum gamma - sum delta)
  long rank3_failures = 0;       // 1 + alpha + beta = rho
  long integrality_failures = 0;
  long pi_total_failures = 0;    // pi+ + pi- = q^d(1,g)
  // values at g = 1 and whether they match the degree list
  BigInt alpha1, beta1, sum_gamma1, sum_delta1;
  bool degrees_match = false;
  std::map<int, long> support_histogram;
  std::vector<Counterexample> counterexamples;
  bool pass() const {
    return identity_a_failures == 0 && identity_b_failures == 0 && rank3_failures == 0 && integrality_failures == 0 &&
           pi_total_failures == 0 && degrees_match;
  }
};

// Orthogonal space in characteristic 2 with 2n in {10, 12} and q in {2, 4}.
IdentityReport verify_sp_so_identities(const QuadraticSpace& space, int samples, std::uint64_t seed, int workers = 1);

enum class RatioTarget { rat_sp2, rat_so21, rat_sp_so22 };
std::string to_string(RatioTarget target);
RatioTarget parse_ratio_target(const std::string& text);

struct RatioCharStats {
  std::string name;
  bool aggregate = false;  // sum of constituents: a necessary condition only
  long checked = 0;
  long violations = 0;
};

struct RatioReport {
  std::string proposition;
  std::string space;
  std::uint32_t q = 0;
  int n = 0;
  std::string mode;  // "sampled" or "exhaustive"
  long samples = 0;
  std::uint64_t seed = 0;
  std::vector<RatioCharStats> characters;
  std::map<int, long> support_histogram;
  std::vector<Counterexample> counterexamples;
  // Violations of the individually computable characters.
  long violations() const;
  long aggregate_violations() const;
  bool pass() const { return violations() == 0; }
};

// Checks the hypotheses of the chosen estimate against the space, samples
// (or takes the given elements) and tests every applicable character.
RatioReport ratio_check(const QuadraticSpace& space, RatioTarget target, int samples, std::uint64_t seed,
                        int workers = 1);
RatioReport ratio_check(const QuadraticSpace& space, RatioTarget target, const std::vector<FqMatrix>& elements,
                        int workers = 1);

struct SpExhaustiveReport {
  int n = 0;
  std::uint32_t q = 0;
  std::int64_t order = 0;
  std::int64_t expected_order = 0;
  long parity_failures = 0;
  long pi_total_failures = 0;
  long ratio_violations[2] = {0, 0};
  BigRational inner[2][2];
  std::map<int, long> support_histogram;
  std::vector<Counterexample> counterexamples;
  bool inner_is_identity() const;
  bool pass() const {
    return order == expected_order && parity_failures == 0 && pi_total_failures == 0 && ratio_violations[0] == 0 &&
           ratio_violations[1] == 0 && inner_is_identity();
  }
};

// |Sp_2n(q)| = q^(n^2) prod (q^(2i) - 1)
BigInt sp_order(int n, std::uint32_t q);

// Enumerates Sp_2n(q) (q even) by backtracking over images of the Witt
// basis, split into one chunk per image of e_1.
SpExhaustiveReport sp_exhaustive(int n, std::uint32_t q, int workers = 1);

struct DegreeRow {
  int n = 0;
  std::uint32_t q = 0;
  int epsilon = 0;
  bool rank3 = false;          // 1 + alpha(1) + beta(1) = (q^n-e)(q^(n-1)+e)/(q-1)
  bool beta_at_identity = false;  // explicit formula at g = 1 gives the beta degree
  bool index_h = true;         // even q: 1 + beta + (q-2)/2 gamma + q/2 delta = [G:H]
  bool unitary = true;         // even q: q^n(q^n+1)/2 = beta_n(1) + (q/2)(q^(2n)-1)/(q+1)
  bool ok() const { return rank3 && beta_at_identity && index_h && unitary; }
};

struct DegreeSuiteReport {
  std::vector<DegreeRow> rows;
  bool pass() const;
};

DegreeSuiteReport degree_identity_suite(int n_min, int n_max, const std::vector<std::uint32_t>& qs);

}  // namespace mckay
