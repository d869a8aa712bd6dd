#include "mckay/sn_characters.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "mckay/errors.hpp"
#include "mckay/parallel.hpp"

namespace mckay {

BigInt centralizer_order(const CycleType& mu) {
  std::map<int, int> multiplicity;
  for (int part : mu.parts()) ++multiplicity[part];
  BigInt z = 1;
  for (auto [k, m] : multiplicity) z *= ipow(BigInt(k), m) * factorial(m);
  return z;
}

BigInt class_size(const CycleType& mu) {
  return exact_div(factorial(mu.size()), centralizer_order(mu), "class size");
}

namespace {

// Beta-set (first-column hook lengths) of length len for a partition.
std::vector<int> beta_set(const std::vector<int>& parts) {
  const int len = static_cast<int>(parts.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = parts[i] + (len - 1 - i);
  return beta;  // strictly decreasing
}

std::vector<int> from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int p = beta[i] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

class MnEvaluator {
 public:
  BigInt value(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t pos) {
    if (pos == cycles.size()) return shape.empty() ? BigInt(1) : BigInt(0);
    auto key = std::make_pair(shape, std::vector<int>(cycles.begin() + pos, cycles.end()));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int k = cycles[pos];
    std::vector<int> beta = beta_set(shape);
    BigInt total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const int target = beta[i] - k;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      // leg length = beads strictly between target and beta[i]
      int leg = 0;
      for (int b : beta) {
        if (b > target && b < beta[i]) ++leg;
      }
      std::vector<int> moved = beta;
      moved[i] = target;
      const BigInt sub = value(from_beta_set(std::move(moved)), cycles, pos + 1);
      if (leg % 2) {
        total -= sub;
      } else {
        total += sub;
      }
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo_;
};

}  // namespace

BigInt mn_value(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.size()) {
    throw ValidationError("mn_value: " + lambda.to_string() + " and " + mu.to_string() +
                          " have different sizes");
  }
  thread_local MnEvaluator evaluator;
  return evaluator.value(lambda.parts(), mu.parts(), 0);
}

int SnTable::char_index(const Partition& lambda) const {
  auto it = std::find(chars.begin(), chars.end(), lambda);
  if (it == chars.end()) throw ValidationError("no character " + lambda.to_string());
  return static_cast<int>(it - chars.begin());
}

int SnTable::class_index(const CycleType& mu) const {
  auto it = std::find(classes.begin(), classes.end(), mu);
  if (it == classes.end()) throw ValidationError("no class " + mu.to_string());
  return static_cast<int>(it - classes.begin());
}

SnTable build_sn_table(int n, const TableOptions& options) {
  if (n < 1) throw ValidationError("S_n table needs n >= 1");
  if (n > kSnTableCap && !options.allow_large) {
    throw ValidationError("S_n table size " + std::to_string(n) + " exceeds cap " +
                          std::to_string(kSnTableCap) + " (pass the override flag)");
  }
  SnTable t;
  t.n = n;
  t.chars = enumerate_partitions(n, options.allow_large);
  t.classes = t.chars;
  for (const auto& mu : t.classes) t.class_sizes.push_back(class_size(mu));
  const std::size_t k = t.chars.size();
  t.values.assign(k, std::vector<BigInt>(k));
  parallel_for(k * k, options.workers, [&](std::size_t cell) {
    const std::size_t i = cell / k, j = cell % k;
    t.values[i][j] = mn_value(t.chars[i], t.classes[j]);
  });
  validate_sn_table(t);
  return t;
}

void validate_sn_table(const SnTable& t) {
  const std::size_t k = t.chars.size();
  if (t.classes.size() != k || t.values.size() != k || t.class_sizes.size() != k) {
    throw InvariantError("S_n table shape mismatch");
  }
  const BigInt order = t.order();
  BigInt size_sum = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (t.class_sizes[c] != class_size(t.classes[c])) throw InvariantError("bad class size");
    size_sum += t.class_sizes[c];
  }
  if (size_sum != order) throw InvariantError("class sizes do not sum to n!");
  const int id = t.identity_class();
  for (std::size_t i = 0; i < k; ++i) {
    if (t.values[i][id] != dimension(t.chars[i])) {
      throw InvariantError("degree column disagrees with hook length formula at " +
                           t.chars[i].to_string());
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      BigInt row = 0, col = 0;
      for (std::size_t c = 0; c < k; ++c) {
        row += t.class_sizes[c] * t.values[a][c] * t.values[b][c];
        col += t.values[c][a] * t.values[c][b];
      }
      if (row != (a == b ? order : BigInt(0))) {
        throw InvariantError("row orthogonality fails for " + t.chars[a].to_string() + ", " +
                             t.chars[b].to_string());
      }
      if (col != (a == b ? centralizer_order(t.classes[a]) : BigInt(0))) {
        throw InvariantError("column orthogonality fails for " + t.classes[a].to_string() +
                             ", " + t.classes[b].to_string());
      }
    }
  }
}

std::map<Partition, BigInt> kronecker_support(const SnTable& t, const Partition& a,
                                              const Partition& b) {
  const int ia = t.char_index(a), ib = t.char_index(b);
  const BigInt order = t.order();
  std::map<Partition, BigInt> out;
  for (std::size_t nu = 0; nu < t.chars.size(); ++nu) {
    BigInt sum = 0;
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
      sum += t.class_sizes[c] * t.values[ia][c] * t.values[ib][c] * t.values[nu][c];
    }
    BigInt m = exact_div(sum, order, "Kronecker multiplicity");
    if (m < 0) throw InvariantError("negative Kronecker multiplicity");
    if (m != 0) out.emplace(t.chars[nu], m);
  }
  return out;
}

std::vector<Partition> restrict_to_sn_minus_1(const Partition& lambda) {
  if (lambda.size() < 2) throw ValidationError("restriction needs n >= 2");
  std::vector<Partition> out;
  for (Node node : lambda.removable_nodes()) out.push_back(lambda.remove_node(node));
  return out;
}

std::vector<Partition> induce_from_sn_minus_1(const Partition& mu) {
  std::vector<Partition> out;
  for (Node node : mu.addable_nodes()) out.push_back(mu.add_node(node));
  return out;
}

}  // namespace mckay
