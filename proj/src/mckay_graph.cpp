#include "mckay/mckay_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "mckay/an_characters.hpp"
#include "mckay/errors.hpp"
#include "mckay/parallel.hpp"

namespace mckay {

McKayGraph build_mckay(const ProductTable& products, int alpha) {
  if (alpha < 0 || alpha >= products.size()) throw ValidationError("alpha index out of range");
  McKayGraph g;
  g.alpha = alpha;
  g.out.resize(products.size());
  for (int chi = 0; chi < products.size(); ++chi) g.out[chi] = products.at(alpha, chi).indices();
  return g;
}

std::vector<int> bfs_distances(const McKayGraph& graph, int source) {
  std::vector<int> dist(graph.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : graph.out[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> diameter(const McKayGraph& graph, int workers) {
  std::vector<int> ecc(graph.size(), 0);
  parallel_for(static_cast<std::size_t>(graph.size()), workers, [&](std::size_t s) {
    const auto dist = bfs_distances(graph, static_cast<int>(s));
    ecc[s] = std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; })
                 ? -1
                 : *std::max_element(dist.begin(), dist.end());
  });
  if (std::any_of(ecc.begin(), ecc.end(), [](int e) { return e < 0; })) return std::nullopt;
  return *std::max_element(ecc.begin(), ecc.end());
}

std::optional<int> undirected_diameter(const McKayGraph& graph) {
  McKayGraph sym;
  sym.alpha = graph.alpha;
  sym.out.resize(graph.size());
  for (int v = 0; v < graph.size(); ++v) {
    for (int w : graph.out[v]) {
      sym.out[v].push_back(w);
      sym.out[w].push_back(v);
    }
  }
  for (auto& adj : sym.out) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return diameter(sym);
}

std::optional<int> covering_exponent(const ProductTable& products, int alpha) {
  CharSupport s(products.size());
  s.insert(alpha);
  std::set<std::vector<int>> seen;
  for (int k = 1;; ++k) {
    if (s.full()) return k;
    if (!seen.insert(s.indices()).second) return std::nullopt;
    s = products.multiply(s, alpha);
  }
}

CharSupport product_support(const ProductTable& products, const std::vector<int>& chars) {
  if (chars.empty()) throw ValidationError("product of an empty list");
  CharSupport s(products.size());
  s.insert(chars.front());
  for (std::size_t i = 1; i < chars.size(); ++i) s = products.multiply(s, chars[i]);
  return s;
}

bool is_faithful(const CharacterTable& table, int chi) {
  const QuadValue& deg = table.values[chi][table.identity_class];
  for (int c = 0; c < table.class_count(); ++c) {
    if (c != table.identity_class && table.values[chi][c] == deg) return false;
  }
  return true;
}

McKayRow mckay_row(const CharacterTable& table, const ProductTable& products, int alpha, int workers) {
  const McKayGraph graph = build_mckay(products, alpha);
  McKayRow row;
  row.group = table.group;
  row.n = table.n;
  row.alpha_label = table.char_labels[alpha];
  row.alpha_degree = table.degree(alpha);
  row.diameter = diameter(graph, workers);
  row.undirected_diameter = undirected_diameter(graph);
  row.covering_exponent = covering_exponent(products, alpha);
  const double log_g = std::log(table.order.convert_to<double>());
  const double log_a = std::log(row.alpha_degree.convert_to<double>());
  row.log_ratio = log_a > 0 ? log_g / log_a : 0.0;
  return row;
}

namespace {

// alpha^(100 d) <= order^p, exactly.
bool percent_bound_holds(const BigInt& alpha_degree, int d, const BigInt& order, int p) {
  return ipow(alpha_degree, static_cast<unsigned>(100 * d)) <= ipow(order, static_cast<unsigned>(p));
}

int least_percent(const BigInt& alpha_degree, int d, const BigInt& order) {
  const double guess = 100.0 * d * std::log(alpha_degree.convert_to<double>()) /
                       std::log(order.convert_to<double>());
  int p = std::max(0, static_cast<int>(std::ceil(guess)));
  while (!percent_bound_holds(alpha_degree, d, order, p)) ++p;
  while (p > 0 && percent_bound_holds(alpha_degree, d, order, p - 1)) --p;
  return p;
}

}  // namespace

DiameterRatioReport diameter_ratio_sweep(int n_min, int n_max, int calibrate_max, int workers) {
  if (n_min < 5 || n_max > kSnTableCap || n_min > n_max) throw ValidationError("sweep range must lie in 5..14");
  if (calibrate_max < n_min) throw ValidationError("calibration range is empty");
  DiameterRatioReport report;
  report.n_min = n_min;
  report.n_max = n_max;
  report.calibrate_max = calibrate_max;
  for (int n = n_min; n <= n_max; ++n) {
    const CharacterTable table = to_character_table(build_an_table(n, {.allow_large = false, .workers = workers}));
    const KroneckerKernel kernel(table);
    const ProductTable products(kernel, workers);
    const int trivial = table.trivial_char();
    for (int alpha = 0; alpha < table.size(); ++alpha) {
      if (alpha == trivial) continue;
      DiameterRatioRow row;
      row.row = mckay_row(table, products, alpha, workers);
      row.calibration = n <= calibrate_max;
      if (!row.row.diameter) {
        report.all_finite = false;
        row.within_bound = false;
      } else if (row.calibration) {
        row.percent = least_percent(row.row.alpha_degree, *row.row.diameter, table.order);
        report.c_hat_percent = std::max(report.c_hat_percent, row.percent);
      } else {
        row.percent = least_percent(row.row.alpha_degree, *row.row.diameter, table.order);
      }
      report.rows.push_back(std::move(row));
    }
  }
  for (auto& row : report.rows) {
    if (!row.row.diameter || row.calibration) continue;
    row.within_bound =
        percent_bound_holds(row.row.alpha_degree, *row.row.diameter, factorial(row.row.n) / 2,
                            report.c_hat_percent);
  }
  report.pass = report.all_finite &&
                std::all_of(report.rows.begin(), report.rows.end(), [](const DiameterRatioRow& r) { return r.within_bound; });
  return report;
}

int covering_product_length(int n, int part) {
  if (part == 1) return 8 * n - 11;
  if (part == 2) return 24 * n - 33;
  throw ValidationError("part must be 1 or 2");
}

bool covering_tuple_covers(const CharacterTable& table, const ProductTable& products, int part,
                         const std::vector<int>& tuple) {
  if (tuple.empty()) throw ValidationError("empty tuple");
  std::map<int, int> counts;
  for (int chi : tuple) {
    if (chi < 0 || chi >= table.size()) throw ValidationError("character index out of range");
    if (table.degree(chi) <= 1) throw ValidationError("tuple entries must have degree > 1");
    ++counts[chi];
  }
  if (part == 2) {
    for (auto [chi, c] : counts) {
      if (c < 2) throw ValidationError("every entry must occur at least twice");
    }
  }
  CharSupport s = product_support(products, tuple);
  if (part == 1) s = products.multiply(s, s);
  return s.full();
}

CoveringProductReport covering_product_verify(const CharacterTable& table, const ProductTable& products, int part, int l,
                           int trials, std::uint64_t seed) {
  CoveringProductReport report;
  report.group = table.group;
  report.n = table.n;
  report.part = part;
  report.l = l;
  report.trials = trials;
  report.seed = seed;
  if (l < covering_product_length(table.n, part)) throw ValidationError("l is below the required length");
  std::vector<int> nonlinear;
  for (int chi = 0; chi < table.size(); ++chi) {
    if (table.degree(chi) > 1) nonlinear.push_back(chi);
  }
  auto record = [&](const std::vector<int>& tuple) {
    if (!covering_tuple_covers(table, products, part, tuple)) {
      CoveringFailure f;
      f.tuple = tuple;
      CharSupport s = product_support(products, tuple);
      if (part == 1) s = products.multiply(s, s);
      f.covered = s.count();
      report.failures.push_back(std::move(f));
    }
  };
  for (int chi : nonlinear) {
    record(std::vector<int>(l, chi));
    ++report.single_checked;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, nonlinear.size() - 1);
  for (int t = 0; t < trials; ++t) {
    std::vector<int> tuple;
    if (part == 1) {
      for (int i = 0; i < l; ++i) tuple.push_back(nonlinear[pick(rng)]);
    } else {
      while (static_cast<int>(tuple.size()) + 1 < l) {
        const int chi = nonlinear[pick(rng)];
        tuple.push_back(chi);
        tuple.push_back(chi);
      }
      if (static_cast<int>(tuple.size()) < l) tuple.push_back(tuple.back());
    }
    record(tuple);
  }
  return report;
}

}  // namespace mckay
