#include "mckay/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mckay/errors.hpp"

namespace mckay {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ValidationError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ValidationError("partition parts must be weakly decreasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row_length(int row) const {
  return (row >= 1 && row <= length()) ? parts_[row - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (!parts_.empty()) {
    conj.resize(parts_[0], 0);
    for (int p : parts_) {
      for (int j = 0; j < p; ++j) ++conj[j];
    }
  }
  return Partition(std::move(conj));
}

std::vector<Node> Partition::addable_nodes() const {
  std::vector<Node> out;
  for (int r = 1; r <= length() + 1; ++r) {
    const int c = row_length(r) + 1;
    if (r == 1 || row_length(r - 1) >= c) out.push_back({r, c});
  }
  return out;
}

std::vector<Node> Partition::removable_nodes() const {
  std::vector<Node> out;
  for (int r = 1; r <= length(); ++r) {
    if (row_length(r + 1) < row_length(r)) out.push_back({r, row_length(r)});
  }
  return out;
}

Partition Partition::add_node(Node node) const {
  const auto addable = addable_nodes();
  if (std::find(addable.begin(), addable.end(), node) == addable.end()) {
    throw ValidationError("node is not addable to " + to_string());
  }
  std::vector<int> p = parts_;
  if (node.row > length()) {
    p.push_back(1);
  } else {
    ++p[node.row - 1];
  }
  return Partition(std::move(p));
}

Partition Partition::remove_node(Node node) const {
  const auto removable = removable_nodes();
  if (std::find(removable.begin(), removable.end(), node) == removable.end()) {
    throw ValidationError("node is not removable from " + to_string());
  }
  std::vector<int> p = parts_;
  if (--p[node.row - 1] == 0) p.pop_back();
  return Partition(std::move(p));
}

std::vector<int> Partition::principal_hooks() const {
  const Partition conj = conjugate();
  std::vector<int> hooks;
  for (int i = 1; i <= length() && row_length(i) >= i; ++i) {
    hooks.push_back(row_length(i) - i + conj.row_length(i) - i + 1);
  }
  return hooks;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::string body;
  for (char ch : text) {
    if (ch != '(' && ch != ')' && ch != ' ') body += ch;
  }
  std::vector<int> parts;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw ValidationError("bad partition literal: " + text);
      parts.push_back(v);
    } catch (const std::logic_error&) {
      throw ValidationError("bad partition literal: " + text);
    }
  }
  return Partition(std::move(parts));
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    enumerate_into(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, bool allow_large) {
  if (n < 0) throw ValidationError("partition size must be nonnegative");
  if (n > kMaxPartitionSize && !allow_large) {
    throw ValidationError("partition size " + std::to_string(n) + " exceeds cap " +
                          std::to_string(kMaxPartitionSize));
  }
  std::vector<Partition> out;
  std::vector<int> current;
  enumerate_into(n, n, current, out);
  return out;
}

BigInt partition_count(int n) {
  if (n < 0) return 0;
  std::vector<BigInt> ways(n + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int total = part; total <= n; ++total) ways[total] += ways[total - part];
  }
  return ways[n];
}

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::vector<std::vector<int>> hooks(lambda.length());
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.row_length(i); ++j) {
      hooks[i - 1].push_back(lambda.row_length(i) - j + conj.row_length(j) - i + 1);
    }
  }
  return hooks;
}

BigInt hook_product(const Partition& lambda) {
  BigInt h = 1;
  for (const auto& row : hook_lengths(lambda)) {
    for (int v : row) h *= v;
  }
  return h;
}

BigInt dimension(const Partition& lambda) {
  return exact_div(factorial(lambda.size()), hook_product(lambda), "hook length formula");
}

Partition staircase(int m) {
  if (m < 1) throw ValidationError("staircase needs m >= 1");
  std::vector<int> parts;
  for (int i = m; i >= 1; --i) parts.push_back(i);
  return Partition(std::move(parts));
}

bool staircase_degree_bound_holds(int m) {
  const Partition lambda = staircase(m);
  const BigInt dim = dimension(lambda);
  return ipow(dim, 11) >= ipow(factorial(lambda.size()), 5);
}

bool staircase_step_inequality_holds(int m) {
  if (m < 1) throw ValidationError("step inequality needs m >= 1");
  const int base = m * (m + 1) / 2;
  BigInt lhs = 1;
  for (int i = 1; i <= 2 * m + 3; ++i) lhs *= base + i;
  const BigInt df = double_factorial(2 * m + 3) * double_factorial(2 * m + 1);
  return ipow(lhs, 6) > ipow(df, 11);
}

BranchPartition staircase_branch_partition(int n) {
  if (n < 13) throw ValidationError("branch partition needs n >= 13");
  int m = 1;
  while ((m + 1) * (m + 2) / 2 <= n - 3) ++m;
  std::vector<int> parts{n - 1 - m * (m - 1) / 2};
  for (int i = m - 1; i >= 1; --i) parts.push_back(i);
  Partition mu(std::move(parts));
  if (mu.parts()[0] < m + 2) {
    throw InvariantError("branch partition first row shorter than m+2");
  }
  return {m, std::move(mu)};
}

}  // namespace mckay
