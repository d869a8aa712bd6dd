#include "mckay/an_characters.hpp"

#include <algorithm>
#include <set>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

const char* tag_suffix(SplitTag tag) {
  switch (tag) {
    case SplitTag::plus: return "+";
    case SplitTag::minus: return "-";
    default: return "";
  }
}

}  // namespace

std::string AnClass::to_string() const { return type.to_string() + tag_suffix(tag); }
std::string AnChar::to_string() const { return lambda.to_string() + tag_suffix(tag); }

bool is_even_cycle_type(const CycleType& mu) { return (mu.size() - mu.length()) % 2 == 0; }

bool splits_in_an(const CycleType& mu) {
  const auto& p = mu.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] % 2 == 0) return false;
    if (i > 0 && p[i] == p[i - 1]) return false;
  }
  return true;
}

int AnTable::char_index(const AnChar& chi) const {
  auto it = std::find(chars.begin(), chars.end(), chi);
  if (it == chars.end()) throw ValidationError("no A_n character " + chi.to_string());
  return static_cast<int>(it - chars.begin());
}

int AnTable::class_index(const AnClass& c) const {
  auto it = std::find(classes.begin(), classes.end(), c);
  if (it == classes.end()) throw ValidationError("no A_n class " + c.to_string());
  return static_cast<int>(it - classes.begin());
}

AnTable build_an_table(int n, const TableOptions& options) {
  if (n < 3) throw ValidationError("A_n tables need n >= 3");
  return build_an_table(build_sn_table(n, options));
}

AnTable build_an_table(const SnTable& sn) {
  AnTable out;
  out.n = sn.n;
  if (sn.n < 3) throw ValidationError("A_n tables need n >= 3");

  std::vector<int> source_class;  // A_n class -> S_n class
  for (std::size_t c = 0; c < sn.classes.size(); ++c) {
    const auto& mu = sn.classes[c];
    if (!is_even_cycle_type(mu)) continue;
    if (splits_in_an(mu)) {
      for (auto tag : {SplitTag::plus, SplitTag::minus}) {
        out.classes.push_back({mu, tag});
        out.class_sizes.push_back(sn.class_sizes[c] / 2);
        source_class.push_back(static_cast<int>(c));
      }
    } else {
      out.classes.push_back({mu, SplitTag::whole});
      out.class_sizes.push_back(sn.class_sizes[c]);
      source_class.push_back(static_cast<int>(c));
    }
  }

  for (std::size_t l = 0; l < sn.chars.size(); ++l) {
    const Partition& lambda = sn.chars[l];
    const Partition lambda_t = lambda.conjugate();
    if (lambda < lambda_t) continue;  // represented by its conjugate
    if (lambda != lambda_t) {
      out.chars.push_back({lambda, SplitTag::whole});
      std::vector<QuadValue> row;
      for (int c : source_class) row.emplace_back(BigRational(sn.values[l][c]));
      out.values.push_back(std::move(row));
      continue;
    }
    const std::vector<int> hooks = lambda.principal_hooks();
    const CycleType hook_type(hooks);
    const int k = static_cast<int>(hooks.size());
    const int eps = ((sn.n - k) / 2) % 2 == 0 ? 1 : -1;
    std::int64_t prod = eps;
    for (int h : hooks) prod *= h;
    const QuadValue root = QuadValue::sqrt_of(prod);

    for (auto tag : {SplitTag::plus, SplitTag::minus}) {
      out.chars.push_back({lambda, tag});
      std::vector<QuadValue> row;
      for (std::size_t a = 0; a < out.classes.size(); ++a) {
        const AnClass& cls = out.classes[a];
        const BigInt& chi = sn.values[l][source_class[a]];
        if (cls.type == hook_type) {
          if (chi != eps) throw InvariantError("principal-hook value differs from eps for " + lambda.to_string());
          const bool same = (tag == SplitTag::plus) == (cls.tag == SplitTag::plus);
          const QuadValue signed_root = same ? root : -root;
          row.push_back((QuadValue(eps) + signed_root) / BigRational(2));
        } else {
          row.emplace_back(BigRational(chi, 2));
        }
      }
      out.values.push_back(std::move(row));
    }
  }
  validate_an_table(out);
  return out;
}

CharacterTable to_character_table(const AnTable& table) {
  CharacterTable out;
  out.group = "A";
  out.n = table.n;
  out.order = table.order();
  for (const auto& c : table.classes) out.class_labels.push_back(c.to_string());
  out.class_sizes = table.class_sizes;
  for (const auto& chi : table.chars) out.char_labels.push_back(chi.to_string());
  out.values = table.values;
  out.identity_class = table.identity_class();
  return out;
}

void validate_an_table(const AnTable& table) {
  if (table.chars.size() != table.classes.size()) throw InvariantError("A_n table is not square");
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    const auto& cls = table.classes[c];
    if (!is_even_cycle_type(cls.type)) throw InvariantError("odd cycle type in A_n table");
    if ((cls.tag != SplitTag::whole) != splits_in_an(cls.type))
      throw InvariantError("split tag inconsistent for " + cls.to_string());
  }
  for (std::size_t i = 0; i < table.chars.size(); ++i) {
    const auto& chi = table.chars[i];
    const BigInt full = dimension(chi.lambda);
    const BigInt want = chi.tag == SplitTag::whole ? full : full / 2;
    if (table.values[i][table.identity_class()] != QuadValue(BigRational(want)))
      throw InvariantError("degree mismatch for " + chi.to_string());
  }
  validate_character_table(to_character_table(table));
}

std::vector<std::pair<int, std::int64_t>> an_kronecker_support(const AnTable& table, int i, int j) {
  const KroneckerKernel kernel(to_character_table(table));
  const auto m = kernel.decompose(i, j);
  std::vector<std::pair<int, std::int64_t>> out;
  for (int k = 0; k < kernel.size(); ++k) {
    if (m[k] != 0) out.emplace_back(k, m[k]);
  }
  return out;
}

DegreeFloorReport check_degree_floor(const AnTable& table) {
  DegreeFloorReport report;
  report.n = table.n;
  const BigInt rhs = ipow(BigInt(2), static_cast<unsigned>(std::max(table.n - 5, 0)));
  for (std::size_t i = 0; i < table.chars.size(); ++i) {
    if (table.chars[i].tag == SplitTag::whole) continue;
    DegreeFloorRow row;
    row.chi = table.chars[i];
    row.degree = numerator(table.values[i][table.identity_class()].a());
    row.holds = ipow(row.degree, 4) >= rhs;
    report.pass = report.pass && row.holds;
    report.rows.push_back(std::move(row));
  }
  return report;
}

DegreeFloorReport check_degree_floor(int n, const TableOptions& options) {
  if (n < 5) throw ValidationError("degree bound check needs n >= 5");
  return check_degree_floor(build_an_table(n, options));
}

}  // namespace mckay
