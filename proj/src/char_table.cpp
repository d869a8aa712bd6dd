#include "mckay/char_table.hpp"

#include <algorithm>
#include <bit>

#include "mckay/errors.hpp"
#include "mckay/parallel.hpp"

namespace mckay {

int CharacterTable::trivial_char() const {
  for (int i = 0; i < size(); ++i) {
    if (std::all_of(values[i].begin(), values[i].end(), [](const QuadValue& x) { return x == QuadValue(1); }))
      return i;
  }
  throw InvariantError("table has no trivial character");
}

BigInt CharacterTable::degree(int i) const {
  const QuadValue& x = values.at(i).at(identity_class);
  if (!x.is_rational() || denominator(x.a()) != 1) throw InvariantError("non-integral degree");
  return numerator(x.a());
}

int CharacterTable::dual(int i) const {
  std::vector<QuadValue> row;
  row.reserve(values[i].size());
  for (const auto& x : values[i]) row.push_back(x.conj());
  for (int k = 0; k < size(); ++k) {
    if (values[k] == row) return k;
  }
  throw InvariantError("conjugate of " + char_labels[i] + " is not in the table");
}

int CharacterTable::char_index(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (char_labels[i] == label) return i;
  }
  throw ValidationError("unknown character label " + label);
}

CharacterTable to_character_table(const SnTable& table) {
  CharacterTable out;
  out.group = "S";
  out.n = table.n;
  out.order = table.order();
  for (const auto& mu : table.classes) out.class_labels.push_back(mu.to_string());
  out.class_sizes = table.class_sizes;
  for (const auto& lambda : table.chars) out.char_labels.push_back(lambda.to_string());
  for (const auto& row : table.values) {
    std::vector<QuadValue> r;
    r.reserve(row.size());
    for (const auto& x : row) r.emplace_back(BigRational(x));
    out.values.push_back(std::move(r));
  }
  out.identity_class = table.identity_class();
  return out;
}

CharSupport::CharSupport(int universe)
    : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

void CharSupport::insert(int i) {
  if (i < 0 || i >= universe_) throw InvariantError("support index out of range");
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

bool CharSupport::contains(int i) const {
  return i >= 0 && i < universe_ && ((words_[i / 64] >> (i % 64)) & 1U);
}

int CharSupport::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::vector<int> CharSupport::indices() const {
  std::vector<int> out;
  for (int i = 0; i < universe_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

CharSupport& CharSupport::operator|=(const CharSupport& other) {
  if (other.universe_ != universe_) throw InvariantError("support universes differ");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

namespace {

std::int64_t twice_as_int(const BigRational& x) {
  const BigRational t = x * 2;
  if (denominator(t) != 1) throw InvariantError("character value outside (1/2)Z[sqrt D]");
  return to_int64(numerator(t));
}

template <typename Acc>
Acc acc_from(std::int64_t x) {
  return static_cast<Acc>(x);
}

template <typename Acc>
Acc acc_from(const BigInt& x) {
  if constexpr (std::is_same_v<Acc, BigInt>) {
    return x;
  } else {
    return static_cast<Acc>(to_int64(x));
  }
}

template <typename Acc>
bool acc_is_zero(const Acc& x) {
  return x == 0;
}

}  // namespace

KroneckerKernel::KroneckerKernel(const CharacterTable& table)
    : chars_(table.size()), classes_(table.class_count()), weights_(table.class_sizes),
      radicand_(classes_, 1), radicand_slot_(classes_, -1), order_(table.order) {
  u_.assign(static_cast<std::size_t>(chars_) * classes_, 0);
  v_.assign(static_cast<std::size_t>(chars_) * classes_, 0);
  std::vector<std::int64_t> slot_radicands;
  std::int64_t umax = 0, dmax = 1;
  for (int c = 0; c < classes_; ++c) {
    for (int i = 0; i < chars_; ++i) {
      const QuadValue& x = table.values[i][c];
      if (x.is_rational()) continue;
      if (radicand_[c] != 1 && radicand_[c] != x.radicand())
        throw InvariantError("column " + table.class_labels[c] + " mixes radicands");
      radicand_[c] = x.radicand();
    }
    if (radicand_[c] != 1) {
      auto it = std::find(slot_radicands.begin(), slot_radicands.end(), radicand_[c]);
      radicand_slot_[c] = static_cast<int>(it - slot_radicands.begin());
      if (it == slot_radicands.end()) slot_radicands.push_back(radicand_[c]);
      dmax = std::max<std::int64_t>(dmax, radicand_[c] < 0 ? -radicand_[c] : radicand_[c]);
    }
    for (int i = 0; i < chars_; ++i) {
      const QuadValue& x = table.values[i][c];
      const std::size_t at = static_cast<std::size_t>(i) * classes_ + c;
      u_[at] = twice_as_int(x.a());
      v_[at] = twice_as_int(x.b());
      umax = std::max({umax, u_[at] < 0 ? -u_[at] : u_[at], v_[at] < 0 ? -v_[at] : v_[at]});
    }
  }
  slots_ = static_cast<int>(slot_radicands.size());

  BigInt kmax = 0;
  for (const auto& w : weights_) kmax = std::max(kmax, w);
  const BigInt u = umax;
  const BigInt bound = BigInt(classes_) * kmax * 3 * u * u * u * (1 + BigInt(dmax)) * (1 + BigInt(dmax));
  narrow_ = bound < (BigInt(1) << 120) && kmax < (BigInt(1) << 62) && order_ < (BigInt(1) << 58);
}

template <typename Acc>
std::vector<std::int64_t> KroneckerKernel::decompose_impl(int i, int j) const {
  std::vector<Acc> a(classes_), b(classes_), w(classes_);
  for (int c = 0; c < classes_; ++c) {
    const Acc ui = acc_from<Acc>(u_[i * classes_ + c]), vi = acc_from<Acc>(v_[i * classes_ + c]);
    const Acc uj = acc_from<Acc>(u_[j * classes_ + c]), vj = acc_from<Acc>(v_[j * classes_ + c]);
    const Acc d = acc_from<Acc>(radicand_[c]);
    a[c] = ui * uj + vi * vj * d;
    b[c] = ui * vj + uj * vi;
    w[c] = acc_from<Acc>(weights_[c]);
  }
  const Acc den = acc_from<Acc>(order_) * 8;
  std::vector<std::int64_t> out(chars_, 0);
  std::vector<Acc> irrational(slots_);
  for (int k = 0; k < chars_; ++k) {
    Acc rational = 0;
    std::fill(irrational.begin(), irrational.end(), Acc(0));
    for (int c = 0; c < classes_; ++c) {
      const Acc uk = acc_from<Acc>(u_[k * classes_ + c]);
      // conj flips the sqrt part only for imaginary radicands
      const Acc vk = acc_from<Acc>(radicand_[c] < 0 ? -v_[k * classes_ + c] : v_[k * classes_ + c]);
      const Acc d = acc_from<Acc>(radicand_[c]);
      rational += w[c] * (a[c] * uk + b[c] * vk * d);
      if (radicand_slot_[c] >= 0) irrational[radicand_slot_[c]] += w[c] * (a[c] * vk + b[c] * uk);
    }
    for (const auto& r : irrational) {
      if (!acc_is_zero(r)) throw InvariantError("irrational part of a multiplicity does not cancel");
    }
    if (rational % den != 0) throw InvariantError("non-integral multiplicity");
    const Acc m = rational / den;
    if (m < 0) throw InvariantError("negative multiplicity in a product of characters");
    if constexpr (std::is_same_v<Acc, BigInt>) {
      out[k] = to_int64(m);
    } else {
      out[k] = static_cast<std::int64_t>(m);
    }
  }
  return out;
}

std::vector<std::int64_t> KroneckerKernel::decompose(int i, int j) const {
  if (i < 0 || j < 0 || i >= chars_ || j >= chars_) throw ValidationError("character index out of range");
  return narrow_ ? decompose_impl<__int128>(i, j) : decompose_impl<BigInt>(i, j);
}

CharSupport KroneckerKernel::product_support(int i, int j) const {
  CharSupport s(chars_);
  const auto m = decompose(i, j);
  for (int k = 0; k < chars_; ++k) {
    if (m[k] > 0) s.insert(k);
  }
  return s;
}

std::vector<BigInt> KroneckerKernel::decompose_weighted(const std::vector<BigInt>& coeffs, int j) const {
  if (static_cast<int>(coeffs.size()) != chars_) throw ValidationError("coefficient vector has wrong length");
  std::vector<BigInt> a(classes_), b(classes_);
  for (int c = 0; c < classes_; ++c) {
    BigInt cu = 0, cv = 0;
    for (int i = 0; i < chars_; ++i) {
      if (coeffs[i] == 0) continue;
      cu += coeffs[i] * u_[i * classes_ + c];
      cv += coeffs[i] * v_[i * classes_ + c];
    }
    const BigInt uj = u_[j * classes_ + c], vj = v_[j * classes_ + c];
    a[c] = cu * uj + cv * vj * radicand_[c];
    b[c] = cu * vj + uj * cv;
  }
  const BigInt den = order_ * 8;
  std::vector<BigInt> out(chars_);
  for (int k = 0; k < chars_; ++k) {
    BigInt rational = 0;
    std::vector<BigInt> irrational(slots_, 0);
    for (int c = 0; c < classes_; ++c) {
      const BigInt uk = u_[k * classes_ + c];
      const BigInt vk = radicand_[c] < 0 ? -v_[k * classes_ + c] : v_[k * classes_ + c];
      rational += weights_[c] * (a[c] * uk + b[c] * vk * radicand_[c]);
      if (radicand_slot_[c] >= 0) irrational[radicand_slot_[c]] += weights_[c] * (a[c] * vk + b[c] * uk);
    }
    for (const auto& r : irrational) {
      if (r != 0) throw InvariantError("irrational part of a multiplicity does not cancel");
    }
    out[k] = exact_div(rational, den, "weighted multiplicity");
    if (out[k] < 0) throw InvariantError("negative multiplicity in a product of characters");
  }
  return out;
}

ProductTable::ProductTable(const KroneckerKernel& kernel, int workers) : size_(kernel.size()) {
  cells_.assign(static_cast<std::size_t>(size_) * size_, CharSupport(size_));
  parallel_for(static_cast<std::size_t>(size_), workers, [&](std::size_t ii) {
    const int i = static_cast<int>(ii);
    for (int j = i; j < size_; ++j) {
      cells_[i * size_ + j] = kernel.product_support(i, j);
    }
  });
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < i; ++j) cells_[i * size_ + j] = cells_[j * size_ + i];
  }
}

CharSupport ProductTable::multiply(const CharSupport& s, int j) const {
  CharSupport out(size_);
  for (int psi : s.indices()) out |= at(psi, j);
  return out;
}

CharSupport ProductTable::multiply(const CharSupport& s, const CharSupport& t) const {
  CharSupport out(size_);
  for (int chi : t.indices()) out |= multiply(s, chi);
  return out;
}

}  // namespace mckay

namespace mckay {

void validate_character_table(const CharacterTable& table) {
  const int chars = table.size();
  const int classes = table.class_count();
  if (chars != classes) throw InvariantError("table is not square");
  BigInt total = 0;
  for (const auto& k : table.class_sizes) total += k;
  if (total != table.order) throw InvariantError("class sizes do not sum to the group order");
  BigInt squares = 0;
  for (int i = 0; i < chars; ++i) {
    const BigInt d = table.degree(i);
    if (d <= 0) throw InvariantError("nonpositive degree for " + table.char_labels[i]);
    squares += d * d;
  }
  if (squares != table.order) throw InvariantError("squared degrees do not sum to the group order");

  std::vector<std::vector<QuadValue>> conj(chars);
  for (int i = 0; i < chars; ++i) {
    for (const auto& x : table.values[i]) conj[i].push_back(x.conj());
  }
  for (int i = 0; i < chars; ++i) {
    for (int j = i; j < chars; ++j) {
      QuadSum sum;
      for (int c = 0; c < classes; ++c) {
        sum.add(table.values[i][c] * conj[j][c] * QuadValue(BigRational(table.class_sizes[c])));
      }
      const BigRational want = i == j ? BigRational(table.order) : BigRational(0);
      if (!sum.is_rational() || sum.rational_part() != want)
        throw InvariantError("row orthogonality fails for " + table.char_labels[i] + ", " + table.char_labels[j]);
    }
  }
  for (int c = 0; c < classes; ++c) {
    const BigRational centralizer = BigRational(table.order) / BigRational(table.class_sizes[c]);
    for (int e = c; e < classes; ++e) {
      QuadSum sum;
      for (int i = 0; i < chars; ++i) sum.add(table.values[i][c] * conj[i][e]);
      const BigRational want = c == e ? centralizer : BigRational(0);
      if (!sum.is_rational() || sum.rational_part() != want)
        throw InvariantError("column orthogonality fails for " + table.class_labels[c] + ", " +
                             table.class_labels[e]);
    }
  }
}

}  // namespace mckay
