#include "mckay/classical.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "mckay/errors.hpp"

namespace mckay {

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::symplectic: return "sp";
    case SpaceKind::orthogonal_plus: return "o+";
    case SpaceKind::orthogonal_minus: return "o-";
    case SpaceKind::orthogonal_odd: return "o";
  }
  return "?";
}

SpaceKind parse_space_kind(const std::string& text) {
  if (text == "sp") return SpaceKind::symplectic;
  if (text == "o+" || text == "omega+" || text == "plus") return SpaceKind::orthogonal_plus;
  if (text == "o-" || text == "omega-" || text == "minus") return SpaceKind::orthogonal_minus;
  if (text == "o" || text == "omega" || text == "odd") return SpaceKind::orthogonal_odd;
  throw ValidationError("unknown space kind '" + text + "' (expected sp, o+, o-, o)");
}

int QuadraticSpace::epsilon() const {
  if (kind == SpaceKind::orthogonal_plus) return 1;
  if (kind == SpaceKind::orthogonal_minus) return -1;
  return 0;
}

Fq QuadraticSpace::B(const FqVector& x, const FqVector& y) const {
  const FiniteField& F = *field;
  Fq s = 0;
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    Fq t = 0;
    for (int j = 0; j < d; ++j) t = F.add(t, F.mul(gram(i, j), y[j]));
    s = F.add(s, F.mul(x[i], t));
  }
  return s;
}

Fq QuadraticSpace::Q(const FqVector& x) const {
  if (!has_quadratic_form()) throw ValidationError("symplectic space has no quadratic form");
  const FiniteField& F = *field;
  Fq s = 0;
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (int j = i; j < d; ++j) {
      const Fq c = quad(i, j);
      if (c != 0 && x[j] != 0) s = F.add(s, F.mul(c, F.mul(x[i], x[j])));
    }
  }
  return s;
}

FqVector QuadraticSpace::basis_vector(int i) const {
  FqVector v(d, 0);
  v.at(i) = 1;
  return v;
}

std::string QuadraticSpace::name() const {
  const std::string qs = std::to_string(field->q());
  switch (kind) {
    case SpaceKind::symplectic: return "Sp_" + std::to_string(d) + "(" + qs + ")";
    case SpaceKind::orthogonal_plus: return "O+_" + std::to_string(d) + "(" + qs + ")";
    case SpaceKind::orthogonal_minus: return "O-_" + std::to_string(d) + "(" + qs + ")";
    case SpaceKind::orthogonal_odd: return "O_" + std::to_string(d) + "(" + qs + ")";
  }
  return "?";
}

QuadraticSpace make_space(SpaceKind kind, int n, std::uint32_t q) {
  if (n < 1) throw ValidationError("space rank must be at least 1");
  QuadraticSpace s;
  s.kind = kind;
  s.field = FiniteField::get(q);
  const FiniteField& F = *s.field;
  s.n = n;
  s.d = kind == SpaceKind::orthogonal_odd ? 2 * n + 1 : 2 * n;
  if (s.d > kMaxClassicalDim) throw ValidationError("dimension " + std::to_string(s.d) + " exceeds the cap of 13");
  if (kind == SpaceKind::orthogonal_odd && F.p() == 2)
    throw ValidationError("odd-dimensional orthogonal spaces need odd q");
  const int d = s.d;
  if (kind == SpaceKind::symplectic) {
    s.gram = FqMatrix(s.field, d, d);
    for (int i = 0; i < n; ++i) {
      s.gram(i, n + i) = 1;
      s.gram(n + i, i) = F.neg(1);
    }
    return s;
  }
  s.quad = FqMatrix(s.field, d, d);
  for (int i = 0; i < n; ++i) s.quad(i, n + i) = 1;
  if (kind == SpaceKind::orthogonal_minus) {
    // least nu with x^2 + x + nu irreducible
    bool found = false;
    for (Fq nu = 0; nu < q && !found; ++nu) {
      bool has_root = false;
      for (Fq x = 0; x < q && !has_root; ++x) has_root = F.add(F.add(F.mul(x, x), x), nu) == 0;
      if (!has_root) {
        s.nu = nu;
        found = true;
      }
    }
    if (!found) throw InvariantError("no anisotropic binary form found");
    s.quad(n - 1, n - 1) = 1;
    s.quad(2 * n - 1, 2 * n - 1) = s.nu;
  }
  if (kind == SpaceKind::orthogonal_odd) s.quad(2 * n, 2 * n) = 1;
  s.gram = FqMatrix(s.field, d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) s.gram(i, i) = F.add(s.quad(i, i), s.quad(i, i));
      else s.gram(i, j) = i < j ? s.quad(i, j) : s.quad(j, i);
    }
  }
  return s;
}

namespace {

FqMatrix from_columns(const QuadraticSpace& s, const std::vector<FqVector>& cols) {
  FqMatrix m(s.field, s.d, s.d);
  for (int j = 0; j < s.d; ++j)
    for (int i = 0; i < s.d; ++i) m(i, j) = cols[j][i];
  return m;
}

FqVector column(const FqMatrix& g, int j) {
  FqVector v(g.rows());
  for (int i = 0; i < g.rows(); ++i) v[i] = g(i, j);
  return v;
}

void axpy(const FiniteField& F, FqVector& y, Fq a, const FqVector& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = F.add(y[i], F.mul(a, x[i]));
}

FqMatrix minus_identity(const FqMatrix& g, Fq lambda) {
  FqMatrix m = g;
  for (int i = 0; i < g.rows(); ++i) m(i, i) = g.field()->sub(m(i, i), lambda);
  return m;
}

// Particular solution of A x = b, if any.
std::optional<FqVector> solve(const FqMatrix& a, const FqVector& b) {
  const FiniteField& F = *a.field();
  FqMatrix aug(a.field(), a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = F.neg(b[i]);
  }
  for (const auto& k : aug.kernel_basis()) {
    const Fq last = k[a.cols()];
    if (last == 0) continue;
    const Fq s = F.inv(last);
    FqVector x(a.cols());
    for (int j = 0; j < a.cols(); ++j) x[j] = F.mul(s, k[j]);
    return x;
  }
  return std::nullopt;
}

// Histogram of the values of a quadratic form with polar matrix `gram` over
// v0 + span(basis); Q(v + c k) = Q(v) + c^2 Q(k) + c B(v, k) drives the walk.
class AffineHistogram {
 public:
  AffineHistogram(const FiniteField& F, const FqMatrix& gram, const std::function<Fq(const FqVector&)>& form,
                  const FqVector& v0, const std::vector<FqVector>& basis)
      : F_(F), k_(static_cast<int>(basis.size())), counts_(F.q(), 0) {
    auto bilinear = [&](const FqVector& x, const FqVector& y) {
      Fq s = 0;
      for (int i = 0; i < gram.rows(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < gram.cols(); ++j) s = F.add(s, F.mul(x[i], F.mul(gram(i, j), y[j])));
      }
      return s;
    };
    qk_.resize(k_);
    bkk_.assign(static_cast<std::size_t>(k_) * k_, 0);
    std::vector<Fq> bv(k_);
    for (int j = 0; j < k_; ++j) {
      qk_[j] = form(basis[j]);
      bv[j] = bilinear(v0, basis[j]);
      for (int l = 0; l < k_; ++l) bkk_[static_cast<std::size_t>(j) * k_ + l] = bilinear(basis[j], basis[l]);
    }
    scratch_.assign(static_cast<std::size_t>(k_ + 1) * std::max(k_, 1), 0);
    std::copy(bv.begin(), bv.end(), scratch_.begin());
    walk(0, form(v0));
  }

  const std::vector<std::int64_t>& counts() const { return counts_; }

 private:
  void walk(int j, Fq value) {
    if (j == k_) {
      ++counts_[value];
      return;
    }
    const Fq* bv = &scratch_[static_cast<std::size_t>(j) * std::max(k_, 1)];
    Fq* next = &scratch_[static_cast<std::size_t>(j + 1) * std::max(k_, 1)];
    for (Fq c = 0; c < F_.q(); ++c) {
      const Fq v = F_.add(value, F_.add(F_.mul(F_.mul(c, c), qk_[j]), F_.mul(c, bv[j])));
      if (j + 1 < k_) {
        for (int l = j + 1; l < k_; ++l)
          next[l] = F_.add(bv[l], F_.mul(c, bkk_[static_cast<std::size_t>(j) * k_ + l]));
      }
      walk(j + 1, v);
    }
  }

  const FiniteField& F_;
  int k_;
  std::vector<std::int64_t> counts_;
  std::vector<Fq> qk_, bkk_, scratch_;
};

std::int64_t ipow64(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Plus-type reference form sum x_{e_i} x_{f_i}.
Fq reference_form(const FiniteField& F, int n, const FqVector& x) {
  Fq s = 0;
  for (int i = 0; i < n; ++i) s = F.add(s, F.mul(x[i], x[n + i]));
  return s;
}

}  // namespace

GroupElement certify(const QuadraticSpace& space, const FqMatrix& g) {
  if (g.rows() != space.d || g.cols() != space.d || g.field()->q() != space.field->q())
    throw ValidationError("matrix does not act on " + space.name());
  GroupElement out;
  out.matrix = g;
  out.preserves_form = g.transpose() * space.gram * g == space.gram;
  out.preserves_quadratic = true;
  if (space.has_quadratic_form()) {
    for (int i = 0; i < space.d && out.preserves_quadratic; ++i)
      out.preserves_quadratic = space.Q(column(g, i)) == space.Q(space.basis_vector(i));
  }
  out.det = g.det();
  const bool char2 = space.field->p() == 2;
  if (space.has_quadratic_form() && char2) out.kappa = minus_identity(g, 1).nullity() % 2 == 0 ? 1 : -1;
  if (!space.has_quadratic_form()) out.in_group = out.preserves_form;
  else if (char2) out.in_group = out.preserves_form && out.preserves_quadratic && out.kappa == 1;
  else out.in_group = out.preserves_form && out.preserves_quadratic && out.det == 1;
  return out;
}

FqMatrix symplectic_transvection(const QuadraticSpace& space, const FqVector& v, Fq lambda) {
  const FiniteField& F = *space.field;
  std::vector<FqVector> cols;
  for (int k = 0; k < space.d; ++k) {
    FqVector b = space.basis_vector(k);
    axpy(F, b, F.mul(lambda, space.B(space.basis_vector(k), v)), v);
    cols.push_back(std::move(b));
  }
  return from_columns(space, cols);
}

FqMatrix eichler_map(const QuadraticSpace& space, const FqVector& u, const FqVector& v) {
  const FiniteField& F = *space.field;
  if (space.Q(u) != 0) throw ValidationError("Eichler map needs a singular vector u");
  if (space.B(u, v) != 0) throw ValidationError("Eichler map needs v orthogonal to u");
  const Fq qv = space.Q(v);
  std::vector<FqVector> cols;
  for (int k = 0; k < space.d; ++k) {
    const FqVector x = space.basis_vector(k);
    const Fq bu = space.B(x, u), bv = space.B(x, v);
    FqVector y = x;
    axpy(F, y, bu, v);
    axpy(F, y, F.neg(bv), u);
    axpy(F, y, F.neg(F.mul(qv, bu)), u);
    cols.push_back(std::move(y));
  }
  return from_columns(space, cols);
}

FqMatrix orthogonal_reflection(const QuadraticSpace& space, const FqVector& v) {
  const FiniteField& F = *space.field;
  const Fq qv = space.Q(v);
  if (qv == 0) throw ValidationError("reflection needs a nonsingular vector");
  std::vector<FqVector> cols;
  for (int k = 0; k < space.d; ++k) {
    FqVector y = space.basis_vector(k);
    axpy(F, y, F.neg(F.div(space.B(space.basis_vector(k), v), qv)), v);
    cols.push_back(std::move(y));
  }
  return from_columns(space, cols);
}

std::vector<GroupElement> generators(const QuadraticSpace& space) {
  const FiniteField& F = *space.field;
  std::vector<Fq> scalars;
  for (std::uint32_t k = 0; k < F.e(); ++k) scalars.push_back(F.exp(k));
  std::vector<FqMatrix> mats;
  if (!space.has_quadratic_form()) {
    for (int i = 0; i < space.d; ++i) {
      for (int j = i; j < space.d; ++j) {
        FqVector v = space.basis_vector(i);
        if (j != i) v[j] = 1;
        for (Fq l : scalars) mats.push_back(symplectic_transvection(space, v, l));
      }
    }
  } else {
    const int hyperbolic = space.kind == SpaceKind::orthogonal_minus ? space.n - 1 : space.n;
    if (hyperbolic < 1) throw ValidationError(space.name() + " has no singular basis vectors");
    std::vector<int> singular;
    for (int i = 0; i < hyperbolic; ++i) {
      singular.push_back(i);
      singular.push_back(space.n + i);
    }
    for (int u : singular) {
      const FqVector uv = space.basis_vector(u);
      for (int b = 0; b < space.d; ++b) {
        if (b == u || space.B(uv, space.basis_vector(b)) != 0) continue;
        for (Fq l : scalars) {
          FqVector v(space.d, 0);
          v[b] = l;
          mats.push_back(eichler_map(space, uv, v));
        }
      }
    }
  }
  std::vector<GroupElement> out;
  for (auto& m : mats) {
    GroupElement g = certify(space, m);
    if (!g.in_group) throw InvariantError("generator outside the group for " + space.name());
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GroupElement> sample(const QuadraticSpace& space, int count, int word_length, std::uint64_t seed) {
  if (count < 0 || word_length < 1) throw ValidationError("sample count and word length must be positive");
  const auto gens = generators(space);
  std::vector<FqMatrix> letters;
  for (const auto& g : gens) {
    letters.push_back(g.matrix);
    letters.push_back(g.matrix.inverse());
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::vector<GroupElement> out;
  out.reserve(count);
  for (int s = 0; s < count; ++s) {
    FqMatrix g = letters[pick(rng)];
    for (int k = 1; k < word_length; ++k) g = g * letters[pick(rng)];
    GroupElement e = certify(space, g);
    if (!e.in_group) throw InvariantError("sampled word left the group for " + space.name());
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::int64_t> q_value_histogram(const QuadraticSpace& space) {
  std::vector<FqVector> basis;
  for (int i = 0; i < space.d; ++i) basis.push_back(space.basis_vector(i));
  AffineHistogram h(*space.field, space.gram, [&](const FqVector& x) { return space.Q(x); }, FqVector(space.d, 0),
                    basis);
  return h.counts();
}

PointCounts point_counts(const QuadraticSpace& space, const FqMatrix& g) {
  const FiniteField& F = *space.field;
  const std::int64_t q = F.q();
  PointCounts out;
  const FqVector zero(space.d, 0);
  auto form = [&](const FqVector& x) { return space.Q(x); };
  std::vector<FqVector> fixed;
  for (std::uint32_t k = 0; k + 1 < F.q(); ++k) {
    const Fq lambda = F.exp(k);
    auto basis = minus_identity(g, lambda).kernel_basis();
    const int dim = static_cast<int>(basis.size());
    if (lambda == 1) {
      out.d1 = dim;
      fixed = basis;
    }
    if (dim == 0) continue;
    const std::int64_t lines = (ipow64(q, dim) - 1) / (q - 1);
    out.rho_sp += lines;
    if (!space.has_quadratic_form()) {
      out.rho += lines;
      continue;
    }
    AffineHistogram h(F, space.gram, form, zero, basis);
    const std::int64_t singular = h.counts()[0] - 1;
    if (singular % (q - 1) != 0) throw InvariantError("singular vectors do not fill whole lines");
    out.rho += singular / (q - 1);
    if (lambda == 1) {
      out.ind_pp = singular;
      out.ind_h = h.counts()[1];
    }
  }
  if (F.p() == 2 && space.d % 2 == 0) {
    // Forms polarizing to B are Q_v = Q_0 + B(v,.)^2; Q_v is g-invariant iff
    // (g + 1) v = g w with B(w, x) = sqrt(Q_0(g x) + Q_0(x)). Q_v has plus
    // type iff Tr(Q_0(v)) = 0.
    const int n = space.d / 2;
    FqVector ell(space.d);
    for (int j = 0; j < space.d; ++j)
      ell[j] = F.sqrt(F.add(reference_form(F, n, column(g, j)), reference_form(F, n, space.basis_vector(j))));
    const auto w = solve(space.gram.transpose(), ell);
    if (!w) throw InvariantError("polar form is degenerate");
    const auto v0 = solve(minus_identity(g, 1), g.apply(*w));
    if (!v0) throw InvariantError("no g-invariant form polarizes to B");
    AffineHistogram h(F, space.gram, [&](const FqVector& x) { return reference_form(F, n, x); }, *v0, fixed);
    for (Fq x = 0; x < F.q(); ++x) (F.trace(x) == 0 ? out.pi_plus : out.pi_minus) += h.counts()[x];
    out.has_pi = true;
  }
  return out;
}

WeilValues weil_values(const PointCounts& counts) {
  if (!counts.has_pi) throw ValidationError("Weil values need characteristic 2 and even dimension");
  const std::int64_t diff = counts.pi_plus - counts.pi_minus;
  const std::int64_t lo = counts.rho_sp - 1 - diff, hi = counts.rho_sp - 1 + diff;
  if (lo % 2 != 0 || hi % 2 != 0) throw InvariantError("Weil character values are not integers");
  return {lo / 2, hi / 2};
}

EigenProfile identity_profile(std::uint32_t q, int dim) {
  EigenProfile p;
  p.q = q;
  p.dim = dim;
  p.split.assign(q - 1, 0);
  p.nonsplit.assign(q + 1, 0);
  p.split[0] = dim;
  p.nonsplit[0] = dim;
  return p;
}

EigenProfile eigen_profile(const FqMatrix& g) {
  const FieldPtr& small = g.field();
  const std::uint32_t q = small->q();
  if (static_cast<std::uint64_t>(q) * q > kMaxFieldOrder) throw ValidationError("q^2 exceeds the field cap");
  const FieldPtr large = FiniteField::get(q * q);
  const FieldEmbedding emb(small, large);
  EigenProfile p;
  p.q = q;
  p.dim = g.rows();
  for (std::uint32_t k = 0; k + 1 < q; ++k) p.split.push_back(eig_dim(g, small->exp(k)));
  const FqMatrix lifted = g.lift(emb);
  for (std::uint32_t k = 0; k <= q; ++k) {
    const Fq mu = large->exp(static_cast<std::uint64_t>(k) * (q - 1));
    const int dim = eig_dim(lifted, mu);
    p.nonsplit.push_back(dim);
    // Cross-check in GF(q): mu in GF(q) means mu = +-1; otherwise its
    // minimal polynomial is x^2 - (mu + mu^q) x + 1.
    const Fq trace = large->add(mu, large->pow(mu, q));
    Fq t = 0;
    bool found = false;
    for (Fq a = 0; a < q && !found; ++a)
      if (emb(a) == trace) {
        t = a;
        found = true;
      }
    if (!found) throw InvariantError("trace of a norm-one element is not in the base field");
    int expect;
    if (large->pow(mu, q) == mu) {
      Fq a = 0;
      while (emb(a) != mu) ++a;
      expect = eig_dim(g, a);
    } else {
      const Poly f = poly::trim({1, small->neg(t), 1});
      const int null = evaluate(f, g).nullity();
      if (null % 2 != 0) throw InvariantError("conjugate eigenspaces have unequal dimension");
      expect = null / 2;
    }
    if (expect != dim) throw InvariantError("eigenspace dimension differs between GF(q) and GF(q^2)");
  }
  return p;
}

BigRational beta_formula(const EigenProfile& profile) {
  const BigInt q = profile.q;
  const std::uint32_t qq = profile.q;
  if (profile.dim % 2 == 0) {
    BigInt s1 = 0, s2 = 0;
    for (int d : profile.split) s1 += ipow(q, d);
    for (int d : profile.nonsplit) s2 += ipow(-q, d);
    return BigRational(s1, 2 * (q - 1)) - BigRational(s2, 2 * (q + 1)) - 1;
  }
  if (qq % 2 == 0) throw ValidationError("odd-dimensional formula needs odd q");
  BigInt s1 = 0, s2 = 0;
  for (std::size_t k = 0; k < profile.split.size(); ++k)
    s1 += (k % 2 == 0 ? 1 : -1) * ipow(q, profile.split[k]);
  for (std::size_t k = 0; k < profile.nonsplit.size(); ++k)
    s2 += (k % 2 == 0 ? 1 : -1) * ipow(-q, profile.nonsplit[k]);
  return BigRational(s1, 2 * (q - 1)) + BigRational(s2, 2 * (q + 1));
}

BigInt beta_value(const QuadraticSpace& space, const FqMatrix& g) {
  if (!space.has_quadratic_form()) throw ValidationError("beta is defined for orthogonal spaces");
  const BigRational b = beta_formula(eigen_profile(g));
  if (denominator(b) != 1) throw InvariantError("beta(g) is not an integer");
  return numerator(b);
}

Constituents derived_constituents(const PointCounts& counts, const BigInt& beta) {
  Constituents c;
  c.beta = beta;
  c.alpha = BigInt(counts.rho) - 1 - beta;
  const std::int64_t twice = counts.ind_pp - counts.rho;
  if (twice % 2 != 0) throw InvariantError("ind_pp - rho is odd");
  c.sum_gamma = twice / 2;
  c.sum_delta = BigInt(counts.ind_h) - 1 - beta - c.sum_gamma;
  return c;
}

namespace degrees {

namespace {
BigInt pw(std::uint32_t q, int e) { return ipow(BigInt(q), static_cast<unsigned>(e)); }
}  // namespace

BigRational rho1(int n, std::uint32_t q) { return BigRational((pw(q, n) + 1) * (pw(q, n) - q), 2 * BigInt(q - 1)); }
BigRational rho2(int n, std::uint32_t q) { return BigRational((pw(q, n) - 1) * (pw(q, n) + q), 2 * BigInt(q - 1)); }
BigRational unitary_alpha(int n, std::uint32_t q) {
  return BigRational((pw(q, n) - 1) * (pw(q, n) - q), 2 * BigInt(q + 1));
}
BigRational unitary_beta(int n, std::uint32_t q) {
  return BigRational((pw(q, n) + 1) * (pw(q, n) + q), 2 * BigInt(q + 1));
}
BigRational unitary_zeta(int n, std::uint32_t q) { return BigRational(pw(q, 2 * n) - 1, BigInt(q + 1)); }
BigRational alpha(int n, std::uint32_t q, int eps) {
  return BigRational((pw(q, n) - eps) * (pw(q, n - 1) + eps * BigInt(q)), pw(q, 2) - 1);
}
BigRational beta(int n, std::uint32_t q) { return BigRational(pw(q, 2 * n) - pw(q, 2), pw(q, 2) - 1); }
BigRational gamma(int n, std::uint32_t q, int eps) {
  return BigRational((pw(q, n) - eps) * (pw(q, n - 1) + eps), BigInt(q - 1));
}
BigRational delta(int n, std::uint32_t q, int eps) {
  return BigRational((pw(q, n) - eps) * (pw(q, n - 1) - eps), BigInt(q + 1));
}
BigRational singular_points(int n, std::uint32_t q, int eps) { return gamma(n, q, eps); }
BigRational singular_vectors(int n, std::uint32_t q, int eps) {
  return BigRational((pw(q, n) - eps) * (pw(q, n - 1) + eps));
}
BigRational norm_one_vectors(int n, std::uint32_t q, int eps) {
  return BigRational(pw(q, 2 * n - 1) - eps * pw(q, n - 1));
}

}  // namespace degrees

}  // namespace mckay
