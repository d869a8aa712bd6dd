#include "mckay/classical_verify.hpp"

#include <optional>

#include "mckay/errors.hpp"
#include "mckay/parallel.hpp"

namespace mckay {

namespace {

BigInt qpow(std::uint32_t q, int e) { return ipow(BigInt(q), static_cast<unsigned>(e)); }

std::string dec(const BigInt& x) { return to_decimal(x); }
std::string dec(std::int64_t x) { return std::to_string(x); }

Counterexample make_counterexample(std::string check, std::size_t index, const FqMatrix& g, int support,
                                   std::vector<std::pair<std::string, std::string>> values) {
  return {std::move(check), index, to_hex(g), support, std::move(values)};
}

void keep(std::vector<Counterexample>& out, std::optional<Counterexample>& ce) {
  if (ce && out.size() < kMaxCounterexamples) out.push_back(std::move(*ce));
}

std::vector<std::pair<std::string, std::string>> count_fields(const PointCounts& c) {
  return {{"rho", dec(c.rho)},       {"rho_sp", dec(c.rho_sp)},     {"ind_pp", dec(c.ind_pp)},
          {"ind_h", dec(c.ind_h)},   {"pi_plus", dec(c.pi_plus)},   {"pi_minus", dec(c.pi_minus)},
          {"d1", dec(static_cast<std::int64_t>(c.d1))}};
}

}  // namespace

bool ratio_bound_holds(const BigInt& value, const BigInt& degree, std::uint32_t q, int s) {
  const BigInt a = abs(value);
  return a * a * a * qpow(q, s) <= degree * degree * degree;
}

IdentityReport verify_sp_so_identities(const QuadraticSpace& space, int samples, std::uint64_t seed, int workers) {
  const std::uint32_t q = space.field->q();
  if (space.epsilon() == 0) throw ValidationError("identities need an even-dimensional orthogonal space");
  if (q != 2 && q != 4) throw ValidationError("identities are run for q in {2, 4}");
  if (space.n != 5 && space.n != 6) throw ValidationError("identities are run for 2n in {10, 12}");
  if (samples < 1) throw ValidationError("at least one sample is required");
  IdentityReport r;
  r.space = space.name();
  r.q = q;
  r.n = space.n;
  r.epsilon = space.epsilon();
  r.samples = samples;
  r.seed = seed;

  const FqMatrix one = FqMatrix::identity(space.field, space.d);
  const auto c1 = derived_constituents(point_counts(space, one), beta_value(space, one));
  r.alpha1 = c1.alpha;
  r.beta1 = c1.beta;
  r.sum_gamma1 = c1.sum_gamma;
  r.sum_delta1 = c1.sum_delta;
  const int e = r.epsilon;
  r.degrees_match = BigRational(c1.alpha) == degrees::alpha(space.n, q, e) &&
                    BigRational(c1.beta) == degrees::beta(space.n, q) &&
                    BigRational(c1.sum_gamma) == degrees::gamma(space.n, q, e) * BigRational(q - 2, 2) &&
                    BigRational(c1.sum_delta) == degrees::delta(space.n, q, e) * BigRational(q, 2);

  const auto els = sample(space, samples, 50, seed);
  struct Slot {
    bool a = true, b = true, rank3 = true, integral = true, pi_total = true;
    int support = 0;
    std::optional<Counterexample> ce;
  };
  std::vector<Slot> slots(els.size());
  parallel_for(els.size(), workers, [&](std::size_t i) {
    Slot& s = slots[i];
    const FqMatrix& g = els[i].matrix;
    s.support = support(g);
    const PointCounts c = point_counts(space, g);
    auto fields = count_fields(c);
    s.pi_total = BigInt(c.pi_plus + c.pi_minus) == qpow(q, c.d1);
    Constituents k;
    try {
      k = derived_constituents(c, beta_value(space, g));
    } catch (const InvariantError& err) {
      s.integral = false;
      s.ce = make_counterexample(err.what(), i, g, s.support, fields);
      return;
    }
    fields.insert(fields.end(), {{"alpha", dec(k.alpha)},
                                 {"beta", dec(k.beta)},
                                 {"sum_gamma", dec(k.sum_gamma)},
                                 {"sum_delta", dec(k.sum_delta)}});
    s.a = BigInt(c.rho_sp) - 1 == 1 + k.alpha + 2 * k.beta + k.sum_gamma + k.sum_delta;
    s.b = BigInt(c.pi_plus - c.pi_minus) == e * (1 + k.alpha + k.sum_gamma - k.sum_delta);
    s.rank3 = 1 + k.alpha + k.beta == BigInt(c.rho);
    const char* failed = !s.a ? "identity (a)" : !s.b ? "identity (b)" : !s.rank3 ? "rank 3" : !s.pi_total ? "pi total" : nullptr;
    if (failed) s.ce = make_counterexample(failed, i, g, s.support, fields);
  });
  for (auto& s : slots) {
    r.identity_a_failures += !s.a;
    r.identity_b_failures += !s.b;
    r.rank3_failures += !s.rank3;
    r.integrality_failures += !s.integral;
    r.pi_total_failures += !s.pi_total;
    ++r.support_histogram[s.support];
    keep(r.counterexamples, s.ce);
  }
  return r;
}

std::string to_string(RatioTarget target) {
  switch (target) {
    case RatioTarget::rat_sp2: return "rat-sp2";
    case RatioTarget::rat_so21: return "rat-so21";
    case RatioTarget::rat_sp_so22: return "rat-sp-so22";
  }
  return "?";
}

RatioTarget parse_ratio_target(const std::string& text) {
  if (text == "rat-sp2") return RatioTarget::rat_sp2;
  if (text == "rat-so21") return RatioTarget::rat_so21;
  if (text == "rat-sp-so22") return RatioTarget::rat_sp_so22;
  throw ValidationError("unknown estimate '" + text + "' (expected rat-sp2, rat-so21, rat-sp-so22)");
}

long RatioReport::violations() const {
  long v = 0;
  for (const auto& c : characters)
    if (!c.aggregate) v += c.violations;
  return v;
}

long RatioReport::aggregate_violations() const {
  long v = 0;
  for (const auto& c : characters)
    if (c.aggregate) v += c.violations;
  return v;
}

namespace {

struct CharSpec {
  std::string name;
  bool aggregate;
};

std::vector<CharSpec> ratio_characters(const QuadraticSpace& space, RatioTarget target) {
  const std::uint32_t q = space.field->q();
  const bool even = q % 2 == 0;
  switch (target) {
    case RatioTarget::rat_sp2:
      if (space.kind != SpaceKind::symplectic || !even || space.n < 3)
        throw ValidationError("rat-sp2 needs Sp_2n(q) with q even and n >= 3");
      return {{"rho1", false}, {"rho2", false}};
    case RatioTarget::rat_so21:
      if (space.epsilon() == 0 || space.n < 5)
        throw ValidationError("rat-so21 needs an even-dimensional orthogonal space with n >= 5");
      if (!even) return {{"alpha", false}, {"beta", false}};
      if (q == 2) return {{"alpha", false}, {"beta", false}, {"sum_delta", true}};
      return {{"alpha", false}, {"beta", false}, {"sum_gamma", true}, {"sum_delta", true}};
    case RatioTarget::rat_sp_so22:
      if (even || space.n < 5) throw ValidationError("rat-sp-so22 needs odd q and n >= 5");
      if (space.epsilon() == 0) return {{"alpha+beta", true}};
      return {{"alpha", false}, {"beta", false}, {"nontrivial_p_inductions", true}};
  }
  return {};
}

std::vector<BigInt> ratio_values(const QuadraticSpace& space, RatioTarget target, const FqMatrix& g) {
  const PointCounts c = point_counts(space, g);
  const std::uint32_t q = space.field->q();
  switch (target) {
    case RatioTarget::rat_sp2: {
      const WeilValues w = weil_values(c);
      return {w.rho1, w.rho2};
    }
    case RatioTarget::rat_so21: {
      const BigInt beta = beta_value(space, g);
      if (q % 2) return {BigInt(c.rho) - 1 - beta, beta};
      const auto k = derived_constituents(c, beta);
      if (q == 2) return {k.alpha, k.beta, k.sum_delta};
      return {k.alpha, k.beta, k.sum_gamma, k.sum_delta};
    }
    case RatioTarget::rat_sp_so22: {
      if (space.epsilon() == 0) return {BigInt(c.rho - 1)};
      const BigInt beta = beta_value(space, g);
      return {BigInt(c.rho) - 1 - beta, beta, BigInt(c.ind_pp - c.rho)};
    }
  }
  return {};
}

}  // namespace

RatioReport ratio_check(const QuadraticSpace& space, RatioTarget target, const std::vector<FqMatrix>& elements,
                        int workers) {
  const auto specs = ratio_characters(space, target);
  RatioReport r;
  r.proposition = to_string(target);
  r.space = space.name();
  r.q = space.field->q();
  r.n = space.n;
  r.mode = "sampled";
  r.samples = static_cast<long>(elements.size());
  for (const auto& s : specs) r.characters.push_back({s.name, s.aggregate, 0, 0});

  const auto deg = ratio_values(space, target, FqMatrix::identity(space.field, space.d));
  if (target != RatioTarget::rat_sp_so22 || space.epsilon() != 0) {
    // the exact characters must reproduce their listed degrees
    const std::uint32_t q = r.q;
    if (target == RatioTarget::rat_sp2) {
      if (BigRational(deg[0]) != degrees::rho1(space.n, q) || BigRational(deg[1]) != degrees::rho2(space.n, q))
        throw InvariantError("Weil characters do not have the listed degrees");
    } else if (BigRational(deg[0]) != degrees::alpha(space.n, q, space.epsilon()) ||
               BigRational(deg[1]) != degrees::beta(space.n, q)) {
      throw InvariantError("alpha or beta does not have the listed degree");
    }
  }

  struct Slot {
    int support = 0;
    std::vector<bool> ok;
    std::optional<Counterexample> ce;
  };
  std::vector<Slot> slots(elements.size());
  parallel_for(elements.size(), workers, [&](std::size_t i) {
    Slot& s = slots[i];
    const FqMatrix& g = elements[i];
    if (!certify(space, g).in_group) throw ValidationError("element " + std::to_string(i) + " is not in the group");
    s.support = support(g);
    const auto vals = ratio_values(space, target, g);
    for (std::size_t k = 0; k < vals.size(); ++k) {
      s.ok.push_back(ratio_bound_holds(vals[k], deg[k], r.q, s.support));
      if (!s.ok.back() && !s.ce && !specs[k].aggregate)
        s.ce = make_counterexample(specs[k].name, i, g, s.support, {{"value", dec(vals[k])}, {"degree", dec(deg[k])}});
    }
  });
  for (auto& s : slots) {
    ++r.support_histogram[s.support];
    for (std::size_t k = 0; k < s.ok.size(); ++k) {
      ++r.characters[k].checked;
      r.characters[k].violations += !s.ok[k];
    }
    keep(r.counterexamples, s.ce);
  }
  return r;
}

RatioReport ratio_check(const QuadraticSpace& space, RatioTarget target, int samples, std::uint64_t seed,
                        int workers) {
  ratio_characters(space, target);
  std::vector<FqMatrix> mats;
  for (auto& e : sample(space, samples, 50, seed)) mats.push_back(std::move(e.matrix));
  RatioReport r = ratio_check(space, target, mats, workers);
  r.seed = seed;
  return r;
}

BigInt sp_order(int n, std::uint32_t q) {
  BigInt o = qpow(q, n * n);
  for (int i = 1; i <= n; ++i) o *= qpow(q, 2 * i) - 1;
  return o;
}

bool SpExhaustiveReport::inner_is_identity() const {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (inner[i][j] != BigRational(i == j ? 1 : 0)) return false;
  return true;
}

SpExhaustiveReport sp_exhaustive(int n, std::uint32_t q, int workers) {
  const QuadraticSpace space = make_space(SpaceKind::symplectic, n, q);
  if (q % 2) throw ValidationError("exhaustive Weil sweep needs even q");
  const BigInt order = sp_order(n, q);
  if (order > 100'000'000) throw ValidationError(space.name() + " is too large to enumerate");
  const int d = space.d;
  const std::size_t N = static_cast<std::size_t>(to_int64(qpow(q, d)));

  std::vector<FqVector> vec(N, FqVector(d, 0));
  for (std::size_t idx = 0; idx < N; ++idx) {
    std::size_t t = idx;
    for (int i = 0; i < d; ++i, t /= q) vec[idx][i] = static_cast<Fq>(t % q);
  }
  std::vector<Fq> btab(N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) btab[i * N + j] = space.B(vec[i], vec[j]);

  SpExhaustiveReport r;
  r.n = n;
  r.q = q;
  r.expected_order = to_int64(order);
  const std::int64_t per_chunk = r.expected_order / static_cast<std::int64_t>(N - 1);
  const BigInt deg1 = numerator(degrees::rho1(n, q)), deg2 = numerator(degrees::rho2(n, q));

  struct Chunk {
    std::int64_t count = 0;
    long parity = 0, pi_total = 0, ratio[2] = {0, 0};
    BigInt sums[3];
    std::map<int, long> hist;
    std::vector<Counterexample> ces;
  };
  std::vector<Chunk> chunks(N - 1);
  parallel_for(N - 1, workers, [&](std::size_t c) {
    Chunk& ch = chunks[c];
    __int128 s11 = 0, s12 = 0, s22 = 0;
    // images in the order e_1, f_1, e_2, f_2, ...
    std::vector<std::size_t> img(2 * n);
    img[0] = c + 1;
    auto leaf = [&] {
      FqMatrix g(space.field, d, d);
      for (int i = 0; i < n; ++i)
        for (int row = 0; row < d; ++row) {
          g(row, i) = vec[img[2 * i]][row];
          g(row, n + i) = vec[img[2 * i + 1]][row];
        }
      const PointCounts pc = point_counts(space, g);
      const int s = support(g);
      ++ch.hist[s];
      const std::int64_t diff = pc.pi_plus - pc.pi_minus;
      const std::size_t index = static_cast<std::size_t>(static_cast<std::int64_t>(c) * per_chunk + ch.count);
      ++ch.count;
      if (BigInt(pc.pi_plus + pc.pi_minus) != qpow(q, pc.d1)) ++ch.pi_total;
      if ((pc.rho_sp - 1 - diff) % 2 != 0) {
        ++ch.parity;
        if (ch.ces.size() < kMaxCounterexamples)
          ch.ces.push_back(make_counterexample("parity", index, g, s, count_fields(pc)));
        return;
      }
      const std::int64_t r1 = (pc.rho_sp - 1 - diff) / 2, r2 = (pc.rho_sp - 1 + diff) / 2;
      s11 += static_cast<__int128>(r1) * r1;
      s12 += static_cast<__int128>(r1) * r2;
      s22 += static_cast<__int128>(r2) * r2;
      const std::int64_t vals[2] = {r1, r2};
      const BigInt* degs[2] = {&deg1, &deg2};
      for (int k = 0; k < 2; ++k) {
        if (ratio_bound_holds(BigInt(vals[k]), *degs[k], q, s)) continue;
        ++ch.ratio[k];
        if (ch.ces.size() < kMaxCounterexamples)
          ch.ces.push_back(make_counterexample(k == 0 ? "rho1 ratio" : "rho2 ratio", index, g, s,
                                               {{"value", dec(vals[k])}, {"degree", dec(*degs[k])}}));
      }
    };
    auto fits = [&](std::size_t v, int level) {
      const int i = level / 2;
      const bool is_f = level % 2 == 1;
      if (v == 0) return false;
      for (int j = 0; j < i; ++j) {
        if (btab[img[2 * j] * N + v] != 0 || btab[img[2 * j + 1] * N + v] != 0) return false;
      }
      return !is_f || btab[img[2 * i] * N + v] == 1;
    };
    auto rec = [&](auto&& self, int level) -> void {
      if (level == 2 * n) {
        leaf();
        return;
      }
      for (std::size_t v = 1; v < N; ++v) {
        if (!fits(v, level)) continue;
        img[level] = v;
        self(self, level + 1);
      }
    };
    rec(rec, 1);
    auto big = [](__int128 x) {
      const bool neg = x < 0;
      unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
      BigInt b = static_cast<std::uint64_t>(u >> 64);
      b <<= 64;
      b += static_cast<std::uint64_t>(u);
      return neg ? BigInt(-b) : b;
    };
    ch.sums[0] = big(s11);
    ch.sums[1] = big(s12);
    ch.sums[2] = big(s22);
  });
  BigInt sums[3];
  for (auto& ch : chunks) {
    r.order += ch.count;
    r.parity_failures += ch.parity;
    r.pi_total_failures += ch.pi_total;
    r.ratio_violations[0] += ch.ratio[0];
    r.ratio_violations[1] += ch.ratio[1];
    for (int k = 0; k < 3; ++k) sums[k] += ch.sums[k];
    for (const auto& [s, cnt] : ch.hist) r.support_histogram[s] += cnt;
    for (auto& ce : ch.ces)
      if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(std::move(ce));
  }
  const BigInt ord = r.order;
  r.inner[0][0] = BigRational(sums[0], ord);
  r.inner[0][1] = r.inner[1][0] = BigRational(sums[1], ord);
  r.inner[1][1] = BigRational(sums[2], ord);
  return r;
}

bool DegreeSuiteReport::pass() const {
  for (const auto& row : rows)
    if (!row.ok()) return false;
  return !rows.empty();
}

DegreeSuiteReport degree_identity_suite(int n_min, int n_max, const std::vector<std::uint32_t>& qs) {
  if (n_min < 2 || n_max < n_min) throw ValidationError("degree suite needs 2 <= n_min <= n_max");
  DegreeSuiteReport r;
  for (std::uint32_t q : qs) {
    split_prime_power(q);
    for (int n = n_min; n <= n_max; ++n) {
      const BigRational beta_id = beta_formula(identity_profile(q, 2 * n));
      for (int eps : {1, -1}) {
        DegreeRow row;
        row.n = n;
        row.q = q;
        row.epsilon = eps;
        row.beta_at_identity = beta_id == degrees::beta(n, q);
        row.rank3 = 1 + degrees::alpha(n, q, eps) + beta_id == degrees::singular_points(n, q, eps);
        if (q % 2 == 0) {
          row.index_h = 1 + beta_id + BigRational(q - 2, 2) * degrees::gamma(n, q, eps) +
                            BigRational(q, 2) * degrees::delta(n, q, eps) ==
                        degrees::norm_one_vectors(n, q, eps);
          const BigInt qn = qpow(q, n);
          row.unitary = BigRational(qn * (qn + 1), 2) ==
                        degrees::unitary_beta(n, q) + BigRational(q, 2) * degrees::unitary_zeta(n, q);
        }
        r.rows.push_back(row);
      }
    }
  }
  return r;
}

}  // namespace mckay
