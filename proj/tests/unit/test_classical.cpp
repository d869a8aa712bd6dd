#include <doctest.h>

#include "classical_oracle.hpp"
#include "mckay/classical_verify.hpp"
#include "mckay/errors.hpp"

using namespace mckay;

namespace {

BigInt to_big(std::int64_t x) { return BigInt(x); }

// <f, g> over an explicitly listed group, for integer-valued class functions.
BigRational inner(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
  BigInt s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
  return BigRational(s, BigInt(f.size()));
}

std::vector<FqMatrix> group_of(const QuadraticSpace& s, bool special) {
  std::vector<FqMatrix> gens;
  for (const auto& g : generators(s)) gens.push_back(g.matrix);
  if (special) {
    // product of reflections in e1+f1 and e1+w f1 has spinor norm w, a nonsquare
    const auto& F = *s.field;
    FqVector a(s.d, 0), b(s.d, 0);
    a[0] = 1, a[s.n] = 1;
    b[0] = 1, b[s.n] = F.primitive();
    gens.push_back(orthogonal_reflection(s, a) * orthogonal_reflection(s, b));
  }
  return oracle::closure(gens, 200000);
}

}  // namespace

TEST_CASE("space construction") {
  const auto plus = make_space(SpaceKind::orthogonal_plus, 5, 2);
  const auto minus = make_space(SpaceKind::orthogonal_minus, 5, 2);
  CHECK(plus.d == 10);
  CHECK(q_value_histogram(plus)[0] - 1 == 527);
  CHECK(q_value_histogram(minus)[0] - 1 == 495);
  CHECK(q_value_histogram(plus)[1] == 496);
  CHECK(q_value_histogram(minus)[1] == 528);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    for (auto kind : {SpaceKind::orthogonal_plus, SpaceKind::orthogonal_minus}) {
      const auto s = make_space(kind, 2, q);
      const int e = s.epsilon();
      CHECK(BigRational(q_value_histogram(s)[0] - 1) == degrees::singular_vectors(2, q, e));
      // Witt relations on the hyperbolic pair
      CHECK(s.Q(s.basis_vector(0)) == 0);
      CHECK(s.Q(s.basis_vector(2)) == 0);
      CHECK(s.B(s.basis_vector(0), s.basis_vector(2)) == 1);
    }
  }
  CHECK_THROWS_AS(make_space(SpaceKind::orthogonal_odd, 2, 4), ValidationError);
  CHECK_THROWS_AS(make_space(SpaceKind::symplectic, 7, 2), ValidationError);
  CHECK_THROWS_AS(parse_space_kind("so"), ValidationError);
}

TEST_CASE("generators generate the expected groups") {
  struct Case {
    SpaceKind kind;
    int n;
    std::uint32_t q;
    std::size_t order;
  };
  const std::vector<Case> cases{{SpaceKind::symplectic, 2, 2, 720},      {SpaceKind::symplectic, 2, 3, 51840},
                                {SpaceKind::orthogonal_plus, 3, 2, 20160}, {SpaceKind::orthogonal_minus, 3, 2, 25920},
                                {SpaceKind::orthogonal_odd, 2, 3, 25920},  {SpaceKind::orthogonal_plus, 2, 3, 288},
                                {SpaceKind::orthogonal_minus, 2, 3, 360},  {SpaceKind::orthogonal_plus, 2, 4, 3600}};
  for (const auto& c : cases) {
    const auto s = make_space(c.kind, c.n, c.q);
    CAPTURE(s.name());
    const auto elems = group_of(s, false);
    CHECK(elems.size() == c.order);
    for (std::size_t i = 0; i < elems.size(); i += 97) CHECK(certify(s, elems[i]).in_group);
  }
}

TEST_CASE("certification rejects non-members") {
  const auto s = make_space(SpaceKind::orthogonal_plus, 5, 2);
  FqVector v(10, 0);
  v[0] = 1, v[5] = 1;  // Q(v) = 1
  const auto r = certify(s, orthogonal_reflection(s, v));
  CHECK(r.preserves_form);
  CHECK(r.preserves_quadratic);
  CHECK(r.kappa == -1);
  CHECK_FALSE(r.in_group);
  FqMatrix bad = FqMatrix::identity(s.field, 10);
  bad(0, 1) = 1;
  CHECK_FALSE(certify(s, bad).preserves_form);
  // symplectic transvection preserves B but not Q
  const auto sp = make_space(SpaceKind::symplectic, 5, 2);
  CHECK(certify(sp, symplectic_transvection(sp, v, 1)).in_group);
  // odd characteristic: a single reflection has det -1
  const auto o = make_space(SpaceKind::orthogonal_plus, 3, 3);
  FqVector a(6, 0);
  a[0] = 1, a[3] = 1;
  const auto ra = certify(o, orthogonal_reflection(o, a));
  CHECK(ra.preserves_quadratic);
  CHECK(ra.det == 2);
  CHECK_FALSE(ra.in_group);
}

TEST_CASE("kappa is multiplicative on O+_8(2)") {
  const auto s = make_space(SpaceKind::orthogonal_plus, 4, 2);
  const auto els = sample(s, 30, 20, 7);
  std::vector<FqMatrix> mixed;
  for (std::size_t i = 0; i < els.size(); ++i) {
    FqMatrix m = els[i].matrix;
    FqVector v(8, 0);
    v[i % 4] = 1, v[4 + i % 4] = 1;
    if (i % 2) m = m * orthogonal_reflection(s, v);
    mixed.push_back(m);
  }
  for (std::size_t i = 0; i + 1 < mixed.size(); ++i) {
    const int a = certify(s, mixed[i]).kappa, b = certify(s, mixed[i + 1]).kappa;
    CHECK(certify(s, mixed[i] * mixed[i + 1]).kappa == a * b);
  }
}

TEST_CASE("sampling is seeded and stays in the group") {
  const auto s = make_space(SpaceKind::orthogonal_minus, 4, 2);
  const auto a = sample(s, 5, 50, 42), b = sample(s, 5, 50, 42), c = sample(s, 5, 50, 43);
  for (int i = 0; i < 5; ++i) {
    CHECK(a[i].matrix == b[i].matrix);
    CHECK(a[i].in_group);
  }
  CHECK_FALSE(a[0].matrix == c[0].matrix);
}

TEST_CASE("point counts against full enumeration") {
  struct Case {
    SpaceKind kind;
    int n;
    std::uint32_t q;
  };
  for (const auto& c : std::vector<Case>{{SpaceKind::symplectic, 3, 2},
                                         {SpaceKind::symplectic, 2, 4},
                                         {SpaceKind::orthogonal_plus, 3, 2},
                                         {SpaceKind::orthogonal_minus, 3, 2},
                                         {SpaceKind::orthogonal_minus, 2, 4},
                                         {SpaceKind::orthogonal_odd, 2, 3},
                                         {SpaceKind::orthogonal_plus, 2, 5}}) {
    const auto s = make_space(c.kind, c.n, c.q);
    CAPTURE(s.name());
    auto els = sample(s, 12, 30, 11);
    els.push_back(certify(s, FqMatrix::identity(s.field, s.d)));
    for (const auto& g : els) {
      const auto got = point_counts(s, g.matrix);
      const auto want = oracle::brute_counts(s, g.matrix);
      CHECK(got.rho == want.rho);
      CHECK(got.rho_sp == want.rho_sp);
      CHECK(got.ind_pp == want.ind_pp);
      CHECK(got.ind_h == want.ind_h);
      if (got.has_pi) {
        CHECK(got.pi_plus == want.pi_plus);
        CHECK(got.pi_minus == want.pi_minus);
        std::int64_t total = 1;
        for (int i = 0; i < got.d1; ++i) total *= c.q;
        CHECK(got.pi_plus + got.pi_minus == total);
      }
    }
  }
}

TEST_CASE("Sp_6(2) Weil values at the identity and a transvection") {
  const auto s = make_space(SpaceKind::symplectic, 3, 2);
  const auto one = point_counts(s, FqMatrix::identity(s.field, 6));
  CHECK(one.rho_sp == 63);
  CHECK(one.pi_plus == 36);
  CHECK(one.pi_minus == 28);
  const auto w = weil_values(one);
  CHECK(w.rho1 == 27);
  CHECK(w.rho2 == 35);
  CHECK(BigRational(w.rho1) == degrees::rho1(3, 2));
  CHECK(BigRational(w.rho2) == degrees::rho2(3, 2));
  const auto t = point_counts(s, symplectic_transvection(s, s.basis_vector(0), 1));
  CHECK(t.rho_sp == 31);
  const auto wt = weil_values(t);
  CHECK(wt.rho1 == 15);
  CHECK(wt.rho2 == 15);
}

TEST_CASE("beta and derived constituents at the identity") {
  for (int eps : {1, -1}) {
    const auto s = make_space(eps == 1 ? SpaceKind::orthogonal_plus : SpaceKind::orthogonal_minus, 5, 2);
    const FqMatrix one = FqMatrix::identity(s.field, 10);
    const auto counts = point_counts(s, one);
    const BigInt beta = beta_value(s, one);
    CHECK(beta == 340);
    const auto c = derived_constituents(counts, beta);
    CHECK(c.alpha == (eps == 1 ? 186 : 154));
    CHECK(c.sum_gamma == 0);
    CHECK(c.sum_delta == (eps == 1 ? 155 : 187));
    CHECK(BigRational(c.alpha) == degrees::alpha(5, 2, eps));
    CHECK(BigRational(c.sum_delta) == degrees::delta(5, 2, eps));
  }
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    for (int n = 2; n <= 6; ++n) {
      CHECK(beta_formula(identity_profile(q, 2 * n)) == degrees::beta(n, q));
      if (q % 2) {
        const BigInt qn = ipow(BigInt(q), 2 * n + 1);
        CHECK(beta_formula(identity_profile(q, 2 * n + 1)) == BigRational(qn - q, BigInt(q) * q - 1));
      }
    }
  }
}

TEST_CASE("beta is an irreducible constituent of the rank 3 character") {
  struct Case {
    SpaceKind kind;
    int n;
    std::uint32_t q;
    bool special;
  };
  for (const auto& c : std::vector<Case>{{SpaceKind::orthogonal_plus, 3, 2, false},
                                         {SpaceKind::orthogonal_minus, 3, 2, false},
                                         {SpaceKind::orthogonal_plus, 2, 3, true},
                                         {SpaceKind::orthogonal_minus, 2, 3, true},
                                         {SpaceKind::orthogonal_odd, 2, 3, true},
                                         {SpaceKind::orthogonal_minus, 2, 4, false}}) {
    const auto s = make_space(c.kind, c.n, c.q);
    CAPTURE(s.name());
    const auto elems = group_of(s, c.special);
    std::vector<BigInt> beta, rho, one;
    for (const auto& g : elems) {
      if (c.special) REQUIRE(certify(s, g).in_group);
      beta.push_back(beta_value(s, g));
      rho.push_back(to_big(point_counts(s, g).rho));
      one.push_back(1);
    }
    CHECK(inner(beta, beta) == 1);
    CHECK(inner(beta, one) == 0);
    if (s.d % 2 == 0) CHECK(inner(beta, rho) == 1);
  }
}

TEST_CASE("beta is a class function") {
  const auto s = make_space(SpaceKind::orthogonal_minus, 4, 3);
  const auto els = sample(s, 20, 40, 5);
  for (std::size_t i = 0; i + 1 < els.size(); ++i) {
    const FqMatrix& g = els[i].matrix;
    const FqMatrix& h = els[i + 1].matrix;
    CHECK(beta_value(s, h * g * h.inverse()) == beta_value(s, g));
  }
}

TEST_CASE("Weil values reject bad input") {
  PointCounts c;
  CHECK_THROWS_AS(weil_values(c), ValidationError);
  c.has_pi = true;
  c.rho_sp = 5;
  c.pi_plus = 1;
  CHECK_THROWS_AS(weil_values(c), InvariantError);
  const auto sp = make_space(SpaceKind::symplectic, 2, 3);
  CHECK_THROWS_AS(beta_value(sp, FqMatrix::identity(sp.field, 4)), ValidationError);
}

TEST_CASE("exhaustive Weil sweep on Sp_4(2)") {
  const auto r = sp_exhaustive(2, 2, 4);
  CHECK(r.order == 720);
  CHECK(r.expected_order == 720);
  CHECK(r.parity_failures == 0);
  CHECK(r.pi_total_failures == 0);
  CHECK(r.inner_is_identity());
  const auto again = sp_exhaustive(2, 2, 1);
  CHECK(again.support_histogram == r.support_histogram);
  CHECK(sp_order(3, 2) == 1451520);
  CHECK_THROWS_AS(sp_exhaustive(2, 3), ValidationError);
}

TEST_CASE("identity verifier on O+-_10(2)") {
  for (auto kind : {SpaceKind::orthogonal_plus, SpaceKind::orthogonal_minus}) {
    const auto s = make_space(kind, 5, 2);
    const auto r = verify_sp_so_identities(s, 40, 3, 4);
    CAPTURE(s.name());
    CHECK(r.pass());
    CHECK(r.beta1 == 340);
    CHECK(r.sum_delta1 == (kind == SpaceKind::orthogonal_plus ? 155 : 187));
    CHECK(r.support_histogram.size() > 1);
    const auto r1 = verify_sp_so_identities(s, 40, 3, 1);
    CHECK(r1.support_histogram == r.support_histogram);
  }
  CHECK_THROWS_AS(verify_sp_so_identities(make_space(SpaceKind::orthogonal_plus, 5, 3), 5, 1), ValidationError);
}

TEST_CASE("ratio estimates on sampled elements") {
  const auto sp = make_space(SpaceKind::symplectic, 3, 2);
  auto r = ratio_check(sp, RatioTarget::rat_sp2, 100, 9, 4);
  CHECK(r.pass());
  CHECK(r.characters.size() == 2);
  CHECK(r.characters[0].checked == 100);
  const auto so = make_space(SpaceKind::orthogonal_minus, 5, 2);
  r = ratio_check(so, RatioTarget::rat_so21, 60, 9, 4);
  CHECK(r.pass());
  const auto so3 = make_space(SpaceKind::orthogonal_plus, 5, 3);
  r = ratio_check(so3, RatioTarget::rat_so21, 10, 9, 4);
  CHECK(r.pass());
  r = ratio_check(so3, RatioTarget::rat_sp_so22, 10, 9, 4);
  CHECK(r.pass());
  // the identity meets the bound with equality
  r = ratio_check(sp, RatioTarget::rat_sp2, std::vector<FqMatrix>{FqMatrix::identity(sp.field, 6)});
  CHECK(r.pass());
  CHECK(ratio_bound_holds(BigInt(27), BigInt(27), 2, 0));
  CHECK_FALSE(ratio_bound_holds(BigInt(-14), BigInt(27), 2, 3));
  CHECK_THROWS_AS(ratio_check(so, RatioTarget::rat_sp2, 1, 1), ValidationError);
  CHECK_THROWS_AS(ratio_check(make_space(SpaceKind::orthogonal_plus, 4, 2), RatioTarget::rat_so21, 1, 1),
                  ValidationError);
  CHECK_THROWS_AS(ratio_check(so, RatioTarget::rat_sp_so22, 1, 1), ValidationError);
  CHECK_THROWS_AS(parse_ratio_target("rat-x"), ValidationError);
}

TEST_CASE("degree identity suite") {
  const auto r = degree_identity_suite(5, 12, {2, 3, 4, 5, 7, 8, 9});
  CHECK(r.rows.size() == 8 * 7 * 2);
  CHECK(r.pass());
}
