#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mckay/bigint.hpp"
#include "mckay/matrix.hpp"

namespace mckay {

enum class SpaceKind { symplectic, orthogonal_plus, orthogonal_minus, orthogonal_odd };

std::string to_string(SpaceKind kind);
SpaceKind parse_space_kind(const std::string& text);

// V = GF(q)^d in the basis e_1..e_n, f_1..f_n (then w in odd dimension).
// Orthogonal spaces carry Q(x) = sum_{i<=j} quad(i,j) x_i x_j and the polar
// form B(x,y) = Q(x+y) - Q(x) - Q(y); symplectic spaces carry only B. For
// the minus type the plane <e_n, f_n> has Q = x^2 + xy + nu y^2 with nu the
// least element (by encoding) making it anisotropic.
class QuadraticSpace {
 public:
  SpaceKind kind = SpaceKind::symplectic;
  FieldPtr field;
  int n = 0;  // Witt index of the hyperbolic part
  int d = 0;
  FqMatrix gram;
  FqMatrix quad;  // upper triangular; empty for symplectic spaces
  Fq nu = 0;

  bool has_quadratic_form() const { return kind != SpaceKind::symplectic; }
  // +1, -1, or 0 for symplectic and odd-dimensional spaces
  int epsilon() const;
  Fq B(const FqVector& x, const FqVector& y) const;
  Fq Q(const FqVector& x) const;
  FqVector basis_vector(int i) const;
  std::string name() const;
};

inline constexpr int kMaxClassicalDim = 13;

QuadraticSpace make_space(SpaceKind kind, int n, std::uint32_t q);

struct GroupElement {
  FqMatrix matrix;
  bool preserves_form = false;
  bool preserves_quadratic = false;  // vacuous for symplectic spaces
  int kappa = 1;                     // (-1)^dim ker(g-1), characteristic 2 orthogonal only
  Fq det = 1;
  bool in_group = false;  // Sp; Omega in characteristic 2; SO in odd characteristic
};

GroupElement certify(const QuadraticSpace& space, const FqMatrix& g);

// x -> x + lambda (x,v) v
FqMatrix symplectic_transvection(const QuadraticSpace& space, const FqVector& v, Fq lambda);
// x -> x + B(x,u) v - B(x,v) u - Q(v) B(x,u) u, for singular u and v orthogonal to u
FqMatrix eichler_map(const QuadraticSpace& space, const FqVector& u, const FqVector& v);
// x -> x - B(x,v)/Q(v) v, for Q(v) != 0
FqMatrix orthogonal_reflection(const QuadraticSpace& space, const FqVector& v);

// Symplectic: t_{v,l} with v a basis vector or a sum of two, l in
// {1, w, .., w^(e-1)}. Orthogonal: Eichler maps with u in the singular part
// of the Witt basis and v = l * b for basis vectors b orthogonal to u.
std::vector<GroupElement> generators(const QuadraticSpace& space);

// Seeded random words in generators and their inverses, each re-certified.
std::vector<GroupElement> sample(const QuadraticSpace& space, int count, int word_length, std::uint64_t seed);

struct PointCounts {
  std::int64_t rho = 0;     // fixed singular 1-spaces (all fixed 1-spaces for symplectic)
  std::int64_t rho_sp = 0;  // fixed 1-spaces of V
  std::int64_t ind_pp = 0;  // fixed nonzero singular vectors
  std::int64_t ind_h = 0;   // fixed vectors with Q(v) = 1
  std::int64_t pi_plus = 0, pi_minus = 0;  // fixed forms polarizing to B, characteristic 2
  int d1 = 0;               // dim ker(g - 1)
  bool has_pi = false;
};

PointCounts point_counts(const QuadraticSpace& space, const FqMatrix& g);

// Number of v in V with Q(v) = x, for every x, by enumeration.
std::vector<std::int64_t> q_value_histogram(const QuadraticSpace& space);

struct WeilValues {
  std::int64_t rho1 = 0;
  std::int64_t rho2 = 0;
};

// rho^1 = (rho-1 - (pi+ - pi-))/2, rho^2 = (rho-1 + (pi+ - pi-))/2; throws on parity failure.
WeilValues weil_values(const PointCounts& counts);

// Eigenspace dimensions: split[k] = d(w^k) over GF(q), nonsplit[k] = d(W^(k(q-1)))
// over GF(q^2) with W primitive there, so nonsplit runs over mu_{q+1}.
struct EigenProfile {
  std::uint32_t q = 0;
  int dim = 0;
  std::vector<int> split;
  std::vector<int> nonsplit;
};

EigenProfile eigen_profile(const FqMatrix& g);
EigenProfile identity_profile(std::uint32_t q, int dim);

// The explicit formula for beta (even dim) or for the degree (q^n-q)/(q^2-1)
// character (odd dim, odd q), as an exact rational.
BigRational beta_formula(const EigenProfile& profile);
// Same, asserting integrality.
BigInt beta_value(const QuadraticSpace& space, const FqMatrix& g);

struct Constituents {
  BigInt alpha, beta, sum_gamma, sum_delta;
};

// alpha = rho - 1 - beta, sum gamma = (ind_pp - rho)/2, sum delta = ind_h - 1 - beta - sum gamma.
Constituents derived_constituents(const PointCounts& counts, const BigInt& beta);

// Degrees of the small characters, as exact rationals (some are only
// integral for even q).
namespace degrees {
BigRational rho1(int n, std::uint32_t q);
BigRational rho2(int n, std::uint32_t q);
BigRational unitary_alpha(int n, std::uint32_t q);
BigRational unitary_beta(int n, std::uint32_t q);
BigRational unitary_zeta(int n, std::uint32_t q);
BigRational alpha(int n, std::uint32_t q, int eps);
BigRational beta(int n, std::uint32_t q);
BigRational gamma(int n, std::uint32_t q, int eps);
BigRational delta(int n, std::uint32_t q, int eps);
BigRational singular_points(int n, std::uint32_t q, int eps);   // (q^n-e)(q^(n-1)+e)/(q-1)
BigRational singular_vectors(int n, std::uint32_t q, int eps);  // (q^n-e)(q^(n-1)+e)
BigRational norm_one_vectors(int n, std::uint32_t q, int eps);  // q^(2n-1) - e q^(n-1)
}  // namespace degrees

}  // namespace mckay
