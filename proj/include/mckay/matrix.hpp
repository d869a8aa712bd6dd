#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mckay/gf.hpp"
#include "mckay/poly.hpp"

namespace mckay {

using FqVector = std::vector<Fq>;

// Dense matrix over GF(q), row-major.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(FieldPtr field, int rows, int cols);
  static FqMatrix identity(FieldPtr field, int d);

  const FieldPtr& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Fq operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  Fq& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<Fq>& data() const { return a_; }

  FqMatrix operator*(const FqMatrix& b) const;
  FqMatrix operator+(const FqMatrix& b) const;
  FqMatrix operator-(const FqMatrix& b) const;
  FqMatrix scaled(Fq c) const;
  FqMatrix transpose() const;
  FqVector apply(const FqVector& x) const;
  friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_ && a.field_->q() == b.field_->q();
  }

  int rank() const;
  int nullity() const { return cols_ - rank(); }
  // Basis of {x : A x = 0}.
  std::vector<FqVector> kernel_basis() const;
  Fq det() const;
  FqMatrix inverse() const;  // throws InvariantError when singular
  // Entrywise image under an embedding into a larger field.
  FqMatrix lift(const FieldEmbedding& embedding) const;

 private:
  FieldPtr field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Fq> a_;
};

// det(x I - g), by reduction to upper Hessenberg form.
Poly char_poly(const FqMatrix& g);
// f(g)
FqMatrix evaluate(const Poly& f, const FqMatrix& g);

// dim ker(g - lambda), computed in g's field.
int eig_dim(const FqMatrix& g, Fq lambda);

struct SupportFactor {
  Factor factor;
  int kernel_dim = 0;     // dim ker f(g)
  int per_root = 0;       // kernel_dim / deg f
};

struct SupportDetail {
  int support = 0;
  std::vector<SupportFactor> factors;
};

// d minus the largest eigenspace dimension over the algebraic closure, via
// the irreducible factors of the characteristic polynomial.
SupportDetail support_detail(const FqMatrix& g, std::uint64_t seed = 0);
int support(const FqMatrix& g, std::uint64_t seed = 0);

// Text format: one row per line, entries as fixed-width lowercase hex
// separated by single spaces; width is the hex length of q-1.
std::string to_hex(const FqMatrix& m);
FqMatrix from_hex(FieldPtr field, const std::string& text);

}  // namespace mckay
