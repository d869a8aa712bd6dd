#include "mckay/matrix.hpp"

#include <sstream>

#include "mckay/errors.hpp"

namespace mckay {

FqMatrix::FqMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw ValidationError("negative matrix dimension");
}

FqMatrix FqMatrix::identity(FieldPtr field, int d) {
  FqMatrix m(std::move(field), d, d);
  for (int i = 0; i < d; ++i) m(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& b) const {
  if (cols_ != b.rows_) throw ValidationError("matrix shapes do not match");
  const FiniteField& F = *field_;
  FqMatrix r(field_, rows_, b.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Fq x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) r(i, j) = F.add(r(i, j), F.mul(x, b(k, j)));
    }
  }
  return r;
}

FqMatrix FqMatrix::operator+(const FqMatrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw ValidationError("matrix shapes do not match");
  FqMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], b.a_[i]);
  return r;
}

FqMatrix FqMatrix::operator-(const FqMatrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw ValidationError("matrix shapes do not match");
  FqMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->sub(a_[i], b.a_[i]);
  return r;
}

FqMatrix FqMatrix::scaled(Fq c) const {
  FqMatrix r = *this;
  for (auto& x : r.a_) x = field_->mul(x, c);
  return r;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

FqVector FqMatrix::apply(const FqVector& x) const {
  if (static_cast<int>(x.size()) != cols_) throw ValidationError("vector length does not match");
  const FiniteField& F = *field_;
  FqVector y(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    Fq s = 0;
    for (int j = 0; j < cols_; ++j) s = F.add(s, F.mul((*this)(i, j), x[j]));
    y[i] = s;
  }
  return y;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(FqMatrix& m) {
  const FiniteField& F = *m.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    }
    const Fq inv = F.inv(m(row, col));
    for (int j = col; j < m.cols(); ++j) m(row, j) = F.mul(m(row, j), inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Fq c = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(c, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int FqMatrix::rank() const {
  FqMatrix m = *this;
  return static_cast<int>(rref(m).size());
}

std::vector<FqVector> FqMatrix::kernel_basis() const {
  FqMatrix m = *this;
  const auto pivots = rref(m);
  const FiniteField& F = *field_;
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<FqVector> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    FqVector v(cols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

Fq FqMatrix::det() const {
  if (rows_ != cols_) throw ValidationError("determinant of a non-square matrix");
  const FiniteField& F = *field_;
  FqMatrix m = *this;
  Fq d = 1;
  for (int col = 0; col < cols_; ++col) {
    int piv = -1;
    for (int i = col; i < rows_; ++i) {
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m(piv, j), m(col, j));
      d = F.neg(d);
    }
    d = F.mul(d, m(col, col));
    const Fq inv = F.inv(m(col, col));
    for (int i = col + 1; i < rows_; ++i) {
      if (m(i, col) == 0) continue;
      const Fq c = F.mul(m(i, col), inv);
      for (int j = col; j < cols_; ++j) m(i, j) = F.sub(m(i, j), F.mul(c, m(col, j)));
    }
  }
  return d;
}

FqMatrix FqMatrix::inverse() const {
  if (rows_ != cols_) throw ValidationError("inverse of a non-square matrix");
  FqMatrix aug(field_, rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_ + i) = 1;
  }
  const auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < rows_ || pivots[rows_ - 1] >= cols_)
    throw InvariantError("matrix is singular");
  FqMatrix r(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(i, j) = aug(i, cols_ + j);
  return r;
}

FqMatrix FqMatrix::lift(const FieldEmbedding& embedding) const {
  if (embedding.small()->q() != field_->q()) throw ValidationError("embedding source field mismatch");
  FqMatrix r(embedding.large(), rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = embedding(a_[i]);
  return r;
}

Poly char_poly(const FqMatrix& g) {
  if (g.rows() != g.cols()) throw ValidationError("characteristic polynomial of a non-square matrix");
  const FiniteField& F = *g.field();
  const int n = g.rows();
  FqMatrix h = g;
  // similarity transforms to upper Hessenberg form
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i) {
      if (h(i, j) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (int r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const Fq inv = F.inv(h(j + 1, j));
    for (int i = j + 2; i < n; ++i) {
      if (h(i, j) == 0) continue;
      const Fq m = F.mul(h(i, j), inv);
      for (int c = 0; c < n; ++c) h(i, c) = F.sub(h(i, c), F.mul(m, h(j + 1, c)));
      for (int r = 0; r < n; ++r) h(r, j + 1) = F.add(h(r, j + 1), F.mul(m, h(r, i)));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{m=i+1}^{k} h_{m,m-1}) p_{i-1}
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (int k = 1; k <= n; ++k) {
    p[k] = poly::mul(F, {F.neg(h(k - 1, k - 1)), 1}, p[k - 1]);
    Fq prod = 1;
    for (int i = k - 1; i >= 1; --i) {
      prod = F.mul(prod, h(i, i - 1));
      if (prod == 0) break;
      const Fq c = F.mul(h(i - 1, k - 1), prod);
      p[k] = poly::sub(F, p[k], poly::scale(F, p[i - 1], c));
    }
  }
  return p[n];
}

FqMatrix evaluate(const Poly& f, const FqMatrix& g) {
  const int n = g.rows();
  FqMatrix acc(g.field(), n, n);
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * g;
    for (int d = 0; d < n; ++d) acc(d, d) = g.field()->add(acc(d, d), f[i]);
  }
  return acc;
}

int eig_dim(const FqMatrix& g, Fq lambda) {
  FqMatrix m = g;
  for (int i = 0; i < g.rows(); ++i) m(i, i) = g.field()->sub(m(i, i), lambda);
  return m.nullity();
}

SupportDetail support_detail(const FqMatrix& g, std::uint64_t seed) {
  const FiniteField& F = *g.field();
  const Factorization fac = factor(F, char_poly(g), seed);
  SupportDetail out;
  int best = 0;
  for (const auto& f : fac.factors) {
    SupportFactor s;
    s.factor = f;
    s.kernel_dim = evaluate(f.f, g).nullity();
    const int deg = poly::degree(f.f);
    if (s.kernel_dim % deg != 0) throw InvariantError("kernel dimension not divisible by factor degree");
    s.per_root = s.kernel_dim / deg;
    best = std::max(best, s.per_root);
    out.factors.push_back(std::move(s));
  }
  out.support = g.rows() - best;
  return out;
}

int support(const FqMatrix& g, std::uint64_t seed) { return support_detail(g, seed).support; }

std::string to_hex(const FqMatrix& m) {
  int width = 1;
  for (std::uint32_t x = m.field()->q() - 1; x >= 16; x /= 16) ++width;
  std::ostringstream os;
  static const char* digits = "0123456789abcdef";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      std::string cell(width, '0');
      Fq x = m(i, j);
      for (int k = width; k-- > 0; x /= 16) cell[k] = digits[x % 16];
      os << cell;
    }
    os << '\n';
  }
  return os.str();
}

FqMatrix from_hex(FieldPtr field, const std::string& text) {
  std::vector<std::vector<Fq>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    std::vector<Fq> row;
    while (ls >> tok) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(tok, &used, 16);
      } catch (const std::exception&) {
        throw ValidationError("bad hex entry '" + tok + "'");
      }
      if (used != tok.size() || v >= field->q()) throw ValidationError("bad hex entry '" + tok + "'");
      row.push_back(static_cast<Fq>(v));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ValidationError("empty matrix text");
  FqMatrix m(field, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols()) throw ValidationError("ragged matrix text");
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace mckay
