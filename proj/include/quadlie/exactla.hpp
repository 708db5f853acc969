#pragma once

// Exact linear algebra over the rationals: dense matrices, row reduction,
// linear solves, kernels and a subspace type whose canonical representative
// is the reduced row-echelon form of a row basis.

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quadlie {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using Vector = std::vector<Rational>;

/// Raised for invalid input and violated preconditions.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a step that is guaranteed to succeed on validated input fails.
/// Seeing one means the input validation or the implementation is wrong.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what)
      : std::logic_error("internal error: " + what) {}
};

inline void ensure(bool condition, const char* what) {
  if (!condition) throw internal_error(what);
}

/// p/q in canonical form. Avoids the (num, den) constructor, which does not
/// handle negative denominators.
inline Rational rat(long p, long q = 1) {
  if (q == 0) throw error("zero denominator");
  return Rational(p) / Rational(q);
}

inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses "p" or "p/q" (grammar -?[0-9]+(/[1-9][0-9]*)?) and insists on the
/// canonical spelling, so that printing a parsed value reproduces the input.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!digits(den) || den.front() == '0')
      throw error("malformed rational \"" + std::string(text) + "\"");
  }
  std::string_view mag = num;
  if (!mag.empty() && mag.front() == '-') mag.remove_prefix(1);
  if (!digits(mag)) throw error("malformed rational \"" + std::string(text) + "\"");
  Rational value = Rational(Integer(std::string(num)));
  if (!den.empty()) value /= Rational(Integer(std::string(den)));
  if (value.str() != text) throw error("non-canonical rational \"" + std::string(text) + "\"");
  return value;
}

inline Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

inline Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw error("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw error("vector +: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw error("vector -: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vector operator*(const Rational& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw error("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const Vector& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw error("from_rows: length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    return from_rows(cols, rows).transpose();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  Vector col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<Vector> row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }
  std::vector<Vector> col_vectors() const {
    std::vector<Vector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
  }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }
  bool is_skew() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  /// Submatrix of the given row and column index lists.
  Matrix select(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    Matrix m(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) m(i, j) = (*this)(row_idx[i], col_idx[j]);
    return m;
  }

  /// Row-major entries, used to treat a matrix as a vector.
  const std::vector<Rational>& entries() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("matrix +: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("matrix -: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const Rational& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw error("matrix *: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols_ != x.size()) throw error("matrix-vector *: shape mismatch");
    Vector y = zero_vector(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (x[j] != 0) y[i] += a(i, j) * x[j];
    return y;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline Rational trace(const Matrix& m) {
  if (!m.is_square()) throw error("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Stacks a above b.
inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw error("vstack: column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

/// Block diagonal matrix diag(a, b).
inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

struct RowEchelon {
  Matrix reduced;                   // zero rows kept at the bottom
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row-echelon form.
inline RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

inline Rational determinant(Matrix m) {
  if (!m.is_square()) throw error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Inverse that treats singularity as a broken guarantee.
inline Matrix checked_inverse(const Matrix& m, const char* what) {
  auto inv = inverse(m);
  ensure(inv.has_value(), what);
  return *inv;
}

/// Some x with A x = b, or nullopt when the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw error("solve: right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RowEchelon e = rref(std::move(aug));
  Vector x = zero_vector(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

/// A subspace of F^n stored as the nonzero rows of the rref of any spanning
/// set. Two subspaces are equal iff these matrices are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient) { return from_rows(Matrix::identity(ambient)); }

  static Subspace from_rows(const Matrix& rows) {
    Subspace s(rows.cols());
    RowEchelon e = rref(rows);
    s.basis_ = Matrix(e.pivots.size(), rows.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      for (std::size_t j = 0; j < rows.cols(); ++j) s.basis_(i, j) = e.reduced(i, j);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors) {
    if (vectors.empty()) return Subspace(ambient);
    return from_rows(Matrix::from_rows(vectors, ambient));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Matrix& basis() const { return basis_; }
  std::vector<Vector> vectors() const { return basis_.row_vectors(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<std::size_t> non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (p < pivots_.size() && pivots_[p] == c) {
        ++p;
        continue;
      }
      out.push_back(c);
    }
    return out;
  }

  /// v minus its pivot components; zero iff v lies in the subspace.
  Vector reduce(Vector v) const {
    if (v.size() != ambient_) throw error("subspace: vector length mismatch");
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      Rational f = v[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * basis_(r, j);
    }
    return v;
  }

  bool contains(const Vector& v) const { return quadlie::is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw error("subspace: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  /// Coordinates of v in the rref basis, or nullopt if v is not in the span.
  std::optional<Vector> coordinates(const Vector& v) const {
    if (!contains(v)) return std::nullopt;
    Vector c(pivots_.size());
    for (std::size_t r = 0; r < pivots_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : A x = 0}.
inline Subspace kernel(const Matrix& a) {
  RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x = zero_vector(a.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(r, f);
    gens.push_back(std::move(x));
  }
  return Subspace::span(a.cols(), gens);
}

/// Column space of a.
inline Subspace image(const Matrix& a) { return Subspace::from_rows(a.transpose()); }

/// Linear functionals vanishing on U, as a subspace of the dual.
inline Subspace annihilator(const Subspace& u) {
  if (u.is_zero()) return Subspace::full(u.ambient_dim());
  return kernel(u.basis());
}

inline Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw error("subspace sum: ambient mismatch");
  return Subspace::from_rows(vstack(u.basis(), w.basis()));
}

inline Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw error("subspace intersection: ambient mismatch");
  Matrix constraints = vstack(annihilator(u).basis(), annihilator(w).basis());
  if (constraints.rows() == 0) return Subspace::full(u.ambient_dim());
  return kernel(constraints);
}

/// (U + W, U ∩ W).
inline std::pair<Subspace, Subspace> sum_intersect(const Subspace& u, const Subspace& w) {
  return {sum(u, w), intersect(u, w)};
}

/// Greedily picks rows of whole's rref basis that extend part to a basis of
/// whole. part must lie inside whole.
inline std::vector<Vector> complement_in(const Subspace& whole, const Subspace& part) {
  if (!whole.contains(part)) throw error("complement_in: part is not contained in whole");
  std::vector<Vector> chosen;
  Subspace acc = part;
  for (const auto& v : whole.vectors()) {
    if (acc.contains(v)) continue;
    chosen.push_back(v);
    acc = sum(acc, Subspace::span(whole.ambient_dim(), {v}));
  }
  return chosen;
}

/// Gram matrix of G on the given vectors: entry (i, j) = v_iᵀ G v_j.
inline Matrix restrict_form(const Matrix& g, const std::vector<Vector>& vs) {
  Matrix m(vs.size(), vs.size());
  std::vector<Vector> gv;
  gv.reserve(vs.size());
  for (const auto& v : vs) gv.push_back(g * v);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) m(i, j) = dot(vs[i], gv[j]);
  return m;
}

/// U^⊥ = {x : xᵀ G u = 0 for all u in U}.
inline Subspace form_orthogonal(const Matrix& g, const Subspace& u) {
  if (!g.is_square() || g.rows() != u.ambient_dim()) throw error("form_orthogonal: size mismatch");
  if (u.is_zero()) return Subspace::full(u.ambient_dim());
  return kernel(u.basis() * g.transpose());
}

/// Whether G restricted to U is nondegenerate.
inline bool form_restrict_nondegenerate(const Matrix& g, const Subspace& u) {
  if (!g.is_square() || g.rows() != u.ambient_dim())
    throw error("form_restrict_nondegenerate: size mismatch");
  return determinant(restrict_form(g, u.vectors())) != 0;
}

}  // namespace quadlie
