#pragma once

// Reference computations written directly from the definitions. They share
// only the Rational type and the structure-constant accessor with the library.

#include "quadlie/quadlie.hpp"

#include <vector>

namespace oracle {

using quadlie::LieAlgebra;
using quadlie::Rational;
using Mat = std::vector<std::vector<Rational>>;
using Vec = std::vector<Rational>;

inline Mat to_mat(const quadlie::Matrix& m) {
  Mat out(m.rows(), Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

/// Rank by plain Gaussian elimination.
inline std::size_t rank(Mat a) {
  std::size_t r = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank_of(const std::vector<Vec>& vs) { return rank(Mat(vs.begin(), vs.end())); }

inline bool in_span(const std::vector<Vec>& span, const Vec& v) {
  auto with = span;
  with.push_back(v);
  return rank_of(with) == rank_of(span);
}

inline bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  const auto r = rank_of(both);
  return r == rank_of(a) && r == rank_of(b);
}

/// Determinant by cofactor expansion along the first row.
inline Rational leibniz_det(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      Vec row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    Rational term = a[0][c] * leibniz_det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

inline Mat mul(const Mat& a, const Mat& b) {
  Mat out(a.size(), Vec(b.empty() ? 0 : b[0].size(), Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

inline bool is_zero_mat(const Mat& a) {
  for (const auto& r : a)
    for (const auto& x : r)
      if (x != 0) return false;
  return true;
}

/// [x, y] = Σ x_i y_j c^k_ij.
inline Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y) {
  const std::size_t n = g.dim();
  Vec out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * g.constant(i, j, k);
    }
  }
  return out;
}

inline Vec unit(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

inline Mat ad_matrix(const LieAlgebra& g, const Vec& x) {
  const std::size_t n = g.dim();
  Mat m(n, Vec(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = oracle::bracket(g, x, unit(n, j));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

/// M^n = 0 for an n×n matrix M.
inline bool is_nilpotent_matrix(const Mat& m) {
  Mat p = m;
  for (std::size_t i = 1; i < m.size(); ++i) p = mul(p, m);
  return is_zero_mat(p);
}

/// Jacobi identity on all basis triples, with anti-symmetry of the table.
inline bool satisfies_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.constant(i, j, k) != -g.constant(j, i, k)) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        Vec ea = unit(n, a), eb = unit(n, b), ec = unit(n, c);
        Vec s1 = oracle::bracket(g, oracle::bracket(g, ea, eb), ec);
        Vec s2 = oracle::bracket(g, oracle::bracket(g, eb, ec), ea);
        Vec s3 = oracle::bracket(g, oracle::bracket(g, ec, ea), eb);
        for (std::size_t k = 0; k < n; ++k)
          if (s1[k] + s2[k] + s3[k] != 0) return false;
      }
  return true;
}

inline Rational form(const Mat& gram, const Vec& x, const Vec& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) s += x[i] * gram[i][j] * y[j];
  }
  return s;
}

/// Symmetric, nondegenerate and B([x,y],z) = B(x,[y,z]) on basis triples.
inline bool is_invariant_metric(const LieAlgebra& g, const quadlie::Matrix& gram_matrix) {
  const std::size_t n = g.dim();
  Mat gram = to_mat(gram_matrix);
  if (gram.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (gram[i][j] != gram[j][i]) return false;
  if (rank(gram) != n) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vec ea = unit(n, a), eb = unit(n, b), ec = unit(n, c);
        if (oracle::form(gram, oracle::bracket(g, ea, eb), ec) != oracle::form(gram, ea, oracle::bracket(g, eb, ec))) return false;
      }
  return true;
}

}  // namespace oracle
