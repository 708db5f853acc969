#pragma once

// Lie algebras given by structure constants on a fixed basis.

#include "quadlie/exactla.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace quadlie {

struct BracketTerm {
  std::size_t k;
  Rational c;
};

/// [e_i, e_j] for i < j, listed sparsely.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  std::vector<BracketTerm> terms;
};

/// A Lie algebra presented by structure constants [e_i, e_j] = Σ c^k_{ij} e_k.
/// Only i < j is ever written; [e_j, e_i] is the negation and [e_i, e_i] = 0.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {})
      : dim_(dim), labels_(std::move(labels)), table_(dim * dim * dim, Rational(0)) {
    if (labels_.empty())
      for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
    if (labels_.size() != dim) throw error("LieAlgebra: label count does not match dimension");
  }

  static LieAlgebra abelian(std::size_t dim) { return LieAlgebra(dim); }

  /// Sets [e_i, e_j] = value. Setting (j, i) stores the negation.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value) {
    if (i >= dim_ || j >= dim_) throw error("set_bracket: index out of range");
    if (value.size() != dim_) throw error("set_bracket: vector length mismatch");
    if (i == j) {
      if (!is_zero(value)) throw error("set_bracket: [e_i, e_i] must vanish");
      return;
    }
    for (std::size_t k = 0; k < dim_; ++k) {
      at(i, j, k) = value[k];
      at(j, i, k) = -value[k];
    }
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim_ + j) * dim_ + k];
  }

  /// [e_i, e_j] as a coordinate vector.
  Vector basis_bracket(std::size_t i, std::size_t j) const {
    Vector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = constant(i, j, k);
    return v;
  }

  std::vector<BracketEntry> brackets() const {
    std::vector<BracketEntry> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j) {
        BracketEntry e{i, j, {}};
        for (std::size_t k = 0; k < dim_; ++k)
          if (constant(i, j, k) != 0) e.terms.push_back({k, constant(i, j, k)});
        if (!e.terms.empty()) out.push_back(std::move(e));
      }
    return out;
  }

  bool is_abelian() const {
    return std::all_of(table_.begin(), table_.end(), [](const Rational& x) { return x == 0; });
  }

  /// Equality of structure constants; labels are ignored.
  bool same_structure(const LieAlgebra& other) const {
    return dim_ == other.dim_ && table_ == other.table_;
  }

 private:
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return table_[(i * dim_ + j) * dim_ + k]; }

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> table_;
};

/// A linear map between coordinate spaces; column j is the image of e_j.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix m) : matrix_(std::move(m)) {}
  LinearMap(std::size_t source_dim, std::size_t target_dim) : matrix_(target_dim, source_dim) {}

  std::size_t source_dim() const { return matrix_.cols(); }
  std::size_t target_dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  Vector operator()(const Vector& x) const { return matrix_ * x; }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  Matrix matrix_;
};

inline void check_length(const LieAlgebra& g, const Vector& x, const char* where) {
  if (x.size() != g.dim()) throw error(std::string(where) + ": vector length does not match algebra dimension");
}

inline Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y) {
  check_length(g, x, "bracket");
  check_length(g, y, "bracket");
  const std::size_t n = g.dim();
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0 || i == j) continue;
      Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (g.constant(i, j, k) != 0) out[k] += w * g.constant(i, j, k);
    }
  }
  return out;
}

struct JacobiViolation {
  std::size_t i, j, k;
  Vector residual;
};

/// Jacobiator [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] on all i<j<k.
inline std::vector<JacobiViolation> check_jacobi(const LieAlgebra& g) {
  std::vector<JacobiViolation> out;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector r = bracket(g, g.basis_bracket(i, j), ek) + bracket(g, g.basis_bracket(j, k), ei) +
                   bracket(g, g.basis_bracket(k, i), ej);
        if (!is_zero(r)) out.push_back({i, j, k, std::move(r)});
      }
  return out;
}

/// Matrix of y ↦ [x, y].
inline LinearMap ad(const LieAlgebra& g, const Vector& x) {
  check_length(g, x, "ad");
  const std::size_t n = g.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = bracket(g, x, unit_vector(n, j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return LinearMap(std::move(m));
}

/// span{[u, w] : u in U, w in W}.
inline Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& w) {
  std::vector<Vector> gens;
  auto us = u.vectors();
  auto ws = w.vectors();
  for (const auto& a : us)
    for (const auto& b : ws) {
      Vector c = bracket(g, a, b);
      if (!is_zero(c)) gens.push_back(std::move(c));
    }
  return Subspace::span(g.dim(), gens);
}

inline Subspace derived_subalgebra(const LieAlgebra& g) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Vector c = g.basis_bracket(i, j);
      if (!is_zero(c)) gens.push_back(std::move(c));
    }
  return Subspace::span(g.dim(), gens);
}

/// g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ ... up to and including the first repeat.
inline std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::full(g.dim())};
  while (true) {
    Subspace next = bracket_span(g, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

/// g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ... up to stabilization.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  Subspace whole = Subspace::full(g.dim());
  std::vector<Subspace> series{whole};
  while (true) {
    Subspace next = bracket_span(g, whole, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

inline bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().is_zero(); }
inline bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().is_zero(); }

/// {x : [x, u] = 0 for all u in U}.
inline Subspace centralizer(const LieAlgebra& g, const Subspace& u) {
  if (u.ambient_dim() != g.dim()) throw error("centralizer: ambient mismatch");
  if (u.is_zero()) return Subspace::full(g.dim());
  Matrix stacked(0, g.dim());
  for (const auto& v : u.vectors()) stacked = vstack(stacked, ad(g, v).matrix());
  return kernel(stacked);
}

inline Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::full(g.dim())); }

inline bool is_ideal(const LieAlgebra& g, const Subspace& u) {
  if (u.ambient_dim() != g.dim()) throw error("is_ideal: ambient mismatch");
  for (const auto& v : u.vectors())
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (!u.contains(bracket(g, unit_vector(g.dim(), i), v))) return false;
  return true;
}

inline bool is_subalgebra(const LieAlgebra& g, const Subspace& u) {
  if (u.ambient_dim() != g.dim()) throw error("is_subalgebra: ambient mismatch");
  auto vs = u.vectors();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!u.contains(bracket(g, vs[a], vs[b]))) return false;
  return true;
}

/// Smallest ideal containing the given vectors. Each pass either grows the
/// span or stops, so at most dim passes are needed.
inline Subspace ideal_generated_by(const LieAlgebra& g, const std::vector<Vector>& vectors) {
  Subspace current = Subspace::span(g.dim(), vectors);
  for (std::size_t pass = 0; pass <= g.dim(); ++pass) {
    Subspace next = sum(current, bracket_span(g, Subspace::full(g.dim()), current));
    if (next == current) return current;
    current = std::move(next);
  }
  throw internal_error("ideal closure did not stabilize");
}

/// Structure constants of the subalgebra spanned by the given independent
/// vectors, in that basis.
inline LieAlgebra subalgebra_on(const LieAlgebra& g, const std::vector<Vector>& basis,
                                std::vector<std::string> labels = {}) {
  const std::size_t k = basis.size();
  Matrix cols = Matrix::from_columns(basis, g.dim());
  LieAlgebra s(k, std::move(labels));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      auto c = solve(cols, bracket(g, basis[i], basis[j]));
      if (!c) throw error("subalgebra_on: span is not closed under the bracket");
      s.set_bracket(i, j, *c);
    }
  return s;
}

/// Labels for a subspace's rref basis: the original label when a basis row is
/// a standard basis vector, otherwise prefix + index.
inline std::vector<std::string> subspace_labels(const LieAlgebra& g, const Subspace& u, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < u.dim(); ++r) {
    Vector row = u.basis().row(r);
    std::size_t nonzero = 0;
    for (const auto& x : row) nonzero += (x != 0);
    if (nonzero == 1)
      labels.push_back(g.label(u.pivots()[r]));
    else
      labels.push_back(prefix + std::to_string(r + 1));
  }
  return labels;
}

/// The subalgebra U on its rref basis.
inline LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& u) {
  return subalgebra_on(g, u.vectors(), subspace_labels(g, u, "b"));
}

/// Same algebra on the basis given by the columns of p (new f_j = Σ_i p_ij e_i).
inline LieAlgebra transport(const LieAlgebra& g, const Matrix& p) {
  if (!p.is_square() || p.rows() != g.dim()) throw error("transport: base change has the wrong size");
  auto pinv = inverse(p);
  if (!pinv) throw error("transport: base change is singular");
  auto cols = p.col_vectors();
  LieAlgebra t(g.dim(), g.labels());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) t.set_bracket(i, j, *pinv * bracket(g, cols[i], cols[j]));
  return t;
}

struct Quotient {
  LieAlgebra algebra;
  LinearMap projection;  // g → g/I in the quotient basis
};

/// g/I on the basis of images of e_c, c ranging over the non-pivot coordinates
/// of I's rref basis.
inline Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (ideal.ambient_dim() != g.dim()) throw error("quotient: ambient mismatch");
  if (!is_ideal(g, ideal)) throw error("quotient: subspace is not an ideal");
  const auto keep = ideal.non_pivots();
  const std::size_t q = keep.size();
  Matrix proj(q, g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    Vector r = ideal.reduce(unit_vector(g.dim(), j));
    for (std::size_t a = 0; a < q; ++a) proj(a, j) = r[keep[a]];
  }
  std::vector<std::string> labels;
  for (auto c : keep) labels.push_back(g.label(c));
  LieAlgebra h(q, std::move(labels));
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) h.set_bracket(a, b, proj * g.basis_bracket(keep[a], keep[b]));
  return {std::move(h), LinearMap(std::move(proj))};
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  LieAlgebra s(n, std::move(labels));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vector v = zero_vector(n);
      for (std::size_t k = 0; k < a.dim(); ++k) v[k] = a.constant(i, j, k);
      s.set_bracket(i, j, v);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      Vector v = zero_vector(n);
      for (std::size_t k = 0; k < b.dim(); ++k) v[a.dim() + k] = b.constant(i, j, k);
      s.set_bracket(a.dim() + i, a.dim() + j, v);
    }
  return s;
}

/// K_ij = trace(ad(e_i) ad(e_j)).
inline Matrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad(g, unit_vector(n, i)).matrix());
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational t = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t += ads[i](a, b) * ads[j](b, a);
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

}  // namespace quadlie
