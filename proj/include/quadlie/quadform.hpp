#pragma once

// Invariant metrics on Lie algebras.

#include "quadlie/liealg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quadlie {

/// Symmetric bilinear form given by its Gram matrix on the algebra's basis.
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw error("bilinear form: Gram matrix must be square");
    if (!gram_.is_symmetric()) throw error("bilinear form: Gram matrix must be symmetric");
  }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Rational operator()(const Vector& x, const Vector& y) const { return dot(x, gram_ * y); }
  bool is_nondegenerate() const { return determinant(gram_) != 0; }

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  Matrix gram_;
};

/// A Lie algebra together with an invariant metric. The pairing is not
/// validated on construction; use check_invariant_metric.
struct QuadraticLieAlgebra {
  LieAlgebra algebra;
  BilinearForm metric;

  std::size_t dim() const { return algebra.dim(); }
};

struct MetricViolation {
  enum class Kind { SizeMismatch, NotSymmetric, Degenerate, NotInvariant };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;
};

inline std::string to_string(MetricViolation::Kind k) {
  switch (k) {
    case MetricViolation::Kind::SizeMismatch: return "size_mismatch";
    case MetricViolation::Kind::NotSymmetric: return "not_symmetric";
    case MetricViolation::Kind::Degenerate: return "degenerate";
    case MetricViolation::Kind::NotInvariant: return "not_invariant";
  }
  return "unknown";
}

/// Symmetry, nondegeneracy, and B([e_i,e_j],e_k) = B(e_i,[e_j,e_k]) on every
/// basis triple. Empty result means gram is an invariant metric.
inline std::vector<MetricViolation> check_invariant_metric(const LieAlgebra& g, const Matrix& gram) {
  using K = MetricViolation::Kind;
  std::vector<MetricViolation> out;
  const std::size_t n = g.dim();
  if (!gram.is_square() || gram.rows() != n) {
    out.push_back({K::SizeMismatch});
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram(i, j) != gram(j, i)) out.push_back({K::NotSymmetric, i, j, 0});
  if (determinant(gram) == 0) out.push_back({K::Degenerate});
  // B([e_i,e_j],e_k) = Σ_l c^l_ij G_lk and B(e_i,[e_j,e_k]) = Σ_l G_il c^l_jk.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational lhs = 0, rhs = 0;
        for (std::size_t l = 0; l < n; ++l) {
          if (g.constant(i, j, l) != 0) lhs += g.constant(i, j, l) * gram(l, k);
          if (g.constant(j, k, l) != 0) rhs += gram(i, l) * g.constant(j, k, l);
        }
        if (lhs != rhs) out.push_back({K::NotInvariant, i, j, k});
      }
  return out;
}

inline std::vector<MetricViolation> check_invariant_metric(const LieAlgebra& g, const BilinearForm& b) {
  return check_invariant_metric(g, b.gram());
}

inline std::vector<MetricViolation> check_invariant_metric(const QuadraticLieAlgebra& q) {
  return check_invariant_metric(q.algebra, q.metric.gram());
}

/// B♭(x) = B(x, ·) as a covector.
inline Vector flat(const BilinearForm& b, const Vector& x) { return b.gram() * x; }

/// Inverse of flat; requires B nondegenerate.
inline Vector sharp(const BilinearForm& b, const Vector& alpha) {
  auto inv = inverse(b.gram());
  if (!inv) throw error("sharp: bilinear form is degenerate");
  return *inv * alpha;
}

inline Subspace orthogonal_in(const QuadraticLieAlgebra& q, const Subspace& u) {
  return form_orthogonal(q.metric.gram(), u);
}

/// Basis of the space of symmetric invariant forms. Unknowns are the n(n+1)/2
/// upper-triangle entries; each basis triple contributes one linear equation.
inline std::vector<BilinearForm> invariant_symmetric_forms(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto idx = [n](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return a * n - a * (a + 1) / 2 + b;
  };
  const std::size_t unknowns = n * (n + 1) / 2;
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector eq = zero_vector(unknowns);
        for (std::size_t l = 0; l < n; ++l) {
          if (g.constant(i, j, l) != 0) eq[idx(l, k)] += g.constant(i, j, l);
          if (g.constant(j, k, l) != 0) eq[idx(i, l)] -= g.constant(j, k, l);
        }
        if (!is_zero(eq)) rows.push_back(std::move(eq));
      }
  Subspace solutions = rows.empty() ? Subspace::full(unknowns) : kernel(Matrix::from_rows(rows, unknowns));
  std::vector<BilinearForm> forms;
  for (const auto& s : solutions.vectors()) {
    Matrix gram(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        gram(a, b) = s[idx(a, b)];
        gram(b, a) = s[idx(a, b)];
      }
    forms.emplace_back(std::move(gram));
  }
  return forms;
}

/// Same quadratic algebra on the basis given by the columns of p.
inline QuadraticLieAlgebra transport(const QuadraticLieAlgebra& q, const Matrix& p) {
  return {transport(q.algebra, p), BilinearForm(p.transpose() * q.metric.gram() * p)};
}

/// Entry-for-entry equality of structure constants and Gram matrices.
inline bool same_structure(const QuadraticLieAlgebra& a, const QuadraticLieAlgebra& b) {
  return a.algebra.same_structure(b.algebra) && a.metric == b.metric;
}

inline QuadraticLieAlgebra quadratic_direct_sum(const QuadraticLieAlgebra& a, const QuadraticLieAlgebra& b) {
  return {direct_sum(a.algebra, b.algebra), BilinearForm(block_diagonal(a.metric.gram(), b.metric.gram()))};
}

/// The subalgebra U with the restricted metric, on U's rref basis.
inline QuadraticLieAlgebra restrict_quadratic(const QuadraticLieAlgebra& q, const Subspace& u) {
  return {restrict_to(q.algebra, u), BilinearForm(restrict_form(q.metric.gram(), u.vectors()))};
}

/// g = I ⊥ I^⊥ for a nondegenerate ideal I.
struct OrthogonalSplit {
  QuadraticLieAlgebra first;   // I
  QuadraticLieAlgebra second;  // I^⊥
  Matrix base_change;          // columns: rref basis of I, then of I^⊥
};

/// Splits along I when I is an ideal on which the metric is nondegenerate;
/// nullopt otherwise.
inline std::optional<OrthogonalSplit> split_by_nondegenerate_ideal(const QuadraticLieAlgebra& q, const Subspace& ideal) {
  if (ideal.ambient_dim() != q.dim()) throw error("split: ambient mismatch");
  if (!is_ideal(q.algebra, ideal)) return std::nullopt;
  if (!form_restrict_nondegenerate(q.metric.gram(), ideal)) return std::nullopt;
  Subspace perp = orthogonal_in(q, ideal);
  ensure(is_ideal(q.algebra, perp), "orthogonal of an ideal is not an ideal");
  std::vector<Vector> cols = ideal.vectors();
  for (auto& v : perp.vectors()) cols.push_back(std::move(v));
  return OrthogonalSplit{restrict_quadratic(q, ideal), restrict_quadratic(q, perp),
                         Matrix::from_columns(cols, q.dim())};
}

/// Basis of the derivations of q that are skew with respect to its metric.
inline std::vector<Matrix> skew_derivations(const QuadraticLieAlgebra& q) {
  const std::size_t n = q.dim();
  const Matrix& gram = q.metric.gram();
  // Unknown D(a, b) at index a * n + b; D e_b = Σ_a D(a, b) e_a.
  auto var = [n](std::size_t a, std::size_t b) { return a * n + b; };
  std::vector<Vector> rows;
  // D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] = 0, coordinate k.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector eq = zero_vector(n * n);
        for (std::size_t l = 0; l < n; ++l) {
          eq[var(k, l)] += q.algebra.constant(i, j, l);
          eq[var(l, i)] -= q.algebra.constant(l, j, k);
          eq[var(l, j)] -= q.algebra.constant(i, l, k);
        }
        if (!is_zero(eq)) rows.push_back(std::move(eq));
      }
  // (Dᵀ G + G D)_{ij} = 0.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector eq = zero_vector(n * n);
      for (std::size_t l = 0; l < n; ++l) {
        eq[var(l, i)] += gram(l, j);
        eq[var(l, j)] += gram(i, l);
      }
      if (!is_zero(eq)) rows.push_back(std::move(eq));
    }
  Subspace sol = rows.empty() ? Subspace::full(n * n) : kernel(Matrix::from_rows(rows, n * n));
  std::vector<Matrix> out;
  for (const auto& s : sol.vectors()) {
    Matrix d(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) d(a, b) = s[var(a, b)];
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace quadlie
