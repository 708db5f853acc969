#pragma once

// Constructors: Heisenberg algebras, their extensions by a derivation, double
// extensions, the Heisenberg-ideal builder and the coadjoint double.
//
// Basis order for built algebras is (S-basis..., d, V-basis..., hbar).

#include "quadlie/quadform.hpp"

#include <string>
#include <vector>

namespace quadlie {

/// Standard symplectic form [[0, I_m], [-I_m, 0]].
inline Matrix standard_symplectic(std::size_t m) {
  Matrix w(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    w(i, m + i) = 1;
    w(m + i, i) = -1;
  }
  return w;
}

/// V = F^{2m} with a nondegenerate skew form ω.
class SymplecticSpace {
 public:
  SymplecticSpace() = default;
  explicit SymplecticSpace(Matrix omega) : omega_(std::move(omega)) {
    if (!omega_.is_square() || omega_.rows() % 2 != 0) throw error("omega must be a square matrix of even size");
    if (!omega_.is_skew()) throw error("omega must be skew-symmetric");
    if (determinant(omega_) == 0) throw error("omega must be nondegenerate");
  }
  static SymplecticSpace standard(std::size_t m) { return SymplecticSpace(standard_symplectic(m)); }

  std::size_t dim() const { return omega_.rows(); }
  std::size_t m() const { return omega_.rows() / 2; }
  const Matrix& omega() const { return omega_; }

 private:
  Matrix omega_;
};

/// Whether fᵀω + ωf = 0, i.e. ω(f u, v) = -ω(u, f v).
inline bool in_symplectic_algebra(const Matrix& f, const Matrix& omega) {
  if (!f.is_square() || f.rows() != omega.rows()) return false;
  return (f.transpose() * omega + omega * f).is_zero();
}

/// An endomorphism of V lying in 𝔬(ω).
class SymplecticMap {
 public:
  SymplecticMap(const SymplecticSpace& v, Matrix f) : matrix_(std::move(f)) {
    if (!matrix_.is_square() || matrix_.rows() != v.dim()) throw error("symplectic map has the wrong size");
    if (!in_symplectic_algebra(matrix_, v.omega())) throw error("map must lie in o(omega)");
  }
  const Matrix& matrix() const { return matrix_; }
  bool is_invertible() const { return determinant(matrix_) != 0; }

 private:
  Matrix matrix_;
};

inline std::vector<std::string> heisenberg_labels(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < 2 * m; ++i) labels.push_back("u" + std::to_string(i + 1));
  labels.push_back("hbar");
  return labels;
}

/// h_m on (u_1..u_2m, hbar) with [u_i, u_j] = ω_ij hbar.
inline LieAlgebra heisenberg(std::size_t m, const std::optional<Matrix>& omega = std::nullopt) {
  if (m == 0) throw error("heisenberg: m must be at least 1");
  SymplecticSpace v(omega ? *omega : standard_symplectic(m));
  if (v.m() != m) throw error("heisenberg: omega must be 2m x 2m");
  const std::size_t n = 2 * m + 1;
  LieAlgebra h(n, heisenberg_labels(m));
  for (std::size_t i = 0; i < 2 * m; ++i)
    for (std::size_t j = i + 1; j < 2 * m; ++j) {
      Vector val = zero_vector(n);
      val[2 * m] = v.omega()(i, j);
      h.set_bracket(i, j, val);
    }
  return h;
}

namespace detail {

inline void require_skew_derivation(const QuadraticLieAlgebra& s, const Matrix& d) {
  const std::size_t n = s.dim();
  if (!d.is_square() || d.rows() != n) throw error("D must be a square matrix of the size of S");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
      Vector lhs = d * s.algebra.basis_bracket(i, j);
      Vector rhs = bracket(s.algebra, d * ei, ej) + bracket(s.algebra, ei, d * ej);
      if (lhs != rhs) throw error("D must be a derivation of S");
    }
  const Matrix& g = s.metric.gram();
  if (!(d.transpose() * g + g * d).is_zero()) throw error("D must be skew-symmetric with respect to the metric of S");
}

/// Writes the S(D) part of a built algebra: S occupies indices [0, k), d is at
/// index k and hbar at index hbar_index.
inline void write_double_extension(LieAlgebra& g, const QuadraticLieAlgebra& s, const Matrix& d,
                                   std::size_t hbar_index) {
  const std::size_t k = s.dim();
  const std::size_t n = g.dim();
  const Matrix& bs = s.metric.gram();
  Matrix bd = bs * d;  // (B_S D)(a, b) = B_S(e_a, D e_b)
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      Vector val = zero_vector(n);
      for (std::size_t l = 0; l < k; ++l) val[l] = s.algebra.constant(i, j, l);
      val[hbar_index] = bd(j, i);  // B_S(D e_i, e_j)
      g.set_bracket(i, j, val);
    }
    Vector di = zero_vector(n);
    for (std::size_t l = 0; l < k; ++l) di[l] = d(l, i);
    g.set_bracket(k, i, di);
  }
}

}  // namespace detail

/// h_m(φ) on (d, u_1..u_2m, hbar): [d, u] = φ(u), [u, v] = ω(u, v) hbar, with
/// B(u, v) = ω(φ⁻¹u, v) and B(d, hbar) = 1.
inline QuadraticLieAlgebra extend_heisenberg(std::size_t m, const Matrix& omega, const Matrix& phi) {
  if (m == 0) throw error("extend_heisenberg: m must be at least 1");
  SymplecticSpace v(omega);
  if (v.m() != m) throw error("extend_heisenberg: omega must be 2m x 2m");
  if (!phi.is_square() || phi.rows() != 2 * m) throw error("phi must be a 2m x 2m matrix");
  auto phi_inv = inverse(phi);
  if (!phi_inv) throw error("phi must be invertible on V");
  if (!in_symplectic_algebra(phi, omega)) throw error("phi must lie in o(omega)");

  const std::size_t n = 2 * m + 2;
  const std::size_t hbar = n - 1;
  std::vector<std::string> labels{"d"};
  for (auto& l : heisenberg_labels(m)) labels.push_back(l);
  LieAlgebra g(n, std::move(labels));
  for (std::size_t j = 0; j < 2 * m; ++j) {
    Vector val = zero_vector(n);
    for (std::size_t i = 0; i < 2 * m; ++i) val[1 + i] = phi(i, j);
    g.set_bracket(0, 1 + j, val);
    for (std::size_t i = 0; i < j; ++i) {
      Vector w = zero_vector(n);
      w[hbar] = omega(i, j);
      g.set_bracket(1 + i, 1 + j, w);
    }
  }
  Matrix gram(n, n);
  Matrix bv = phi_inv->transpose() * omega;
  for (std::size_t i = 0; i < 2 * m; ++i)
    for (std::size_t j = 0; j < 2 * m; ++j) gram(1 + i, 1 + j) = bv(i, j);
  gram(0, hbar) = 1;
  gram(hbar, 0) = 1;
  return {std::move(g), BilinearForm(std::move(gram))};
}

/// S(D) on (S-basis..., d, hbar): [d, x] = D(x), [x, y] = [x, y]_S + B_S(D x, y) hbar,
/// metric B_S extended by B(d, hbar) = 1.
inline QuadraticLieAlgebra double_extension(const QuadraticLieAlgebra& s, const Matrix& d) {
  detail::require_skew_derivation(s, d);
  const std::size_t k = s.dim();
  const std::size_t n = k + 2;
  std::vector<std::string> labels = s.algebra.labels();
  labels.push_back("d");
  labels.push_back("hbar");
  LieAlgebra g(n, std::move(labels));
  detail::write_double_extension(g, s, d, n - 1);
  Matrix gram = block_diagonal(s.metric.gram(), Matrix(2, 2));
  gram(k, k + 1) = 1;
  gram(k + 1, k) = 1;
  return {std::move(g), BilinearForm(std::move(gram))};
}

/// The algebra S ⊕ Fd ⊕ V ⊕ Fhbar carrying S(D), [d, u] = σ(D)(u),
/// [u, v] = ω(u, v) hbar, [S, V] = 0, and metric B_{S(D)} ⊥ B_V with
/// B_V(u, v) = ω(σ(D)⁻¹ u, v). V ⊕ Fhbar is an ideal isomorphic to h_m.
inline QuadraticLieAlgebra build_with_heisenberg_ideal(const QuadraticLieAlgebra& s, const Matrix& d,
                                                       const SymplecticSpace& v, const Matrix& sigma_d) {
  detail::require_skew_derivation(s, d);
  if (v.dim() == 0) throw error("V must be nonzero");
  SymplecticMap sigma(v, sigma_d);
  auto sigma_inv = inverse(sigma.matrix());
  if (!sigma_inv) throw error("sigma(D) must be invertible");

  const std::size_t k = s.dim();
  const std::size_t m2 = v.dim();
  const std::size_t n = k + m2 + 2;
  const std::size_t di = k;
  const std::size_t hbar = n - 1;
  std::vector<std::string> labels = s.algebra.labels();
  labels.push_back("d");
  for (std::size_t i = 0; i < m2; ++i) labels.push_back("u" + std::to_string(i + 1));
  labels.push_back("hbar");
  LieAlgebra g(n, std::move(labels));
  detail::write_double_extension(g, s, d, hbar);
  const Matrix& omega = v.omega();
  for (std::size_t j = 0; j < m2; ++j) {
    Vector val = zero_vector(n);
    for (std::size_t i = 0; i < m2; ++i) val[di + 1 + i] = sigma_d(i, j);
    g.set_bracket(di, di + 1 + j, val);
    for (std::size_t i = 0; i < j; ++i) {
      Vector w = zero_vector(n);
      w[hbar] = omega(i, j);
      g.set_bracket(di + 1 + i, di + 1 + j, w);
    }
  }
  Matrix gram(n, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = s.metric.gram()(i, j);
  gram(di, hbar) = 1;
  gram(hbar, di) = 1;
  Matrix bv = sigma_inv->transpose() * omega;
  ensure(bv.is_symmetric(), "B_V is not symmetric for sigma(D) in o(omega)");
  for (std::size_t i = 0; i < m2; ++i)
    for (std::size_t j = 0; j < m2; ++j) gram(di + 1 + i, di + 1 + j) = bv(i, j);
  return {std::move(g), BilinearForm(std::move(gram))};
}

/// g ⊕ g* with [x + ζ, y + ν] = [x, y] + ad*(x)ν - ad*(y)ζ and the hyperbolic
/// metric B(x + ζ, y + ν) = ζ(y) + ν(x). Basis (e_1..e_n, e^1..e^n).
inline QuadraticLieAlgebra coadjoint_double(const LieAlgebra& g) {
  if (!check_jacobi(g).empty()) throw error("coadjoint_double: input violates the Jacobi identity");
  const std::size_t n = g.dim();
  std::vector<std::string> labels = g.labels();
  for (const auto& l : g.labels()) labels.push_back(l + "*");
  LieAlgebra t(2 * n, std::move(labels));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector val = zero_vector(2 * n);
      for (std::size_t k = 0; k < n; ++k) val[k] = g.constant(i, j, k);
      t.set_bracket(i, j, val);
    }
    // ad*(e_i)(e^j) = -e^j ∘ ad(e_i) = -Σ_k c^j_{ik} e^k
    for (std::size_t j = 0; j < n; ++j) {
      Vector val = zero_vector(2 * n);
      for (std::size_t k = 0; k < n; ++k) val[n + k] = -g.constant(i, k, j);
      t.set_bracket(i, n + j, val);
    }
  }
  Matrix gram(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    gram(i, n + i) = 1;
    gram(n + i, i) = 1;
  }
  return {std::move(t), BilinearForm(std::move(gram))};
}

}  // namespace quadlie
