#pragma once

// Named algebras and seeded random instances shared by the test binaries.

#include "quadlie/quadlie.hpp"

#include <string>
#include <vector>

namespace fixtures {

using namespace quadlie;

inline Matrix rotation() { return Matrix{{0, 1}, {-1, 0}}; }
inline Matrix hyperbolic_phi() { return Matrix{{1, 0}, {0, -1}}; }

inline QuadraticLieAlgebra abelian_quadratic(const Matrix& gram) {
  return {LieAlgebra::abelian(gram.rows()), BilinearForm(gram)};
}

/// sl2 on (e, h, f): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
inline LieAlgebra sl2() {
  LieAlgebra g(3, {"e", "h", "f"});
  g.set_bracket(0, 2, {0, 1, 0});
  g.set_bracket(1, 0, {2, 0, 0});
  g.set_bracket(1, 2, {0, 0, -2});
  return g;
}

inline QuadraticLieAlgebra sl2_killing() {
  LieAlgebra g = sl2();
  Matrix k = killing_form(g);
  return {g, BilinearForm(k)};
}

/// Double extension of abelian Q² (identity gram) by the rotation.
inline QuadraticLieAlgebra oscillator() { return double_extension(abelian_quadratic(Matrix::identity(2)), rotation()); }

inline QuadraticLieAlgebra h1_phi(const Matrix& phi = hyperbolic_phi()) {
  return extend_heisenberg(1, standard_symplectic(1), phi);
}

/// d ⋉ Q⁴ with ad(d) = rotation ⊕ diag(1, -1).
inline LieAlgebra d_semidirect_q4() {
  LieAlgebra g(5, {"d", "x1", "x2", "x3", "x4"});
  Matrix a{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
  for (std::size_t j = 0; j < 4; ++j) {
    Vector v = zero_vector(5);
    for (std::size_t i = 0; i < 4; ++i) v[1 + i] = a(i, j);
    g.set_bracket(0, 1 + j, v);
  }
  return g;
}

/// 2-dim nonabelian algebra [d, x] = x.
inline LieAlgebra affine_line() {
  LieAlgebra g(2, {"d", "x"});
  g.set_bracket(0, 1, {0, 1});
  return g;
}

/// build(S = abelian Q with gram [1], D = 0, V = Q², sigmaD = diag(1,-1)).
inline QuadraticLieAlgebra build_line() {
  return build_with_heisenberg_ideal(abelian_quadratic(Matrix{{1}}), Matrix{{0}}, SymplecticSpace::standard(1),
                                     hyperbolic_phi());
}

/// build(S = sl2 Killing, D = 0, V = Q², sigmaD = diag(1,-1)).
inline QuadraticLieAlgebra build_sl2() {
  return build_with_heisenberg_ideal(sl2_killing(), Matrix(3, 3), SymplecticSpace::standard(1), hyperbolic_phi());
}

/// build(S = abelian Q² identity gram, D = rotation, V = Q², sigmaD = diag(1,-1)).
inline QuadraticLieAlgebra build_plane() {
  return build_with_heisenberg_ideal(abelian_quadratic(Matrix::identity(2)), rotation(), SymplecticSpace::standard(1),
                                     hyperbolic_phi());
}

/// The Heisenberg ideal V ⊕ Fhbar of a built algebra, in build coordinates.
inline HeisenbergIdealData built_ideal(std::size_t s_dim, const Matrix& omega) {
  const std::size_t m2 = omega.rows();
  const std::size_t n = s_dim + m2 + 2;
  HeisenbergIdealData h;
  for (std::size_t i = 0; i < m2; ++i) h.v_basis.push_back(unit_vector(n, s_dim + 1 + i));
  h.hbar = unit_vector(n, n - 1);
  auto all = h.v_basis;
  all.push_back(h.hbar);
  h.ideal = Subspace::span(n, all);
  h.omega = omega;
  return h;
}

/// Inputs and output of one build_with_heisenberg_ideal call.
struct BuildInstance {
  std::string s_kind;
  QuadraticLieAlgebra s;
  Matrix d;
  Matrix omega;
  Matrix sigma;
  QuadraticLieAlgebra q;
  HeisenbergIdealData ideal;
};

inline QuadraticLieAlgebra random_core(Rng& rng, std::string& kind) {
  switch (random_int(rng, 0, 6)) {
    case 0:
      kind = "empty";
      return {LieAlgebra(0), BilinearForm(Matrix(0, 0))};
    case 1: {
      const auto k = static_cast<std::size_t>(random_int(rng, 1, 4));
      kind = "abelian" + std::to_string(k);
      for (;;) {
        Matrix g = random_symmetric(rng, k, 2);
        if (determinant(g) != 0) return abelian_quadratic(g);
      }
    }
    case 2:
      kind = "sl2";
      return sl2_killing();
    case 3:
      kind = "sl2+line";
      return quadratic_direct_sum(sl2_killing(), abelian_quadratic(Matrix{{2}}));
    case 4:
      kind = "oscillator";
      return oscillator();
    case 5: {
      kind = "h1(phi)";
      return h1_phi(random_symplectic_element(rng, standard_symplectic(1), 2));
    }
    default:
      kind = "abelian4-hyperbolic";
      return abelian_quadratic(Matrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  }
}

/// Random build instance: dim S ≤ 4, m ∈ {1, 2}, random skew derivation D,
/// random invertible sigmaD ∈ 𝔬(ω), ω standard or moved by a unimodular matrix.
inline BuildInstance random_build(Rng& rng) {
  BuildInstance b;
  b.s = random_core(rng, b.s_kind);
  if (b.s.dim() > 1 && random_int(rng, 0, 1) == 1) b.s = transport(b.s, random_unimodular(rng, b.s.dim(), 2));
  const std::size_t k = b.s.dim();
  b.d = k == 0 ? Matrix(0, 0) : random_combination(rng, skew_derivations(b.s), k, 2);
  const auto m = static_cast<std::size_t>(random_int(rng, 1, 2));
  b.omega = standard_symplectic(m);
  if (random_int(rng, 0, 1) == 1) {
    Matrix p = random_unimodular(rng, 2 * m, 2);
    b.omega = p.transpose() * b.omega * p;
  }
  b.sigma = random_symplectic_element(rng, b.omega, 3);
  b.q = build_with_heisenberg_ideal(b.s, b.d, SymplecticSpace(b.omega), b.sigma);
  b.ideal = built_ideal(k, b.omega);
  return b;
}

inline std::vector<BuildInstance> random_builds(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<BuildInstance> out;
  for (int i = 0; i < count; ++i) out.push_back(random_build(rng));
  return out;
}

/// Embeds an S-coordinate vector into build coordinates.
inline Vector embed_s(const Vector& x, std::size_t n) {
  Vector v = zero_vector(n);
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i];
  return v;
}

}  // namespace fixtures
