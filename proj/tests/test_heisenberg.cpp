#include "fixtures.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace quadlie;
using namespace fixtures;

TEST_CASE("heisenberg algebra") {
  LieAlgebra h = heisenberg(1);
  CHECK(h.dim() == 3);
  CHECK(h.basis_bracket(0, 1) == Vector{0, 0, 1});
  CHECK(h.brackets().size() == 1);
  for (std::size_t m = 1; m <= 3; ++m) {
    LieAlgebra hm = heisenberg(m);
    CHECK(center(hm) == Subspace::span(2 * m + 1, {unit_vector(2 * m + 1, 2 * m)}));
    CHECK(oracle::satisfies_jacobi(hm));
  }
  CHECK(heisenberg(1, Matrix{{0, 2}, {-2, 0}}).basis_bracket(0, 1) == Vector{0, 0, 2});
  CHECK_THROWS_AS(heisenberg(1, Matrix{{0, 0}, {0, 0}}), error);
  CHECK_THROWS_AS(heisenberg(1, Matrix{{0, 1}, {1, 0}}), error);
  CHECK_THROWS_AS(heisenberg(0), error);
}

TEST_CASE("extended heisenberg with phi = diag(1,-1)") {
  auto q = h1_phi();
  const auto& g = q.algebra;
  CHECK(g.basis_bracket(0, 1) == Vector{0, 1, 0, 0});
  CHECK(g.basis_bracket(0, 2) == Vector{0, 0, -1, 0});
  CHECK(g.basis_bracket(1, 2) == Vector{0, 0, 0, 1});
  CHECK(q.metric.gram() == Matrix{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
  CHECK(oracle::is_invariant_metric(g, q.metric.gram()));
  CHECK(derived_subalgebra(g) == Subspace::span(4, {unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3)}));
}

TEST_CASE("extended heisenberg preconditions") {
  CHECK_THROWS_WITH(extend_heisenberg(1, standard_symplectic(1), Matrix(2, 2)), "phi must be invertible on V");
  CHECK_THROWS_WITH(extend_heisenberg(1, standard_symplectic(1), Matrix::identity(2)), "phi must lie in o(omega)");
}

TEST_CASE("double extension") {
  auto empty = double_extension({LieAlgebra(0), BilinearForm(Matrix(0, 0))}, Matrix(0, 0));
  CHECK(empty.algebra.is_abelian());
  CHECK(empty.metric.gram() == Matrix{{0, 1}, {1, 0}});

  auto osc = oscillator();  // basis (a1, a2, d, hbar)
  CHECK(osc.algebra.basis_bracket(2, 0) == Vector{0, -1, 0, 0});
  CHECK(osc.algebra.basis_bracket(2, 1) == Vector{1, 0, 0, 0});
  CHECK(osc.algebra.basis_bracket(0, 1) == Vector{0, 0, 0, -1});
  CHECK(oracle::satisfies_jacobi(osc.algebra));
  CHECK(oracle::is_invariant_metric(osc.algebra, osc.metric.gram()));

  CHECK_THROWS_AS(double_extension(abelian_quadratic(Matrix::identity(2)), Matrix::identity(2)), error);
  LieAlgebra s = sl2();
  CHECK_THROWS_AS(double_extension(sl2_killing(), Matrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}), error);
}

TEST_CASE("build with an empty core matches the extended heisenberg algebra") {
  auto b = build_with_heisenberg_ideal({LieAlgebra(0), BilinearForm(Matrix(0, 0))}, Matrix(0, 0),
                                       SymplecticSpace::standard(1), hyperbolic_phi());
  CHECK(same_structure(b, h1_phi()));
}

TEST_CASE("build fixtures pass both checkers") {
  for (const auto& q : {build_line(), build_sl2(), build_plane()}) {
    CHECK(oracle::satisfies_jacobi(q.algebra));
    CHECK(oracle::is_invariant_metric(q.algebra, q.metric.gram()));
  }
  auto line = build_line();
  CHECK(split_by_nondegenerate_ideal(line, Subspace::span(5, {unit_vector(5, 0)})).has_value());
  auto sl = build_sl2();
  CHECK(sl.dim() == 7);
  Subspace h = built_ideal(3, standard_symplectic(1)).ideal;
  CHECK(is_ideal(sl.algebra, h));
  CHECK(restrict_to(sl.algebra, h).same_structure(heisenberg(1)));
}

TEST_CASE("build preconditions") {
  auto s = abelian_quadratic(Matrix{{1}});
  CHECK_THROWS_AS(build_with_heisenberg_ideal(s, Matrix{{0}}, SymplecticSpace::standard(1), Matrix(2, 2)), error);
  CHECK_THROWS_AS(build_with_heisenberg_ideal(s, Matrix{{0}}, SymplecticSpace::standard(1), Matrix::identity(2)),
                  error);
  CHECK_THROWS_AS(build_with_heisenberg_ideal(s, Matrix{{1}}, SymplecticSpace::standard(1), hyperbolic_phi()), error);
}

TEST_CASE("B_V is symmetric for random sigma in o(omega)") {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const std::size_t m = t % 2 == 0 ? 1 : 2;
    Matrix omega = standard_symplectic(m);
    Matrix sigma = random_symplectic_element(rng, omega);
    CHECK(in_symplectic_algebra(sigma, omega));
    Matrix sinv = *inverse(sigma);
    for (std::size_t i = 0; i < 2 * m; ++i)
      for (std::size_t j = 0; j < 2 * m; ++j) {
        // ω(σ⁻¹u, v) = ω(σ⁻¹v, u)
        Vector ui = unit_vector(2 * m, i), vj = unit_vector(2 * m, j);
        CHECK(dot(sinv * ui, omega * vj) == dot(sinv * vj, omega * ui));
      }
  }
}

TEST_CASE("coadjoint double") {
  auto ab = coadjoint_double(LieAlgebra::abelian(2));
  CHECK(ab.algebra.is_abelian());
  CHECK(ab.metric.gram() == Matrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  for (const LieAlgebra& g : {affine_line(), heisenberg(1), sl2()}) {
    auto q = coadjoint_double(g);
    const std::size_t n = g.dim();
    CHECK(oracle::satisfies_jacobi(q.algebra));
    CHECK(oracle::is_invariant_metric(q.algebra, q.metric.gram()));
    std::vector<Vector> dual;
    for (std::size_t i = 0; i < n; ++i) dual.push_back(unit_vector(2 * n, n + i));
    Subspace gstar = Subspace::span(2 * n, dual);
    CHECK(is_ideal(q.algebra, gstar));
    CHECK(restrict_to(q.algebra, gstar).is_abelian());
  }
}
