#pragma once

// Seeded generators for small-integer test data.

#include "quadlie/quadform.hpp"

#include <random>

namespace quadlie {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]. Modulo mapping keeps results identical across
/// standard library implementations.
inline long random_int(Rng& rng, long lo, long hi) {
  const auto span = static_cast<unsigned long long>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_int(rng, -bound, bound);
  return m;
}

inline Matrix random_symmetric(Rng& rng, std::size_t n, long bound) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = random_int(rng, -bound, bound);
      m(j, i) = m(i, j);
    }
  return m;
}

/// Unimodular integer matrix: a product of random elementary row operations
/// and a random permutation.
inline Matrix random_unimodular(Rng& rng, std::size_t n, int steps = 0) {
  Matrix p = Matrix::identity(n);
  if (n < 2) return p;
  if (steps == 0) steps = static_cast<int>(3 * n);
  for (int s = 0; s < steps; ++s) {
    auto i = static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    Rational f = random_int(rng, -2, 2);
    for (std::size_t c = 0; c < n; ++c) p(i, c) += f * p(j, c);
  }
  for (std::size_t i = n - 1; i > 0; --i) {
    auto j = static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(i)));
    for (std::size_t c = 0; c < n; ++c) std::swap(p(i, c), p(j, c));
  }
  return p;
}

/// ω⁻¹·(symmetric) parameterizes 𝔬(ω); retries until the result is invertible.
inline Matrix random_symplectic_element(Rng& rng, const Matrix& omega, long bound = 3) {
  Matrix winv = checked_inverse(omega, "omega is singular");
  for (;;) {
    Matrix f = winv * random_symmetric(rng, omega.rows(), bound);
    if (determinant(f) != 0) return f;
  }
}

/// Random integer combination of the given basis.
inline Matrix random_combination(Rng& rng, const std::vector<Matrix>& basis, std::size_t n, long bound = 2) {
  Matrix m(n, n);
  for (const auto& b : basis) {
    long c = random_int(rng, -bound, bound);
    if (c != 0) m = m + rat(c) * b;
  }
  return m;
}

}  // namespace quadlie
