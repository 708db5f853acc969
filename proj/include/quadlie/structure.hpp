#pragma once

// Structure analysis: radical, nilradical, Heisenberg ideals, recovery of the
// (S, D, sigma(D)) data, the extended-Heisenberg recognizer, complement
// subalgebras versus quotient metrics, and the nilradical theorem report.

#include "quadlie/heisenberg.hpp"

#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace quadlie {

/// Rad(g) = {x : K(x, [g,g]) = 0}.
inline Subspace radical(const LieAlgebra& g) {
  return form_orthogonal(killing_form(g), derived_subalgebra(g));
}

namespace detail {

inline Vector flatten(const Matrix& m) { return m.entries(); }

inline Matrix unflatten(const Vector& v, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

/// Non-unital associative span-closure of a set of n×n matrices.
inline std::vector<Matrix> associative_closure(const std::vector<Matrix>& gens, std::size_t n) {
  std::vector<Vector> flat;
  for (const auto& g : gens) flat.push_back(flatten(g));
  Subspace span = Subspace::span(n * n, flat);
  std::vector<Matrix> basis;
  for (const auto& v : span.vectors()) basis.push_back(unflatten(v, n));
  std::size_t frontier = 0;
  while (frontier < basis.size()) {
    const std::size_t end = basis.size();
    for (std::size_t a = frontier; a < end; ++a)
      for (const auto& g : gens) {
        Vector prod = flatten(g * basis[a]);
        if (span.contains(prod)) continue;
        span = sum(span, Subspace::span(n * n, {prod}));
        basis.push_back(unflatten(prod, n));
      }
    frontier = end;
  }
  return basis;
}

}  // namespace detail

/// Nil(g): the nilradical of the radical R, computed as the preimage under
/// ad_R of the trace-form radical of the associative algebra generated by
/// ad_R(R).
inline Subspace nilradical(const LieAlgebra& g) {
  Subspace r = radical(g);
  const std::size_t k = r.dim();
  if (k == 0) return r;
  LieAlgebra rg = restrict_to(g, r);
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(ad(rg, unit_vector(k, i)).matrix());
  std::vector<Matrix> a = detail::associative_closure(gens, k);

  // Rad(A) = {x ∈ A : tr(x y) = 0 for all y ∈ A}.
  const std::size_t t = a.size();
  Matrix tf(t, t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) tf(i, j) = trace(a[i] * a[j]);
  std::vector<Vector> rad_gens;
  for (const auto& coeffs : kernel(tf).vectors()) {
    Matrix m(k, k);
    for (std::size_t i = 0; i < t; ++i)
      if (coeffs[i] != 0) m = m + coeffs[i] * a[i];
    rad_gens.push_back(detail::flatten(m));
  }
  Subspace rad_a = Subspace::span(k * k, rad_gens);

  // x ↦ ad_R(x) flattened; keep the x landing in Rad(A).
  Matrix adm(k * k, k);
  for (std::size_t i = 0; i < k; ++i) {
    Vector f = detail::flatten(gens[i]);
    for (std::size_t row = 0; row < k * k; ++row) adm(row, i) = f[row];
  }
  Matrix ann = annihilator(rad_a).basis();
  Subspace coords = ann.rows() == 0 ? Subspace::full(k) : kernel(ann * adm);
  coords = sum(coords, center(rg));

  std::vector<Vector> out;
  const auto rv = r.vectors();
  for (const auto& c : coords.vectors()) {
    Vector x = zero_vector(g.dim());
    for (std::size_t i = 0; i < k; ++i)
      if (c[i] != 0) x = x + c[i] * rv[i];
    out.push_back(std::move(x));
  }
  return Subspace::span(g.dim(), out);
}

/// An ideal h_m = V ⊕ Fℏ with [v_i, v_j] = ω_ij ℏ.
struct HeisenbergIdealData {
  Subspace ideal;
  Vector hbar;
  std::vector<Vector> v_basis;
  Matrix omega;

  std::size_t m() const { return v_basis.size() / 2; }
};

/// Validates candidate as a Heisenberg ideal. ℏ is the rref generator of the
/// candidate's derived line; V is spanned by the remaining rref rows.
inline std::optional<HeisenbergIdealData> find_heisenberg_ideal(const LieAlgebra& g, const Subspace& candidate) {
  if (candidate.ambient_dim() != g.dim()) return std::nullopt;
  if (candidate.dim() < 3 || candidate.dim() % 2 == 0) return std::nullopt;
  if (!is_ideal(g, candidate)) return std::nullopt;
  Subspace derived = bracket_span(g, candidate, candidate);
  if (derived.dim() != 1) return std::nullopt;
  Vector hbar = derived.vectors().front();
  for (const auto& x : candidate.vectors())
    if (!is_zero(bracket(g, x, hbar))) return std::nullopt;
  std::vector<Vector> v = complement_in(candidate, derived);
  const std::size_t p = derived.pivots().front();
  Matrix omega(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) omega(i, j) = bracket(g, v[i], v[j])[p];
  if (determinant(omega) == 0) return std::nullopt;
  return HeisenbergIdealData{candidate, std::move(hbar), std::move(v), std::move(omega)};
}

/// Throws error unless h describes a Heisenberg ideal of g.
inline void validate_heisenberg_ideal(const LieAlgebra& g, const HeisenbergIdealData& h) {
  const std::size_t n = g.dim();
  if (h.ideal.ambient_dim() != n || h.hbar.size() != n) throw error("heisenberg ideal: ambient mismatch");
  if (!is_ideal(g, h.ideal)) throw error("heisenberg ideal: subspace is not an ideal");
  if (h.v_basis.empty() || h.v_basis.size() % 2 != 0) throw error("heisenberg ideal: V must have even positive dimension");
  if (h.ideal.dim() != h.v_basis.size() + 1) throw error("heisenberg ideal: dimension mismatch");
  std::vector<Vector> all = h.v_basis;
  all.push_back(h.hbar);
  if (Subspace::span(n, all) != h.ideal) throw error("heisenberg ideal: V and hbar do not span the ideal");
  if (!h.omega.is_square() || h.omega.rows() != h.v_basis.size() || !h.omega.is_skew() || determinant(h.omega) == 0)
    throw error("heisenberg ideal: omega must be skew and nondegenerate");
  for (const auto& x : all)
    if (!is_zero(bracket(g, x, h.hbar))) throw error("heisenberg ideal: hbar is not central in the ideal");
  for (std::size_t i = 0; i < h.v_basis.size(); ++i)
    for (std::size_t j = 0; j < h.v_basis.size(); ++j)
      if (bracket(g, h.v_basis[i], h.v_basis[j]) != h.omega(i, j) * h.hbar)
        throw error("heisenberg ideal: [v_i, v_j] differs from omega_ij hbar");
}

/// h expressed in the basis given by the columns of p (as for transport).
inline HeisenbergIdealData transport(const HeisenbergIdealData& h, const Matrix& p) {
  Matrix pinv = checked_inverse(p, "transport: base change is singular");
  HeisenbergIdealData out;
  out.hbar = pinv * h.hbar;
  for (const auto& v : h.v_basis) out.v_basis.push_back(pinv * v);
  std::vector<Vector> all = out.v_basis;
  all.push_back(out.hbar);
  out.ideal = Subspace::span(p.rows(), all);
  out.omega = h.omega;
  return out;
}

/// Output of recover_structure. Transporting the input by base_change gives
/// exactly build_with_heisenberg_ideal(s, derivation, V(omega), sigma).
struct RecoveredStructure {
  QuadraticLieAlgebra s;
  std::vector<Vector> s_vectors;  // basis of 𝒮 in the input coordinates
  Subspace s_basis;
  Matrix derivation;              // D on 𝒮
  Vector d;
  Matrix sigma;                   // ρ(d) restricted to V
  Matrix omega;
  HeisenbergIdealData heis;
  Matrix base_change;             // columns (s..., d, v..., hbar)
  QuadraticLieAlgebra rebuilt;
};

namespace detail {

inline void require_quadratic(const QuadraticLieAlgebra& q) {
  if (q.metric.dim() != q.dim()) throw error("metric size does not match the algebra");
  if (!check_jacobi(q.algebra).empty()) throw error("algebra violates the Jacobi identity");
  if (!check_invariant_metric(q).empty()) throw error("metric is not an invariant metric");
}

/// Complement 𝔞 of Fℏ inside V^⊥.
inline std::vector<Vector> complement_in_v_perp(const QuadraticLieAlgebra& q, const HeisenbergIdealData& h) {
  const std::size_t n = q.dim();
  Subspace v = Subspace::span(n, h.v_basis);
  ensure(form_restrict_nondegenerate(q.metric.gram(), v), "metric restricted to V is degenerate");
  Subspace v_perp = orthogonal_in(q, v);
  Subspace line = Subspace::span(n, {h.hbar});
  ensure(v_perp.contains(line), "hbar is not orthogonal to V");
  return complement_in(v_perp, line);
}

}  // namespace detail

/// Recovers (𝒮, D, sigma(D)) from a quadratic algebra with a Heisenberg ideal.
inline RecoveredStructure recover_structure(const QuadraticLieAlgebra& q, const HeisenbergIdealData& h) {
  detail::require_quadratic(q);
  validate_heisenberg_ideal(q.algebra, h);
  const std::size_t n = q.dim();
  const std::size_t m2 = h.v_basis.size();
  const BilinearForm& b = q.metric;

  // ℏ central in g, B(h_m, ℏ) = 0.
  ensure(is_zero(ad(q.algebra, h.hbar).matrix().entries()), "hbar is not central");
  for (const auto& x : h.ideal.vectors()) ensure(b(x, h.hbar) == 0, "h_m is not orthogonal to hbar");

  std::vector<Vector> a = detail::complement_in_v_perp(q, h);
  const std::size_t na = a.size();
  ensure(na + m2 + 1 == n, "complement of hbar in V-perp has the wrong dimension");

  // Coordinates along (𝔞..., V..., ℏ).
  std::vector<Vector> frame = a;
  frame.insert(frame.end(), h.v_basis.begin(), h.v_basis.end());
  frame.push_back(h.hbar);
  Matrix frame_inv = checked_inverse(Matrix::from_columns(frame, n), "frame is singular");

  // [a, v_j] = ρ(a) v_j + ω(L(a), v_j) ℏ; Φ(a) = a - L(a).
  Matrix omega_inv_t = checked_inverse(h.omega, "omega is singular").transpose();
  for (auto& ai : a) {
    Vector c(m2);
    for (std::size_t j = 0; j < m2; ++j) {
      Vector coords = frame_inv * bracket(q.algebra, ai, h.v_basis[j]);
      for (std::size_t t = 0; t < na; ++t) ensure(coords[t] == 0, "h_m is not an ideal");
      c[j] = coords[n - 1];
    }
    Vector l = omega_inv_t * c;
    for (std::size_t k = 0; k < m2; ++k)
      if (l[k] != 0) ai = ai - l[k] * h.v_basis[k];
  }

  // d with B(d, ℏ) = 1 and B(d, d) = 0.
  std::size_t pick = na;
  for (std::size_t i = 0; i < na; ++i)
    if (b(a[i], h.hbar) != 0) {
      pick = i;
      break;
    }
  ensure(pick < na, "no complement vector pairs with hbar");
  Vector d0 = (Rational(1) / b(a[pick], h.hbar)) * a[pick];
  Vector d = d0 - (b(d0, d0) / 2) * h.hbar;

  // 𝒮 = Ψ(Ker B(·, ℏ) ∩ 𝔞), Ψ(a) = a - B(a, d) ℏ.
  std::vector<Vector> s;
  for (std::size_t i = 0; i < na; ++i) {
    if (i == pick) continue;
    Vector k = a[i] - b(a[i], h.hbar) * d0;
    s.push_back(k - b(k, d) * h.hbar);
  }
  const std::size_t ns = s.size();

  std::vector<Vector> cols = s;
  cols.push_back(d);
  cols.insert(cols.end(), h.v_basis.begin(), h.v_basis.end());
  cols.push_back(h.hbar);
  Matrix p = Matrix::from_columns(cols, n);
  QuadraticLieAlgebra t = transport(q, p);

  std::vector<std::string> s_labels;
  for (std::size_t i = 0; i < ns; ++i) s_labels.push_back("s" + std::to_string(i + 1));
  LieAlgebra s_alg(ns, s_labels);
  Matrix s_gram(ns, ns);
  Matrix dmat(ns, ns);
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < ns; ++j) s_gram(i, j) = t.metric.gram()(i, j);
    for (std::size_t j = i + 1; j < ns; ++j) {
      Vector val(ns);
      for (std::size_t l = 0; l < ns; ++l) val[l] = t.algebra.constant(i, j, l);
      s_alg.set_bracket(i, j, val);
    }
    for (std::size_t l = 0; l < ns; ++l) dmat(l, i) = t.algebra.constant(ns, i, l);
  }
  Matrix sigma(m2, m2);
  for (std::size_t i = 0; i < m2; ++i)
    for (std::size_t j = 0; j < m2; ++j) sigma(i, j) = t.algebra.constant(ns, ns + 1 + j, ns + 1 + i);

  QuadraticLieAlgebra s_quad{std::move(s_alg), BilinearForm(s_gram)};
  QuadraticLieAlgebra rebuilt;
  try {
    rebuilt = build_with_heisenberg_ideal(s_quad, dmat, SymplecticSpace(h.omega), sigma);
  } catch (const error& e) {
    throw internal_error(std::string("recovered data is not admissible: ") + e.what());
  }
  if (!same_structure(t, rebuilt)) throw internal_error("recovered structure does not rebuild the input");

  RecoveredStructure out;
  out.s = std::move(s_quad);
  out.s_basis = Subspace::span(n, s);
  out.s_vectors = std::move(s);
  out.derivation = std::move(dmat);
  out.d = std::move(d);
  out.sigma = std::move(sigma);
  out.omega = h.omega;
  out.heis = h;
  out.base_change = std::move(p);
  out.rebuilt = std::move(rebuilt);
  return out;
}

struct ExtendedHeisenberg {
  RecoveredStructure recovery;  // 𝒮 = 0; base_change is the certificate
};

struct Decomposable {
  RecoveredStructure recovery;
  Subspace ideal;  // 𝒮, a nondegenerate ideal with D = 0
  OrthogonalSplit split;
};

struct NotApplicable {
  std::string reason;
};

using Verdict = std::variant<ExtendedHeisenberg, Decomposable, NotApplicable>;

inline std::string verdict_name(const Verdict& v) {
  if (std::holds_alternative<ExtendedHeisenberg>(v)) return "ExtendedHeisenberg";
  if (std::holds_alternative<Decomposable>(v)) return "Decomposable";
  return "NotApplicable";
}

/// Decides whether q is h_m(φ), splits off 𝒮, or has a non-Heisenberg derived algebra.
inline Verdict recognize_extended_heisenberg(const QuadraticLieAlgebra& q) {
  detail::require_quadratic(q);
  Subspace derived = derived_subalgebra(q.algebra);
  auto h = find_heisenberg_ideal(q.algebra, derived);
  if (!h) return NotApplicable{"derived algebra is not a Heisenberg ideal"};
  RecoveredStructure rec = recover_structure(q, *h);
  if (rec.s.dim() == 0) {
    QuadraticLieAlgebra model = extend_heisenberg(h->m(), rec.omega, rec.sigma);
    ensure(same_structure(transport(q, rec.base_change), model), "certificate does not match extend_heisenberg");
    return ExtendedHeisenberg{std::move(rec)};
  }
  ensure(rec.derivation.is_zero(), "derived algebra is h_m but D is nonzero");
  ensure(rec.s.algebra.is_abelian(), "derived algebra is h_m but [S,S] is nonzero");
  auto split = split_by_nondegenerate_ideal(q, rec.s_basis);
  ensure(split.has_value(), "S is not a nondegenerate ideal");
  Subspace ideal = rec.s_basis;
  return Decomposable{std::move(rec), std::move(ideal), std::move(*split)};
}

namespace detail {

inline void require_complement(const LieAlgebra& g, const Subspace& ideal, const Subspace& comp) {
  if (comp.ambient_dim() != g.dim()) throw error("complement: ambient mismatch");
  if (comp.dim() + ideal.dim() != g.dim() || !sum(comp, ideal).is_full())
    throw error("complement: subspace is not a complement to the ideal");
  if (!is_subalgebra(g, comp)) throw error("complement: subspace is not a subalgebra");
}

}  // namespace detail

/// Invariant metric on g/h_m induced by a complement subalgebra 𝔞 = 𝒮' ⊕ Fz,
/// with z central in 𝔞, B(z, ℏ) = 1 and 𝒮' = 𝔞 ∩ ℏ^⊥: B restricted to 𝒮' plus [1] on z.
inline BilinearForm quotient_metric_from_complement(const QuadraticLieAlgebra& q, const HeisenbergIdealData& h,
                                                    const Subspace& comp) {
  detail::require_quadratic(q);
  validate_heisenberg_ideal(q.algebra, h);
  detail::require_complement(q.algebra, h.ideal, comp);
  const std::size_t n = q.dim();
  const BilinearForm& b = q.metric;
  LieAlgebra a = restrict_to(q.algebra, comp);
  auto av = comp.vectors();
  const std::size_t k = av.size();

  Vector eta(k);
  for (std::size_t i = 0; i < k; ++i) eta[i] = b(av[i], h.hbar);
  Subspace za = center(a);
  std::optional<Vector> z;
  for (const auto& c : za.vectors())
    if (dot(eta, c) != 0) {
      z = (Rational(1) / dot(eta, c)) * c;
      break;
    }
  if (!z) throw error("complement has no central element pairing with hbar");
  Subspace ker = kernel(Matrix::from_rows({eta}, k));

  auto to_g = [&](const Vector& c) {
    Vector x = zero_vector(n);
    for (std::size_t i = 0; i < k; ++i)
      if (c[i] != 0) x = x + c[i] * av[i];
    return x;
  };
  std::vector<Vector> frame;
  for (const auto& c : ker.vectors()) frame.push_back(to_g(c));
  frame.push_back(to_g(*z));
  Matrix ba = block_diagonal(restrict_form(b.gram(), std::vector<Vector>(frame.begin(), frame.end() - 1)),
                             Matrix{{1}});

  Quotient quo = quotient(q.algebra, h.ideal);
  Matrix m = quo.projection.matrix() * Matrix::from_columns(frame, n);
  Matrix minv = checked_inverse(m, "complement does not project isomorphically onto the quotient");
  Matrix gram = minv.transpose() * ba * minv;
  if (!check_invariant_metric(quo.algebra, gram).empty())
    throw error("induced form on the quotient is not an invariant metric");
  return BilinearForm(std::move(gram));
}

/// Complement subalgebra built from an invariant metric on g/h_m.
struct ComplementWitness {
  Subspace complement;
  BilinearForm quotient_metric;
  Vector c;  // F = ad(c) on the quotient
  Matrix t;
  Matrix f;
  Vector e;
};

inline ComplementWitness complement_from_quotient_metric(const QuadraticLieAlgebra& q, const HeisenbergIdealData& h,
                                                         const BilinearForm& ba) {
  detail::require_quadratic(q);
  validate_heisenberg_ideal(q.algebra, h);
  Quotient quo = quotient(q.algebra, h.ideal);
  const LieAlgebra& qa = quo.algebra;
  const std::size_t k = qa.dim();
  if (!check_invariant_metric(qa, ba).empty()) throw error("quotient form is not an invariant metric");
  const std::size_t n = q.dim();
  const std::size_t m2 = h.v_basis.size();
  const Matrix& g = q.metric.gram();
  const Matrix& p = quo.projection.matrix();
  const Matrix& bam = ba.gram();
  Matrix ba_inv = checked_inverse(bam, "quotient metric is singular");
  Matrix g_inv = checked_inverse(g, "metric is singular");

  // Lift the quotient basis into V^⊥: ι with p ι = I.
  std::vector<Vector> vp = detail::complement_in_v_perp(q, h);
  vp.push_back(h.hbar);
  Matrix y = Matrix::from_columns(vp, n);
  Matrix py = p * y;
  std::vector<Vector> lift;
  for (std::size_t i = 0; i < k; ++i) {
    auto z = solve(py, unit_vector(k, i));
    ensure(z.has_value(), "V-perp does not surject onto the quotient");
    lift.push_back(y * *z);
  }
  Matrix iota = Matrix::from_columns(lift, n);

  std::vector<Vector> frame = lift;
  frame.insert(frame.end(), h.v_basis.begin(), h.v_basis.end());
  frame.push_back(h.hbar);
  Matrix frame_inv = checked_inverse(Matrix::from_columns(frame, n), "frame is singular");

  // varphi = B♯ p* B_𝔞♭ and phi = B_𝔞♯ ι* B♭.
  Matrix varphi = g_inv * p.transpose() * bam;
  Matrix phi = ba_inv * iota.transpose() * g;
  ensure(phi * varphi == Matrix::identity(k), "phi o varphi is not the identity");

  // varphi(a) = T(a) + S_V(a) + r(a) ℏ.
  Matrix coords = frame_inv * varphi;
  Matrix tm(k, k);
  Vector r(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) tm(i, j) = coords(i, j);
    for (std::size_t i = 0; i < m2; ++i) ensure(coords(k + i, j) == 0, "varphi has a V component");
    r[j] = coords(n - 1, j);
  }
  Vector e_prime = ba_inv * r;
  ensure((bam * tm).is_symmetric(), "T is not symmetric for the quotient metric");

  // [ιa, ιb] = ι[a,b]_𝔞 + μ(a,b) ℏ and μ(a,b) = B_𝔞(F a, b).
  Matrix mu(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vector cc = frame_inv * bracket(q.algebra, lift[i], lift[j]);
      Vector expect = qa.basis_bracket(i, j);
      for (std::size_t l = 0; l < k; ++l) ensure(cc[l] == expect[l], "lift is not compatible with the quotient bracket");
      for (std::size_t l = 0; l < m2; ++l) ensure(cc[k + l] == 0, "bracket of lifts has a V component");
      mu(i, j) = cc[n - 1];
    }
  Matrix f = Rational(-1) * (ba_inv * mu);

  // e = p(w) for the w dual to ℏ in the frame.
  Vector w = g_inv * frame_inv.row(n - 1);
  Vector e = p * w;
  ensure(e == e_prime, "e differs from e'");
  Matrix ad_e = ad(qa, e).matrix();
  ensure(tm * f == ad_e && f * tm == ad_e, "T F = F T = ad(e) fails");

  // F = ad(c).
  Matrix sys(k * k, k);
  for (std::size_t l = 0; l < k; ++l) {
    Vector col = ad(qa, unit_vector(k, l)).matrix().entries();
    for (std::size_t row = 0; row < k * k; ++row) sys(row, l) = col[row];
  }
  auto c = solve(sys, f.entries());
  if (!c) throw internal_error("F is not an inner derivation");

  Vector bc = bam * *c;
  std::vector<Vector> comp;
  for (std::size_t i = 0; i < k; ++i) comp.push_back(lift[i] + bc[i] * h.hbar);
  Subspace complement = Subspace::span(n, comp);
  ensure(is_subalgebra(q.algebra, complement), "constructed complement is not a subalgebra");
  ensure(complement.dim() == k && sum(complement, h.ideal).is_full(), "constructed complement is not a complement");
  return ComplementWitness{std::move(complement), ba, std::move(*c), std::move(tm), std::move(f), std::move(e)};
}

/// A nondegenerate member of span(forms): each basis form, then every
/// combination with coefficients in {-2..2} (when at most 15625 of them), then
/// 100 seeded pseudorandom combinations with coefficients in {-3..3}.
inline std::optional<BilinearForm> find_nondegenerate_form(const std::vector<BilinearForm>& forms) {
  for (const auto& f : forms)
    if (f.is_nondegenerate()) return f;
  const std::size_t k = forms.size();
  if (k < 2) return std::nullopt;
  const std::size_t n = forms.front().dim();
  auto combine = [&](const std::vector<long>& coeffs) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < k; ++i)
      if (coeffs[i] != 0) m = m + rat(coeffs[i]) * forms[i].gram();
    return m;
  };
  std::size_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < k && small; ++i) {
    total *= 5;
    small = total <= 15625;
  }
  if (small) {
    std::vector<long> coeffs(k, -2);
    for (std::size_t step = 0; step < total; ++step) {
      Matrix m = combine(coeffs);
      if (determinant(m) != 0) return BilinearForm(std::move(m));
      for (std::size_t i = 0; i < k; ++i) {
        if (++coeffs[i] <= 2) break;
        coeffs[i] = -2;
      }
    }
  }
  std::mt19937_64 rng(0x5eedULL);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<long> coeffs(k);
    for (auto& c : coeffs) c = static_cast<long>(rng() % 7) - 3;
    Matrix m = combine(coeffs);
    if (determinant(m) != 0) return BilinearForm(std::move(m));
  }
  return std::nullopt;
}

/// An invariant metric on g/h_m, if the search finds one.
inline std::optional<BilinearForm> has_invariant_quotient_metric(const QuadraticLieAlgebra& q,
                                                                 const HeisenbergIdealData& h) {
  validate_heisenberg_ideal(q.algebra, h);
  Quotient quo = quotient(q.algebra, h.ideal);
  if (quo.algebra.dim() == 0) return BilinearForm(Matrix(0, 0));
  return find_nondegenerate_form(invariant_symmetric_forms(quo.algebra));
}

/// Clause-by-clause check of: Nil(g) = h_m implies Rad(g) = Fd ⊕ h_m is a
/// nondegenerate ideal isomorphic to an extended Heisenberg algebra.
struct NilradicalReport {
  Subspace nilradical;
  Subspace radical;
  bool applicable = false;  // Nil(g) is a Heisenberg ideal
  std::optional<HeisenbergIdealData> heisenberg;
  bool radical_is_nil_plus_line = false;
  bool radical_nondegenerate = false;
  bool radical_extended_heisenberg = false;
  std::optional<RecoveredStructure> radical_recovery;
  bool solvable = false;
  bool whole_is_extended_heisenberg = false;  // solvable case

  bool all_pass() const {
    return applicable && radical_is_nil_plus_line && radical_nondegenerate && radical_extended_heisenberg &&
           (!solvable || whole_is_extended_heisenberg);
  }
};

inline NilradicalReport verify_nilradical_theorem(const QuadraticLieAlgebra& q) {
  detail::require_quadratic(q);
  NilradicalReport rep;
  rep.nilradical = nilradical(q.algebra);
  rep.radical = radical(q.algebra);
  rep.solvable = rep.radical.is_full();
  rep.heisenberg = find_heisenberg_ideal(q.algebra, rep.nilradical);
  rep.applicable = rep.heisenberg.has_value();
  if (!rep.applicable) return rep;
  rep.radical_is_nil_plus_line =
      rep.radical.contains(rep.nilradical) && rep.radical.dim() == rep.nilradical.dim() + 1;
  rep.radical_nondegenerate = form_restrict_nondegenerate(q.metric.gram(), rep.radical);
  if (!rep.radical_nondegenerate) return rep;

  QuadraticLieAlgebra rq = restrict_quadratic(q, rep.radical);
  std::vector<Vector> nil_coords;
  for (const auto& x : rep.nilradical.vectors()) nil_coords.push_back(*rep.radical.coordinates(x));
  auto h = find_heisenberg_ideal(rq.algebra, Subspace::span(rq.dim(), nil_coords));
  if (!h) return rep;
  RecoveredStructure rec = recover_structure(rq, *h);
  if (rec.s.dim() == 0)
    rep.radical_extended_heisenberg =
        same_structure(transport(rq, rec.base_change), extend_heisenberg(h->m(), rec.omega, rec.sigma));
  rep.radical_recovery = std::move(rec);
  rep.whole_is_extended_heisenberg = rep.solvable && rep.radical_extended_heisenberg;
  return rep;
}

}  // namespace quadlie
