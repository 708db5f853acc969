#pragma once

// Subcommands of the quadlie tool. Each returns a JSON report and an exit code:
// 0 clean, 1 mathematical violation, 2 input error.

#include "quadlie/document.hpp"
#include "quadlie/random.hpp"
#include "quadlie/structure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quadlie {

enum ExitCode : int { exit_clean = 0, exit_violation = 1, exit_input = 2 };

struct CommandResult {
  json report;
  int exit_code = exit_clean;
};

namespace detail {

inline json jacobi_to_json(const std::vector<JacobiViolation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(json{{"i", v.i}, {"j", v.j}, {"k", v.k}, {"residual", vector_to_json(v.residual)}});
  return out;
}

inline json metric_violations_to_json(const std::vector<MetricViolation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(json{{"kind", to_string(v.kind)}, {"i", v.i}, {"j", v.j}, {"k", v.k}});
  return out;
}

inline json heisenberg_to_json(const HeisenbergIdealData& h) {
  return json{{"m", h.m()},
              {"ideal", subspace_to_json(h.ideal)},
              {"hbar", vector_to_json(h.hbar)},
              {"v_basis", vectors_to_json(h.v_basis)},
              {"omega", matrix_to_json(h.omega)}};
}

inline json recovery_to_json(const RecoveredStructure& r) {
  return json{{"S", to_json("S", r.s)},
              {"D", matrix_to_json(r.derivation)},
              {"d", vector_to_json(r.d)},
              {"sigmaD", matrix_to_json(r.sigma)},
              {"omega", matrix_to_json(r.omega)},
              {"base_change", matrix_to_json(r.base_change)}};
}

inline Subspace ideal_from_indices(std::size_t n, const std::vector<std::size_t>& idx) {
  std::vector<Vector> vs;
  for (auto i : idx) {
    if (i >= n) throw document_error("--ideal: index " + std::to_string(i) + " out of range");
    vs.push_back(unit_vector(n, i));
  }
  return Subspace::span(n, vs);
}

struct Candidate {
  std::string source;
  HeisenbergIdealData data;
};

/// The given ideal, or else the first of nilradical, derived subalgebra that
/// validates as a Heisenberg ideal.
inline std::optional<Candidate> heisenberg_candidate(const LieAlgebra& g, const std::optional<std::vector<std::size_t>>& ideal) {
  if (ideal) {
    auto h = find_heisenberg_ideal(g, ideal_from_indices(g.dim(), *ideal));
    if (!h) return std::nullopt;
    return Candidate{"given", std::move(*h)};
  }
  if (auto h = find_heisenberg_ideal(g, nilradical(g))) return Candidate{"nilradical", std::move(*h)};
  if (auto h = find_heisenberg_ideal(g, derived_subalgebra(g))) return Candidate{"derived", std::move(*h)};
  return std::nullopt;
}

}  // namespace detail

inline CommandResult cmd_check(const AlgebraDocument& doc) {
  const LieAlgebra& g = doc.algebra;
  auto jac = check_jacobi(g);
  json report{{"name", doc.name},
              {"dim", g.dim()},
              {"jacobi_violations", detail::jacobi_to_json(jac)},
              {"metric_present", doc.metric.has_value()}};
  bool clean = jac.empty();
  if (doc.metric) {
    auto mv = check_invariant_metric(g, *doc.metric);
    report["metric_violations"] = detail::metric_violations_to_json(mv);
    clean = clean && mv.empty();
  }
  report["center_dim"] = center(g).dim();
  report["derived_dim"] = derived_subalgebra(g).dim();
  report["solvable"] = is_solvable(g);
  report["nilpotent"] = is_nilpotent(g);
  report["clean"] = clean;
  return {std::move(report), clean ? exit_clean : exit_violation};
}

inline CommandResult cmd_construct(const ConstructionDocument& doc) {
  return {to_json(run_construction(doc)), exit_clean};
}

inline CommandResult cmd_analyze(const AlgebraDocument& doc, const std::optional<std::vector<std::size_t>>& ideal,
                                 bool lie_only = false) {
  const LieAlgebra& g = doc.algebra;
  if (!lie_only && !doc.metric) throw document_error("analyze: quadratic analyses require a metric (use --lie-only)");
  auto jac = check_jacobi(g);
  json report{{"name", doc.name}, {"dim", g.dim()}};
  if (!jac.empty()) {
    report["jacobi_violations"] = detail::jacobi_to_json(jac);
    return {std::move(report), exit_violation};
  }
  report["radical"] = subspace_to_json(radical(g));
  report["nilradical"] = subspace_to_json(nilradical(g));
  report["center"] = subspace_to_json(center(g));
  report["derived"] = subspace_to_json(derived_subalgebra(g));
  report["solvable"] = is_solvable(g);
  report["nilpotent"] = is_nilpotent(g);

  auto cand = detail::heisenberg_candidate(g, ideal);
  if (cand) {
    json hj = detail::heisenberg_to_json(cand->data);
    hj["source"] = cand->source;
    report["heisenberg_ideal"] = std::move(hj);
  } else {
    report["heisenberg_ideal"] = nullptr;
  }
  if (lie_only) return {std::move(report), exit_clean};

  QuadraticLieAlgebra q = doc.quadratic();
  auto mv = check_invariant_metric(q);
  if (!mv.empty()) {
    report["metric_violations"] = detail::metric_violations_to_json(mv);
    return {std::move(report), exit_violation};
  }

  Verdict v = recognize_extended_heisenberg(q);
  json vj{{"kind", verdict_name(v)}};
  if (auto* e = std::get_if<ExtendedHeisenberg>(&v)) {
    vj["certificate"] = matrix_to_json(e->recovery.base_change);
    vj["phi"] = matrix_to_json(e->recovery.sigma);
    vj["omega"] = matrix_to_json(e->recovery.omega);
  } else if (auto* d = std::get_if<Decomposable>(&v)) {
    vj["ideal"] = subspace_to_json(d->ideal);
    vj["split"] = json{{"first_dim", d->split.first.dim()},
                       {"second_dim", d->split.second.dim()},
                       {"base_change", matrix_to_json(d->split.base_change)}};
  } else {
    vj["reason"] = std::get<NotApplicable>(v).reason;
  }
  report["verdict"] = std::move(vj);

  if (cand) {
    RecoveredStructure rec = recover_structure(q, cand->data);
    json rj = detail::recovery_to_json(rec);
    rj["s_dim"] = rec.s.dim();
    report["recovery"] = std::move(rj);

    json cj;
    if (auto ba = has_invariant_quotient_metric(q, cand->data)) {
      ComplementWitness w = complement_from_quotient_metric(q, cand->data, *ba);
      cj = json{{"exists", true},
                {"quotient_metric", matrix_to_json(ba->gram())},
                {"complement", subspace_to_json(w.complement)},
                {"c", vector_to_json(w.c)}};
    } else {
      cj = json{{"exists", false}};
    }
    report["complement"] = std::move(cj);
  } else {
    report["recovery"] = nullptr;
    report["complement"] = nullptr;
  }

  NilradicalReport nr = verify_nilradical_theorem(q);
  json nj{{"applicable", nr.applicable}};
  if (nr.applicable) {
    nj["radical_is_nilradical_plus_line"] = nr.radical_is_nil_plus_line;
    nj["radical_nondegenerate"] = nr.radical_nondegenerate;
    nj["radical_extended_heisenberg"] = nr.radical_extended_heisenberg;
    nj["solvable"] = nr.solvable;
    if (nr.solvable) nj["whole_extended_heisenberg"] = nr.whole_is_extended_heisenberg;
    nj["all_pass"] = nr.all_pass();
  }
  report["nilradical_theorem"] = std::move(nj);
  return {std::move(report), exit_clean};
}

/// Recovers (S, D, sigmaD) along the given ideal and rebuilds. With a seed, the
/// input is first moved by a seeded unimodular base change.
inline CommandResult cmd_roundtrip(const AlgebraDocument& doc, const std::vector<std::size_t>& ideal,
                                   std::optional<std::uint64_t> seed) {
  QuadraticLieAlgebra q = doc.quadratic();
  auto mv = check_invariant_metric(q);
  if (!check_jacobi(q.algebra).empty() || !mv.empty())
    throw document_error("roundtrip: input is not a quadratic Lie algebra (run check)");
  auto h = find_heisenberg_ideal(q.algebra, detail::ideal_from_indices(q.dim(), ideal));
  if (!h) throw document_error("roundtrip: --ideal does not span a Heisenberg ideal");
  json report{{"name", doc.name}};
  if (seed) {
    Rng rng(*seed);
    Matrix p = random_unimodular(rng, q.dim());
    q = transport(q, p);
    h = transport(*h, p);
    report["seed"] = *seed;
    report["input_base_change"] = matrix_to_json(p);
  }
  RecoveredStructure rec = recover_structure(q, *h);
  QuadraticLieAlgebra moved = transport(q, rec.base_change);
  const bool brackets_equal = moved.algebra.same_structure(rec.rebuilt.algebra);
  const bool gram_equal = moved.metric == rec.rebuilt.metric;
  report["recovered"] = detail::recovery_to_json(rec);
  report["s_dim"] = rec.s.dim();
  report["structure_constants_equal"] = brackets_equal;
  report["gram_equal"] = gram_equal;
  report["equal"] = brackets_equal && gram_equal;
  return {std::move(report), brackets_equal && gram_equal ? exit_clean : exit_violation};
}

inline CommandResult cmd_forms(const AlgebraDocument& doc) {
  auto forms = invariant_symmetric_forms(doc.algebra);
  json list = json::array();
  for (const auto& f : forms) list.push_back(matrix_to_json(f.gram()));
  auto nd = find_nondegenerate_form(forms);
  json report{{"name", doc.name}, {"dim", doc.algebra.dim()}, {"count", forms.size()}, {"forms", std::move(list)}};
  report["nondegenerate_example"] = nd ? matrix_to_json(nd->gram()) : json(nullptr);
  return {std::move(report), exit_clean};
}

}  // namespace quadlie
