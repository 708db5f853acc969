#pragma once

// JSON interchange: algebra documents and construction documents.
//
// Rationals are strings in canonical "p" or "p/q" form. Objects print with
// sorted keys, so printing is deterministic.

#include "quadlie/heisenberg.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace quadlie {

using json = nlohmann::json;

/// Raised for malformed documents. The message names the offending path.
class document_error : public error {
 public:
  using error::error;
};

struct AlgebraDocument {
  std::string name;
  LieAlgebra algebra;
  std::optional<Matrix> metric;

  QuadraticLieAlgebra quadratic() const {
    if (!metric) throw document_error("document has no metric");
    return {algebra, BilinearForm(*metric)};
  }
};

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
  throw document_error(path + ": " + what);
}

inline const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

inline std::size_t as_count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace detail

inline json rational_to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j, const std::string& path) {
  if (!j.is_string()) detail::fail(path, "rational must be a string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const error& e) {
    detail::fail(path, e.what());
  }
}

inline json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

inline Vector vector_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) detail::fail(path, "expected an array");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

inline json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

/// Square or rectangular matrix as a list of rows.
inline Matrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) detail::fail(path, "expected a matrix (array of rows)");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(vector_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != cols) detail::fail(path + "[" + std::to_string(i) + "]", "ragged matrix row");
  return Matrix::from_rows(rows, cols);
}

inline Matrix square_matrix_from_json(const json& j, std::size_t n, const std::string& path) {
  Matrix m = matrix_from_json(j, path);
  if (m.rows() != n || (n > 0 && m.cols() != n))
    detail::fail(path, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  return n == 0 ? Matrix(0, 0) : m;
}

inline json vectors_to_json(const std::vector<Vector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

inline json subspace_to_json(const Subspace& s) {
  return json{{"dim", s.dim()}, {"basis", vectors_to_json(s.vectors())}};
}

inline json algebra_to_json(const std::string& name, const LieAlgebra& g, const std::optional<Matrix>& metric) {
  json brackets = json::array();
  for (const auto& e : g.brackets()) {
    json terms = json::array();
    for (const auto& t : e.terms) terms.push_back(json{{"k", t.k}, {"c", rational_to_json(t.c)}});
    brackets.push_back(json{{"i", e.i}, {"j", e.j}, {"terms", std::move(terms)}});
  }
  json out{{"name", name}, {"dim", g.dim()}, {"basis", g.labels()}, {"brackets", std::move(brackets)}};
  if (metric) out["metric"] = matrix_to_json(*metric);
  return out;
}

inline json to_json(const AlgebraDocument& doc) { return algebra_to_json(doc.name, doc.algebra, doc.metric); }

inline json to_json(const std::string& name, const QuadraticLieAlgebra& q) {
  return algebra_to_json(name, q.algebra, q.metric.gram());
}

inline AlgebraDocument algebra_from_json(const json& j, const std::string& path = "$") {
  using detail::fail;
  using detail::field;
  if (!j.is_object()) fail(path, "expected an algebra document object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "name" && it.key() != "dim" && it.key() != "basis" && it.key() != "brackets" && it.key() != "metric")
      fail(path, "unknown field \"" + it.key() + "\"");
  AlgebraDocument doc;
  const json& name = field(j, "name", path);
  if (!name.is_string()) fail(path + ".name", "expected a string");
  doc.name = name.get<std::string>();
  const std::size_t n = detail::as_count(field(j, "dim", path), path + ".dim");

  const json& basis = field(j, "basis", path);
  if (!basis.is_array() || basis.size() != n) fail(path + ".basis", "expected " + std::to_string(n) + " labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (!basis[i].is_string()) fail(path + ".basis[" + std::to_string(i) + "]", "expected a string");
    labels.push_back(basis[i].get<std::string>());
  }
  doc.algebra = LieAlgebra(n, std::move(labels));

  const json& brackets = field(j, "brackets", path);
  if (!brackets.is_array()) fail(path + ".brackets", "expected an array");
  std::vector<bool> seen(n * n, false);
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string bp = path + ".brackets[" + std::to_string(b) + "]";
    const std::size_t i = detail::as_count(field(brackets[b], "i", bp), bp + ".i");
    const std::size_t jj = detail::as_count(field(brackets[b], "j", bp), bp + ".j");
    if (i >= n || jj >= n) fail(bp, "index out of range");
    if (i >= jj) fail(bp, "requires i < j");
    if (seen[i * n + jj]) fail(bp, "duplicate bracket entry");
    seen[i * n + jj] = true;
    const json& terms = field(brackets[b], "terms", bp);
    if (!terms.is_array()) fail(bp + ".terms", "expected an array");
    Vector value = zero_vector(n);
    std::vector<bool> used(n, false);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tp = bp + ".terms[" + std::to_string(t) + "]";
      const std::size_t k = detail::as_count(field(terms[t], "k", tp), tp + ".k");
      if (k >= n) fail(tp + ".k", "index out of range");
      if (used[k]) fail(tp + ".k", "duplicate term");
      used[k] = true;
      value[k] = rational_from_json(field(terms[t], "c", tp), tp + ".c");
    }
    doc.algebra.set_bracket(i, jj, value);
  }

  if (auto it = j.find("metric"); it != j.end()) {
    Matrix m = square_matrix_from_json(*it, n, path + ".metric");
    if (!m.is_symmetric()) fail(path + ".metric", "metric must be symmetric");
    doc.metric = std::move(m);
  }
  return doc;
}

/// Parses text, reporting syntax errors with their byte position.
inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw document_error(std::string("JSON syntax error at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
}

inline std::string print_json(const json& j) { return j.dump(2) + "\n"; }

/// A request to run one constructor.
struct ConstructionDocument {
  std::string kind;
  json parameters;
  std::optional<std::string> name;
};

inline ConstructionDocument construction_from_json(const json& j) {
  using detail::fail;
  if (!j.is_object()) fail("$", "expected a construction document object");
  ConstructionDocument doc;
  const json& kind = detail::field(j, "kind", "$");
  if (!kind.is_string()) fail("$.kind", "expected a string");
  doc.kind = kind.get<std::string>();
  doc.parameters = detail::field(j, "parameters", "$");
  if (!doc.parameters.is_object()) fail("$.parameters", "expected an object");
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) fail("$.name", "expected a string");
    doc.name = it->get<std::string>();
  }
  return doc;
}

/// Runs the constructor named by doc.kind. Precondition failures raise error.
inline AlgebraDocument run_construction(const ConstructionDocument& doc) {
  using detail::fail;
  const json& p = doc.parameters;
  const std::string name = doc.name.value_or(doc.kind);
  auto count = [&](const std::string& key) { return detail::as_count(detail::field(p, key, "$.parameters"), "$.parameters." + key); };
  auto omega_for = [&](std::size_t m) {
    auto it = p.find("omega");
    if (it == p.end()) return standard_symplectic(m);
    return square_matrix_from_json(*it, 2 * m, "$.parameters.omega");
  };
  auto quadratic_param = [&](const std::string& key) {
    AlgebraDocument s = algebra_from_json(detail::field(p, key, "$.parameters"), "$.parameters." + key);
    if (!s.metric) fail("$.parameters." + key, "requires a metric");
    return s.quadratic();
  };

  if (doc.kind == "heisenberg") {
    const std::size_t m = count("m");
    if (m == 0) fail("$.parameters.m", "m must be at least 1");
    return {name, heisenberg(m, omega_for(m)), std::nullopt};
  }
  if (doc.kind == "extend_heisenberg") {
    const std::size_t m = count("m");
    if (m == 0) fail("$.parameters.m", "m must be at least 1");
    Matrix phi = square_matrix_from_json(detail::field(p, "phi", "$.parameters"), 2 * m, "$.parameters.phi");
    auto q = extend_heisenberg(m, omega_for(m), phi);
    return {name, q.algebra, q.metric.gram()};
  }
  if (doc.kind == "double_extension") {
    QuadraticLieAlgebra s = quadratic_param("S");
    Matrix d = square_matrix_from_json(detail::field(p, "D", "$.parameters"), s.dim(), "$.parameters.D");
    auto q = double_extension(s, d);
    return {name, q.algebra, q.metric.gram()};
  }
  if (doc.kind == "build_with_heisenberg_ideal") {
    QuadraticLieAlgebra s = quadratic_param("S");
    Matrix d = square_matrix_from_json(detail::field(p, "D", "$.parameters"), s.dim(), "$.parameters.D");
    const std::size_t m = count("m");
    if (m == 0) fail("$.parameters.m", "m must be at least 1");
    Matrix sigma = square_matrix_from_json(detail::field(p, "sigmaD", "$.parameters"), 2 * m, "$.parameters.sigmaD");
    auto q = build_with_heisenberg_ideal(s, d, SymplecticSpace(omega_for(m)), sigma);
    return {name, q.algebra, q.metric.gram()};
  }
  if (doc.kind == "coadjoint_double") {
    AlgebraDocument g = algebra_from_json(detail::field(p, "g", "$.parameters"), "$.parameters.g");
    auto q = coadjoint_double(g.algebra);
    return {name, q.algebra, q.metric.gram()};
  }
  fail("$.kind", "unknown construction kind \"" + doc.kind + "\"");
}

}  // namespace quadlie
