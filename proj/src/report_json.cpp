#include "colorlie/report_json.hpp"

namespace colorlie {

using nlohmann::json;

namespace {

json graded_dims(const Subspace& s) {
  json dims = json::array();
  for (const auto& [g, rows] : s.coordinate_rows())
    if (rows.rows() > 0) dims.push_back({{"degree", to_json(g)}, {"dim", rows.rows()}});
  return dims;
}

json series(const std::vector<Subspace>& steps) {
  json out = json::array();
  for (const auto& s : steps) out.push_back({{"dim", s.dim()}, {"components", graded_dims(s)}});
  return out;
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

json to_json(const GroupElement& g) { return std::vector<std::int64_t>(g.coords().begin(), g.coords().end()); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const GradedVector& v) {
  json out;
  if (const auto g = v.degree()) out["degree"] = to_json(*g);
  json coords = json::array();
  const Vector flat = v.flatten();
  for (Eigen::Index i = 0; i < flat.size(); ++i) coords.push_back(to_string(flat(i)));
  out["coordinates"] = std::move(coords);
  return out;
}

json to_json(const HomogeneousMap& x) {
  json blocks = json::array();
  for (const auto& [source, block] : x.blocks())
    if (!colorlie::is_zero(block)) blocks.push_back({{"source", to_json(source)}, {"matrix", to_json(block)}});
  return {{"degree", to_json(x.degree())}, {"blocks", std::move(blocks)}};
}

json to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& x : s.basis()) basis.push_back(to_json(x));
  return {{"dim", s.dim()}, {"components", graded_dims(s)}, {"basis", std::move(basis)}};
}

json to_json(const Error& e) {
  json out{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (const auto& p = e.polynomial(); !p.empty()) {
    json coeffs = json::array();
    for (const auto& c : p) coeffs.push_back(to_string(c));
    out["char_poly"] = Poly<Rational>(p).to_string("t");
    out["char_poly_coefficients"] = std::move(coeffs);
  }
  if (const auto d = e.depth()) out["depth"] = *d;
  return out;
}

json validate_report(const ProblemFile& problem, const ColorAlgebra& l) {
  json components = json::array();
  for (const auto& g : l.degrees()) components.push_back({{"degree", to_json(g)}, {"dim", l.component_dim(g)}});
  json space = json::array();
  for (const auto& g : problem.space->support())
    space.push_back({{"degree", to_json(g)}, {"dim", problem.space->dim(g)}});
  return {{"group", problem.group.to_string()},
          {"torsion_free", problem.group.is_torsion_free()},
          {"bicharacter", to_json(problem.bicharacter.values())},
          {"space", std::move(space)},
          {"generators", problem.generators.size()},
          {"dim", l.dim()},
          {"components", std::move(components)}};
}

json series_report(const ColorAlgebra& l) {
  const auto derived = derived_series(l);
  const auto lower = lower_central_series(l);
  return {{"derived", series(derived)},
          {"lower_central", series(lower)},
          {"solvable", derived.back().dim() == 0},
          {"nilpotent", lower.back().dim() == 0}};
}

json flag_report(const ProblemFile& problem, const ColorFlag& flag) {
  json basis = json::array();
  for (const auto& v : flag.basis) basis.push_back(to_json(v));
  json generators = json::array();
  for (const auto& gen : problem.generators) {
    json diagonal = json::array();
    const Matrix m = flag.matrix_of(gen.map);
    for (Eigen::Index k = 0; k < m.rows(); ++k) diagonal.push_back(to_string(m(k, k)));
    generators.push_back({{"name", gen.name},
                          {"matrix", to_json(m)},
                          {"upper_triangular", is_upper_triangular(m)},
                          {"weights", std::move(diagonal)}});
  }
  return {{"basis", std::move(basis)}, {"generators", std::move(generators)}};
}

json chain_report(const IdealChain& chain) {
  json out = json::array();
  for (const auto& s : chain.chain) out.push_back(to_json(s));
  json dims = json::array();
  for (const auto& s : chain.chain) dims.push_back(s.dim());
  return {{"dims", std::move(dims)}, {"chain", std::move(out)}};
}

json z3_report(const Z3Report& r) {
  json roots = json::array();
  for (const auto& root : r.roots) roots.push_back({{"value", to_string(root.value)}, {"multiplicity", root.multiplicity}});
  json eigenvector = json::array();
  for (Eigen::Index i = 0; i < r.eigenvector.size(); ++i) eigenvector.push_back(to_string(r.eigenvector(i)));
  json orderings = json::array();
  for (const auto& o : r.orderings) {
    json order = json::array();
    for (int i : o.order) order.push_back("e" + std::to_string(i + 1));
    orderings.push_back({{"basis", std::move(order)}, {"matrix", to_json(o.matrix)}, {"upper_triangular", o.upper_triangular}});
  }
  return {{"matrix", to_json(r.matrix)},
          {"degree", to_json(r.degree)},
          {"derived_zero", r.derived_zero},
          {"solvable", r.solvable},
          {"derived_nil", r.derived_nil},
          {"cube_is_identity", r.cube_is_identity},
          {"char_poly", r.char_poly.to_string("t")},
          {"rational_roots", std::move(roots)},
          {"eigenvector", std::move(eigenvector)},
          {"eigenvector_homogeneous", r.eigenvector_homogeneous},
          {"flag", {{"checked", {{"error", std::string(to_string(r.flag_error))}, {"message", r.flag_message}}},
                    {"unchecked", {{"error", std::string(to_string(r.unchecked_flag_error))},
                                   {"message", r.unchecked_flag_message}}}}},
          {"orderings_checked", r.orderings.size()},
          {"orderings", std::move(orderings)},
          {"triangularizable", r.triangularizable}};
}

}  // namespace colorlie
