#include "colorlie/structure.hpp"

#include <algorithm>
#include <numeric>

namespace colorlie {

namespace {

[[noreturn]] void fail(bool strict, Errc diagnostic, const std::string& message) {
  if (strict) throw Error(Errc::TheoremViolation, message);
  throw Error(diagnostic, message);
}

std::vector<Matrix> flattened(std::span<const HomogeneousMap> maps) {
  std::vector<Matrix> out;
  out.reserve(maps.size());
  for (const auto& m : maps) out.push_back(m.flatten());
  return out;
}

// Values lambda(x) for a common eigenvector v of the given maps, or nullopt
// if v is not an eigenvector of one of them.
std::optional<Vector> eigen_weight(std::span<const HomogeneousMap> maps, const GradedVector& v) {
  const Vector flat = v.flatten();
  Eigen::Index pivot = 0;
  while (pivot < flat.size() && flat(pivot) == 0) ++pivot;
  if (pivot == flat.size()) return std::nullopt;

  Vector values(static_cast<Eigen::Index>(maps.size()));
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const Vector image = apply(maps[i], v).flatten();
    const Rational c = image(pivot) / flat(pivot);
    if (image != c * flat) return std::nullopt;
    values(static_cast<Eigen::Index>(i)) = c;
  }
  return values;
}

GradedVector first_basis_vector(const SpacePtr& space) {
  return GradedVector::basis_vector(space, space->support().front(), 0);
}

CodimOneIdeal codim_one_ideal_of(const ColorAlgebra& l, const Subspace& derived) {
  if (derived.dim() == l.dim()) throw Error(Errc::NotSolvable, "[L, L] = L");
  std::optional<HomogeneousMap> z;
  std::map<GroupElement, Matrix> rows = derived.coordinate_rows();
  for (const auto& g : l.degrees()) {
    const auto n = static_cast<Eigen::Index>(l.component_dim(g));
    auto [it, inserted] = rows.try_emplace(g, Matrix(0, n));
    const auto r = rref(it->second);
    std::vector<bool> pivot(static_cast<std::size_t>(n), false);
    for (auto p : r.pivots) pivot[static_cast<std::size_t>(p)] = true;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (pivot[static_cast<std::size_t>(j)]) continue;
      const Vector unit = Vector::Unit(n, j);
      if (!z) {
        z = l.element(g, unit);
        continue;
      }
      Matrix grown(it->second.rows() + 1, n);
      grown.topRows(it->second.rows()) = it->second;
      grown.row(it->second.rows()) = unit.transpose();
      it->second = std::move(grown);
    }
  }
  return {Subspace::from_coordinates(l, rows), *z};
}

CommonEigenvector solve_eigenvector(const ColorAlgebra& l, bool strict) {
  const auto& space = l.space_ptr();
  if (l.dim() == 0) {
    return {first_basis_vector(space), Weight(l, Vector(0))};
  }

  // (1) L = K + Qz with K a color ideal containing [L, L]
  const auto whole = Subspace::whole(l);
  const auto split = codim_one_ideal_of(l, bracket_subspaces(whole, whole));
  const ColorAlgebra k = split.ideal.as_algebra();
  const HomogeneousMap& z = split.complement;
  if (!k.closed()) fail(strict, Errc::NotClosed, "codimension-one ideal is not a subalgebra");

  // (2) common eigenvector of K and the weight space W of its weight mu
  const auto inner = solve_eigenvector(k, strict);
  const auto& mu = inner.weight;
  std::vector<HomogeneousMap> conditions;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    const auto& x = k.basis()[i];
    const Rational value = mu.values()(static_cast<Eigen::Index>(i));
    if (!x.degree().is_identity()) {
      if (value != 0) fail(strict, Errc::NoHomogeneousEigenvector, "weight is nonzero on a nonzero degree");
      conditions.push_back(x);
    } else {
      conditions.push_back(x - value * identity_map(space));
    }
  }
  const auto weight_vectors = graded_kernel(space, conditions);
  if (weight_vectors.empty()) fail(strict, Errc::NoHomogeneousEigenvector, "empty weight space");
  const auto w = graded_subspace(space, weight_vectors);

  // (3) mu([y, x]) = 0 for y in K, x in L, so L stabilizes W
  for (const auto& y : k.basis())
    for (const auto& x : l.basis()) {
      const auto c = k.component_coordinates(l.bracket(y, x));
      if (!c) fail(strict, Errc::NotInAlgebra, "[K, L] is not inside K");
      if (c->size() > 0 && mu(l.bracket(y, x)) != 0)
        fail(strict, Errc::NoHomogeneousEigenvector, "weight does not vanish on [K, L]");
    }
  HomogeneousMap z_on_w(w.space, z.degree());
  try {
    z_on_w = w.restrict(z);
  } catch (const Error& e) {
    if (e.code() != Errc::NotInvariant) throw;
    fail(strict, Errc::NoHomogeneousEigenvector, "z does not stabilize the weight space");
  }

  // (4) homogeneous eigenvector of z inside W
  GradedVector found(w.space);
  if (!z.degree().is_identity()) {
    const auto kernel = graded_kernel(w.space, std::span(&z_on_w, 1));
    if (kernel.empty())
      fail(strict, Errc::NoHomogeneousEigenvector,
           "z of degree " + z.degree().to_string() + " has no homogeneous kernel vector on the weight space");
    found = kernel.front();
  } else {
    const auto eig = homogeneous_eigenvalues(z_on_w);
    if (eig.eigenpairs.empty()) {
      const auto& bad = eig.irrational.front();
      throw Error(Errc::IrrationalEigenvalue, "no rational eigenvalue on degree " + bad.degree.to_string() +
                                                  ": characteristic polynomial " + bad.char_poly.to_string())
          .with_polynomial(bad.char_poly.coefficients());
    }
    found = eig.eigenpairs.front().vector;
  }

  const GradedVector v = w.include(found);
  const auto values = eigen_weight(l.basis(), v);
  if (!values) fail(strict, Errc::NoHomogeneousEigenvector, "constructed vector is not a common eigenvector");
  return {v, Weight(l, *values)};
}

ColorFlag flag_of(const ColorAlgebra& l, bool strict) {
  const auto& space = l.space_ptr();
  const int n = space->total_dim();
  ColorFlag flag;
  for (int step = 0; step < n; ++step) {
    try {
      const auto q = graded_quotient(space, flag.basis);
      std::vector<HomogeneousMap> induced;
      induced.reserve(l.dim());
      for (const auto& x : l.basis()) induced.push_back(q.induce(x));
      const auto quotient_algebra = ColorAlgebra::span(q.space, l.bicharacter(), induced);
      if (!quotient_algebra.closed()) fail(strict, Errc::NotClosed, "induced action is not closed");

      const auto found = solve_eigenvector(quotient_algebra, strict);
      const auto values = eigen_weight(induced, found.vector);
      if (!values) fail(strict, Errc::NoHomogeneousEigenvector, "lost the eigenvector in the quotient");
      flag.basis.push_back(q.lift(found.vector));
      flag.weights.emplace_back(l, *values);
    } catch (Error& e) {
      if (!e.depth()) e.at_depth(step);
      throw;
    }
  }

  for (std::size_t i = 0; i < l.dim(); ++i) {
    const Matrix m = flag.matrix_of(l.basis()[i]);
    if (!is_upper_triangular(m)) fail(strict, Errc::NoHomogeneousEigenvector, "flag does not triangularize L");
    for (int k = 0; k < n; ++k)
      if (m(k, k) != flag.weights[static_cast<std::size_t>(k)].values()(static_cast<Eigen::Index>(i)))
        fail(strict, Errc::NoHomogeneousEigenvector, "diagonal entry disagrees with the weight");
  }
  return flag;
}

}  // namespace

// ---------------------------------------------------------------- hypotheses

bool homogeneous_elements_nilpotent(const ColorAlgebra& l, const NilCheckOptions& options) {
  for (const auto& g : l.degrees()) {
    const auto mats = flattened(l.component(g));
    if (!nil_subspace_check(mats, options)) return false;
  }
  return true;
}

bool homogeneous_elements_nilpotent(const Subspace& s, const NilCheckOptions& options) {
  std::map<GroupElement, std::vector<Matrix>> by_degree;
  for (const auto& x : s.basis()) by_degree[x.degree()].push_back(x.flatten());
  for (const auto& [g, mats] : by_degree)
    if (!nil_subspace_check(mats, options)) return false;
  return true;
}

LieHypotheses check_lie_hypotheses(const ColorAlgebra& l, const NilCheckOptions& options) {
  LieHypotheses h;
  h.closed = l.closed();
  h.nonzero_space = l.space().total_dim() > 0;
  h.torsion_free = l.space().group().is_torsion_free();
  if (!h.closed) return h;
  const auto series = derived_series(l);
  h.solvable = series.back().dim() == 0;
  h.derived_nil = series.size() < 2 || homogeneous_elements_nilpotent(series[1], options);
  return h;
}

void require_lie_hypotheses(const ColorAlgebra& l, const NilCheckOptions& options) {
  const auto h = check_lie_hypotheses(l, options);
  if (!h.closed) throw Error(Errc::NotClosed, "L is not closed under the bracket");
  if (!h.nonzero_space) throw Error(Errc::EmptySpace, "V = 0");
  if (!h.torsion_free)
    throw Error(Errc::TorsionGrading, "grading group " + l.space().group().to_string() + " has torsion");
  if (!h.solvable) throw Error(Errc::HypothesisFailed, "L is not solvable");
  if (!h.derived_nil) throw Error(Errc::HypothesisFailed, "[L, L] has a homogeneous element that is not nilpotent");
}

// -------------------------------------------------------------------- Engel

GradedVector common_annihilated_vector(const ColorAlgebra& l, const TheoremOptions& options) {
  if (!l.closed()) throw Error(Errc::NotClosed, "L is not closed under the bracket");
  if (l.space().total_dim() == 0) throw Error(Errc::EmptySpace, "V = 0");
  if (options.check_hypotheses && !homogeneous_elements_nilpotent(l, options.nil))
    throw Error(Errc::HypothesisFailed, "L has a homogeneous element that is not nilpotent");
  const auto kernel = graded_kernel(l.space_ptr(), l.basis());
  if (kernel.empty())
    fail(options.check_hypotheses, Errc::NoCommonAnnihilatedVector, "L has no common homogeneous kernel vector");
  return kernel.front();
}

EngelReport engel_check(const ColorAlgebra& l, const TheoremOptions& options) {
  if (!l.closed()) throw Error(Errc::NotClosed, "L is not closed under the bracket");
  EngelReport report;
  report.all_ad_nilpotent = homogeneous_elements_nilpotent(ad_representation(l), options.nil);
  for (const auto& s : lower_central_series(l)) report.lower_central_dims.push_back(s.dim());
  report.nilpotent = report.lower_central_dims.back() == 0;
  const auto z = center(l);
  if (z.dim() > 0) report.central_witness = z.basis().front();

  if (report.all_ad_nilpotent && !report.nilpotent)
    throw Error(Errc::TheoremViolation, "every homogeneous element is ad-nilpotent but L is not nilpotent");
  if (report.all_ad_nilpotent && l.dim() > 0 && z.dim() == 0)
    throw Error(Errc::TheoremViolation, "ad-nilpotent L with trivial center");
  return report;
}

// --------------------------------------------------------------------- Lie

CodimOneIdeal codim_one_ideal(const ColorAlgebra& l) {
  if (!l.closed()) throw Error(Errc::NotClosed, "L is not closed under the bracket");
  if (l.dim() == 0) throw Error(Errc::ZeroAlgebra, "the zero algebra has no codimension-one ideal");
  if (!is_solvable(l)) throw Error(Errc::NotSolvable, "L is not solvable");
  const auto whole = Subspace::whole(l);
  return codim_one_ideal_of(l, bracket_subspaces(whole, whole));
}

Weight::Weight(ColorAlgebra algebra, Vector values) : algebra_(std::move(algebra)), values_(std::move(values)) {
  if (values_.size() != static_cast<Eigen::Index>(algebra_.dim()))
    throw Error(Errc::ShapeMismatch, "weight needs one value per basis element");
}

Rational Weight::operator()(const HomogeneousMap& x) const {
  return values_.dot(algebra_.coordinates(x));
}

CommonEigenvector common_homogeneous_eigenvector(const ColorAlgebra& l, const TheoremOptions& options) {
  if (options.check_hypotheses) {
    require_lie_hypotheses(l, options.nil);
  } else {
    if (!l.closed()) throw Error(Errc::NotClosed, "L is not closed under the bracket");
    if (l.space().total_dim() == 0) throw Error(Errc::EmptySpace, "V = 0");
  }
  return solve_eigenvector(l, options.check_hypotheses);
}

Matrix ColorFlag::change_of_basis() const {
  if (basis.empty()) return Matrix(0, 0);
  Matrix t(basis.front().space().total_dim(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) t.col(static_cast<Eigen::Index>(j)) = basis[j].flatten();
  return t;
}

Matrix ColorFlag::matrix_of(const HomogeneousMap& x) const {
  const Matrix t = change_of_basis();
  return inverse<Rational>(t) * x.flatten() * t;
}

ColorFlag color_flag(const ColorAlgebra& l, const TheoremOptions& options) {
  if (options.check_hypotheses) {
    require_lie_hypotheses(l, options.nil);
  } else {
    if (!l.closed()) throw Error(Errc::NotClosed, "L is not closed under the bracket");
    if (l.space().total_dim() == 0) throw Error(Errc::EmptySpace, "V = 0");
  }
  return flag_of(l, options.check_hypotheses);
}

IdealChain ideal_chain(const ColorAlgebra& l, const TheoremOptions& options) {
  if (options.check_hypotheses) {
    require_lie_hypotheses(l, options.nil);
  } else if (!l.closed()) {
    throw Error(Errc::NotClosed, "L is not closed under the bracket");
  }
  IdealChain out;
  out.chain.emplace_back(l);
  if (l.dim() == 0) return out;

  const auto flag = flag_of(ad_representation(l), options.check_hypotheses);
  std::vector<HomogeneousMap> prefix;
  for (const auto& v : flag.basis) {
    const auto g = *v.degree();
    prefix.push_back(l.element(g, v.component(g)));
    auto ideal = Subspace::span(l, prefix);
    if (ideal.dim() != prefix.size() || !is_ideal(l, ideal))
      fail(options.check_hypotheses, Errc::NoHomogeneousEigenvector,
           "flag of the adjoint action does not give an ideal of dimension " + std::to_string(prefix.size()));
    out.chain.push_back(std::move(ideal));
  }
  return out;
}

// --------------------------------------------------------- Z_3 counterexample

Z3Report z3_counterexample() {
  auto check = [](bool ok, const char* what) {
    if (!ok) throw Error(Errc::TheoremViolation, std::string("Z_3 counterexample: ") + what);
  };

  const auto z3 = make_group(0, {3});
  const auto deg = [&](std::int64_t i) { return GroupElement(z3, {i}); };
  const auto r = make_bicharacter(z3, Matrix::Ones(1, 1));
  // V_i = Q e_i for i = 1, 2, 3 (3 = 0 in Z_3)
  const auto space = make_space(z3, {{deg(1), 1}, {deg(2), 1}, {deg(0), 1}});
  const Matrix one = Matrix::Ones(1, 1);
  // A e1 = e3, A e2 = e1, A e3 = e2
  const auto a = make_map(space, deg(2), {{deg(1), one}, {deg(2), one}, {deg(0), one}});

  Z3Report report;
  report.matrix = Matrix::Zero(3, 3);
  report.matrix(0, 1) = 1;
  report.matrix(1, 2) = 1;
  report.matrix(2, 0) = 1;
  report.degree = a.degree();
  check(report.degree == deg(2), "deg A != 2");

  const auto l = bracket_closure(space, r, std::span(&a, 1));
  check(l.dim() == 1, "L != QA");
  const auto series = derived_series(l);
  report.derived_zero = series.size() == 2 && series[1].dim() == 0;
  report.solvable = series.back().dim() == 0;
  report.derived_nil = series.size() < 2 || homogeneous_elements_nilpotent(series[1]);
  check(report.derived_zero && report.solvable && report.derived_nil, "L is not abelian");

  report.cube_is_identity = power(a, 3) == identity_map(space);
  check(report.cube_is_identity, "A^3 != I");
  report.char_poly = char_poly(report.matrix);
  report.roots = rational_roots(report.char_poly);
  const auto kernel = kernel_basis((report.matrix - Matrix::Identity(3, 3)).eval());
  check(kernel.size() == 1, "eigenvalue 1 is not simple");
  report.eigenvector = kernel.front();
  const GradedVector graded(space, {{deg(1), report.eigenvector.segment(0, 1)},
                                    {deg(2), report.eigenvector.segment(1, 1)},
                                    {deg(0), report.eigenvector.segment(2, 1)}});
  report.eigenvector_homogeneous = graded.is_homogeneous();
  check(!report.eigenvector_homogeneous, "eigenvector is homogeneous");

  for (bool checked : {true, false}) {
    TheoremOptions options;
    options.check_hypotheses = checked;
    try {
      color_flag(l, options);
      check(false, "color_flag succeeded");
    } catch (const Error& e) {
      (checked ? report.flag_error : report.unchecked_flag_error) = e.code();
      (checked ? report.flag_message : report.unchecked_flag_message) = e.what();
    }
  }

  // Each V_i is a line, so a homogeneous basis is an ordering of rescaled
  // e_i; rescaling does not move zero entries.
  std::array<int, 3> order{0, 1, 2};
  report.triangularizable = false;
  do {
    Matrix p = Matrix::Zero(3, 3);
    for (int j = 0; j < 3; ++j) p(order[static_cast<std::size_t>(j)], j) = 1;
    Z3Report::Ordering o;
    o.order = order;
    o.matrix = p.transpose() * report.matrix * p;
    o.upper_triangular = is_upper_triangular(o.matrix);
    report.triangularizable = report.triangularizable || o.upper_triangular;
    report.orderings.push_back(std::move(o));
  } while (std::next_permutation(order.begin(), order.end()));
  check(report.orderings.size() == 6, "expected six orderings");
  check(!report.triangularizable, "A is upper triangular in a homogeneous basis");
  return report;
}

}  // namespace colorlie
