#include "colorlie/graded_linalg.hpp"

#include "colorlie/error.hpp"

namespace colorlie {

namespace {

void require_same_space(const GradedSpace& a, const GradedSpace& b, const char* what) {
  if (&a != &b && !(a == b)) throw Error(Errc::SpaceMismatch, std::string(what) + ": maps act on different spaces");
}

void require_group(const GroupSpec& expected, const GroupElement& g) {
  if (!(g.group() == expected))
    throw Error(Errc::GroupMismatch, "degree " + g.to_string() + " is not an element of " + expected.to_string());
}

}  // namespace

// ---------------------------------------------------------------- GradedSpace

GradedSpace::GradedSpace(GroupSpec group, const std::map<GroupElement, int>& dims)
    : group_(std::move(group)) {
  for (const auto& [g, n] : dims) {
    require_group(group_, g);
    if (n < 0) throw Error(Errc::ShapeMismatch, "negative dimension at degree " + g.to_string());
    if (n == 0) continue;
    dims_.emplace(g, n);
  }
  for (const auto& [g, n] : dims_) {
    offsets_.emplace(g, total_);
    support_.push_back(g);
    total_ += n;
  }
}

int GradedSpace::dim(const GroupElement& g) const {
  const auto it = dims_.find(g);
  return it == dims_.end() ? 0 : it->second;
}

int GradedSpace::offset(const GroupElement& g) const {
  const auto it = offsets_.find(g);
  if (it == offsets_.end()) throw Error(Errc::UnknownDegree, "degree " + g.to_string() + " is not in the support");
  return it->second;
}

SpacePtr make_space(const GroupSpec& group, const std::map<GroupElement, int>& dims) {
  return std::make_shared<const GradedSpace>(group, dims);
}

// --------------------------------------------------------------- GradedVector

GradedVector::GradedVector(SpacePtr space) : space_(std::move(space)) {
  for (const auto& [g, n] : space_->dims()) components_.emplace(g, Vector::Zero(n));
}

GradedVector::GradedVector(SpacePtr space, const std::map<GroupElement, Vector>& components)
    : GradedVector(std::move(space)) {
  for (const auto& [g, v] : components) {
    const auto it = components_.find(g);
    if (it == components_.end()) {
      if (colorlie::is_zero(v)) continue;
      throw Error(Errc::UnknownDegree, "vector component at degree " + g.to_string() + " outside the support");
    }
    if (v.size() != it->second.size())
      throw Error(Errc::ShapeMismatch, "component at degree " + g.to_string() + " has length " +
                                           std::to_string(v.size()) + ", expected " +
                                           std::to_string(it->second.size()));
    it->second = v;
  }
}

GradedVector GradedVector::basis_vector(SpacePtr space, const GroupElement& degree, int index) {
  GradedVector v(std::move(space));
  auto it = v.components_.find(degree);
  if (it == v.components_.end() || index < 0 || index >= it->second.size())
    throw Error(Errc::UnknownDegree, "no basis vector " + std::to_string(index) + " at degree " + degree.to_string());
  it->second(index) = 1;
  return v;
}

GradedVector GradedVector::from_flat(SpacePtr space, const Vector& flat) {
  if (flat.size() != space->total_dim()) throw Error(Errc::ShapeMismatch, "flat vector has the wrong length");
  GradedVector v(space);
  for (auto& [g, c] : v.components_) c = flat.segment(space->offset(g), c.size());
  return v;
}

const Vector& GradedVector::component(const GroupElement& g) const {
  const auto it = components_.find(g);
  if (it == components_.end()) throw Error(Errc::UnknownDegree, "degree " + g.to_string() + " is not in the support");
  return it->second;
}

bool GradedVector::is_zero() const {
  for (const auto& [g, c] : components_)
    if (!colorlie::is_zero(c)) return false;
  return true;
}

bool GradedVector::is_homogeneous() const {
  int nonzero = 0;
  for (const auto& [g, c] : components_)
    if (!colorlie::is_zero(c)) ++nonzero;
  return nonzero <= 1;
}

std::optional<GroupElement> GradedVector::degree() const {
  std::optional<GroupElement> found;
  for (const auto& [g, c] : components_) {
    if (colorlie::is_zero(c)) continue;
    if (found) return std::nullopt;
    found = g;
  }
  return found;
}

Vector GradedVector::flatten() const {
  Vector flat(space_->total_dim());
  for (const auto& [g, c] : components_) flat.segment(space_->offset(g), c.size()) = c;
  return flat;
}

GradedVector operator+(const GradedVector& a, const GradedVector& b) {
  require_same_space(*a.space_, *b.space_, "vector sum");
  GradedVector out = a;
  for (auto& [g, c] : out.components_) c += b.components_.at(g);
  return out;
}

GradedVector operator*(const Rational& c, const GradedVector& v) {
  GradedVector out = v;
  for (auto& [g, x] : out.components_) x *= c;
  return out;
}

bool operator==(const GradedVector& a, const GradedVector& b) {
  return *a.space_ == *b.space_ && a.components_ == b.components_;
}

// ------------------------------------------------------------- HomogeneousMap

HomogeneousMap::HomogeneousMap(SpacePtr space, GroupElement degree)
    : space_(std::move(space)), degree_(std::move(degree)) {
  require_group(space_->group(), degree_);
  for (const auto& [h, n] : space_->dims()) {
    const int m = space_->dim(h + degree_);
    if (m > 0) blocks_.emplace(h, Matrix::Zero(m, n));
  }
}

Matrix HomogeneousMap::block(const GroupElement& source) const {
  const auto it = blocks_.find(source);
  if (it != blocks_.end()) return it->second;
  return Matrix::Zero(space_->dim(source + degree_), space_->dim(source));
}

Matrix& HomogeneousMap::mutable_block(const GroupElement& source) {
  const auto it = blocks_.find(source);
  if (it == blocks_.end())
    throw Error(Errc::UnknownDegree, "degree " + degree_.to_string() + " map has no block out of " + source.to_string());
  return it->second;
}

bool HomogeneousMap::is_zero() const {
  for (const auto& [h, b] : blocks_)
    if (!colorlie::is_zero(b)) return false;
  return true;
}

Matrix HomogeneousMap::flatten() const {
  const auto n = space_->total_dim();
  Matrix flat = Matrix::Zero(n, n);
  for (const auto& [h, b] : blocks_)
    flat.block(space_->offset(h + degree_), space_->offset(h), b.rows(), b.cols()) = b;
  return flat;
}

Vector HomogeneousMap::vectorize() const {
  Vector v(vector_length(*space_, degree_));
  Eigen::Index pos = 0;
  for (const auto& [h, b] : blocks_) {
    v.segment(pos, b.size()) = b.reshaped();
    pos += b.size();
  }
  return v;
}

bool operator==(const HomogeneousMap& a, const HomogeneousMap& b) {
  return *a.space_ == *b.space_ && a.degree_ == b.degree_ && a.blocks_ == b.blocks_;
}

Eigen::Index vector_length(const GradedSpace& space, const GroupElement& degree) {
  Eigen::Index n = 0;
  for (const auto& [h, d] : space.dims()) n += static_cast<Eigen::Index>(d) * space.dim(h + degree);
  return n;
}

HomogeneousMap make_map(SpacePtr space, const GroupElement& degree, const std::map<GroupElement, Matrix>& blocks) {
  HomogeneousMap f(space, degree);
  for (const auto& [h, b] : blocks) {
    require_group(space->group(), h);
    if (!space->contains(h) || !space->contains(h + degree)) {
      if (colorlie::is_zero(b)) continue;
      throw Error(Errc::UnknownDegree, "block out of degree " + h.to_string() + " into degree " +
                                           (h + degree).to_string() + " leaves the support");
    }
    Matrix& target = f.mutable_block(h);
    if (b.rows() != target.rows() || b.cols() != target.cols())
      throw Error(Errc::ShapeMismatch, "block out of degree " + h.to_string() + " is " + std::to_string(b.rows()) +
                                           "x" + std::to_string(b.cols()) + ", expected " +
                                           std::to_string(target.rows()) + "x" + std::to_string(target.cols()));
    target = b;
  }
  return f;
}

HomogeneousMap map_from_flat(SpacePtr space, const GroupElement& degree, const Matrix& flat) {
  const auto n = space->total_dim();
  if (flat.rows() != n || flat.cols() != n) throw Error(Errc::ShapeMismatch, "flat matrix has the wrong size");
  HomogeneousMap f(space, degree);
  for (const auto& [h, d] : space->dims()) {
    const auto target = h + degree;
    if (!space->contains(target)) continue;
    f.mutable_block(h) = flat.block(space->offset(target), space->offset(h), space->dim(target), d);
  }
  if (f.flatten() != flat)
    throw Error(Errc::DegreeMismatch, "matrix is not homogeneous of degree " + degree.to_string());
  return f;
}

HomogeneousMap map_from_vector(SpacePtr space, const GroupElement& degree, const Vector& entries) {
  if (entries.size() != vector_length(*space, degree))
    throw Error(Errc::ShapeMismatch, "coefficient vector has the wrong length");
  HomogeneousMap f(space, degree);
  Eigen::Index pos = 0;
  for (const auto& [h, d] : space->dims()) {
    if (!space->contains(h + degree)) continue;
    Matrix& b = f.mutable_block(h);
    b = entries.segment(pos, b.size()).reshaped(b.rows(), b.cols());
    pos += b.size();
  }
  return f;
}

std::map<GroupElement, HomogeneousMap> decompose(SpacePtr space, const Matrix& flat) {
  const auto n = space->total_dim();
  if (flat.rows() != n || flat.cols() != n) throw Error(Errc::ShapeMismatch, "flat matrix has the wrong size");
  std::map<GroupElement, HomogeneousMap> parts;
  for (const auto& [h, dh] : space->dims())
    for (const auto& [g, dg] : space->dims()) {
      const Matrix b = flat.block(space->offset(g), space->offset(h), dg, dh);
      if (is_zero(b)) continue;
      const auto u = g - h;
      auto it = parts.try_emplace(u, space, u).first;
      it->second.mutable_block(h) = b;
    }
  return parts;
}

HomogeneousMap identity_map(SpacePtr space) {
  HomogeneousMap f(space, GroupElement::identity(space->group()));
  for (auto& [h, d] : space->dims()) f.mutable_block(h) = Matrix::Identity(d, d);
  return f;
}

HomogeneousMap compose(const HomogeneousMap& f, const HomogeneousMap& g) {
  require_same_space(f.space(), g.space(), "compose");
  HomogeneousMap out(f.space_ptr(), f.degree() + g.degree());
  for (auto& [h, b] : out.blocks()) {
    const auto mid = h + g.degree();
    out.mutable_block(h) = f.block(mid) * g.block(h);
  }
  return out;
}

HomogeneousMap add_maps(const HomogeneousMap& f, const HomogeneousMap& g) {
  require_same_space(f.space(), g.space(), "add_maps");
  if (f.degree() != g.degree())
    throw Error(Errc::DegreeMismatch, "adding maps of degrees " + f.degree().to_string() + " and " + g.degree().to_string());
  HomogeneousMap out = f;
  for (const auto& [h, b] : g.blocks()) out.mutable_block(h) += b;
  return out;
}

HomogeneousMap scale_map(const Rational& c, const HomogeneousMap& f) {
  HomogeneousMap out = f;
  for (const auto& [h, b] : f.blocks()) out.mutable_block(h) = c * b;
  return out;
}

HomogeneousMap power(const HomogeneousMap& f, int exponent) {
  if (exponent < 0) throw Error(Errc::InternalError, "negative exponent");
  HomogeneousMap acc = identity_map(f.space_ptr());
  for (int k = 0; k < exponent; ++k) acc = compose(f, acc);
  return acc;
}

GradedVector apply(const HomogeneousMap& f, const GradedVector& v) {
  require_same_space(f.space(), v.space(), "apply");
  std::map<GroupElement, Vector> out;
  for (const auto& [h, b] : f.blocks()) out.emplace(h + f.degree(), b * v.component(h));
  return GradedVector(f.space_ptr(), out);
}

std::vector<GradedVector> graded_kernel(const SpacePtr& space, std::span<const HomogeneousMap> maps) {
  for (const auto& f : maps) require_same_space(*space, f.space(), "graded_kernel");
  std::vector<GradedVector> basis;
  for (const auto& [g, n] : space->dims()) {
    Eigen::Index rows = 0;
    for (const auto& f : maps) rows += f.block(g).rows();
    Matrix stacked(rows, n);
    Eigen::Index pos = 0;
    for (const auto& f : maps) {
      const Matrix b = f.block(g);
      stacked.middleRows(pos, b.rows()) = b;
      pos += b.rows();
    }
    for (auto& v : kernel_basis(stacked)) basis.emplace_back(space, std::map<GroupElement, Vector>{{g, v}});
  }
  return basis;
}

NilpotencyCertificate nilpotent_by_grading(const HomogeneousMap& f) {
  const auto& u = f.degree();
  if (u.is_identity()) throw Error(Errc::ZeroDegree, "map has degree 0; the grading forces nothing");
  if (!u.has_infinite_order())
    throw Error(Errc::TorsionDegree, "degree " + u.to_string() + " has finite order");

  NilpotencyCertificate cert;
  for (const auto& g : f.space().support()) {
    std::vector<GroupElement> chain{g};
    while (f.space().contains(chain.back() + u)) chain.push_back(chain.back() + u);
    if (static_cast<int>(chain.size()) > cert.exponent) {
      cert.exponent = static_cast<int>(chain.size());
      cert.longest_chain = std::move(chain);
    }
  }
  if (!power(f, cert.exponent).is_zero())
    throw Error(Errc::TheoremViolation, "f^" + std::to_string(cert.exponent) + " != 0 for a degree of infinite order");
  return cert;
}

EigenReport homogeneous_eigenvalues(const HomogeneousMap& f) {
  if (!f.degree().is_identity())
    throw Error(Errc::NonzeroDegree, "homogeneous_eigenvalues needs a degree-0 map, got degree " + f.degree().to_string());
  EigenReport report;
  for (const auto& [g, n] : f.space().dims()) {
    const Matrix b = f.block(g);
    const auto cp = char_poly(b);
    int found = 0;
    for (const auto& root : rational_roots(cp)) {
      found += root.multiplicity;
      const auto kernel = kernel_basis((b - root.value * Matrix::Identity(n, n)).eval());
      report.eigenpairs.push_back({root.value, GradedVector(f.space_ptr(), {{g, kernel.front()}})});
    }
    if (found < n) report.irrational.push_back({g, cp});
  }
  return report;
}

// ------------------------------------------------------------ GradedSubspace

namespace {

// Rows of the rref of the given columns, transposed back: an independent
// basis of their span.
Matrix column_basis(const Matrix& columns) {
  const auto r = rref(columns.transpose().eval());
  return r.reduced.topRows(r.rank()).transpose();
}

std::map<GroupElement, Matrix> group_by_degree(const SpacePtr& ambient, std::span<const GradedVector> vectors) {
  std::map<GroupElement, std::vector<Vector>> cols;
  for (const auto& v : vectors) {
    require_same_space(*ambient, v.space(), "graded subspace");
    const auto d = v.degree();
    if (!d) {
      if (v.is_zero()) continue;
      throw Error(Errc::DegreeMismatch, "graded subspace spanned by a non-homogeneous vector");
    }
    cols[*d].push_back(v.component(*d));
  }
  std::map<GroupElement, Matrix> out;
  for (const auto& [g, vs] : cols) {
    Matrix m(ambient->dim(g), static_cast<Eigen::Index>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vs[j];
    Matrix b = column_basis(m);
    if (b.cols() > 0) out.emplace(g, std::move(b));
  }
  return out;
}

}  // namespace

GradedSubspace graded_subspace(const SpacePtr& ambient, std::span<const GradedVector> vectors) {
  GradedSubspace w;
  w.ambient = ambient;
  w.basis = group_by_degree(ambient, vectors);
  std::map<GroupElement, int> dims;
  for (const auto& [g, b] : w.basis) dims.emplace(g, static_cast<int>(b.cols()));
  w.space = make_space(ambient->group(), dims);
  return w;
}

std::vector<GradedVector> GradedSubspace::vectors() const {
  std::vector<GradedVector> out;
  for (const auto& [g, b] : basis)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      out.emplace_back(ambient, std::map<GroupElement, Vector>{{g, b.col(j)}});
  return out;
}

GradedVector GradedSubspace::include(const GradedVector& w) const {
  require_same_space(*space, w.space(), "include");
  std::map<GroupElement, Vector> out;
  for (const auto& [g, b] : basis) out.emplace(g, b * w.component(g));
  return GradedVector(ambient, out);
}

HomogeneousMap GradedSubspace::restrict(const HomogeneousMap& f) const {
  require_same_space(*ambient, f.space(), "restrict");
  HomogeneousMap out(space, f.degree());
  for (const auto& [h, b] : basis) {
    const auto target = h + f.degree();
    const Matrix image = f.block(h) * b;
    const auto it = basis.find(target);
    if (it == basis.end()) {
      if (!is_zero(image)) throw Error(Errc::NotInvariant, "map sends W_" + h.to_string() + " outside W");
      continue;
    }
    auto coords = solve_in_column_span<Rational>(it->second, image);
    if (!coords) throw Error(Errc::NotInvariant, "map sends W_" + h.to_string() + " outside W");
    out.mutable_block(h) = *coords;
  }
  return out;
}

GradedQuotient graded_quotient(const SpacePtr& ambient, std::span<const GradedVector> subspace) {
  const auto sub = group_by_degree(ambient, subspace);
  GradedQuotient q;
  q.ambient = ambient;
  std::map<GroupElement, int> dims;
  for (const auto& [g, n] : ambient->dims()) {
    Matrix u = Matrix::Zero(n, 0);
    if (const auto it = sub.find(g); it != sub.end()) u = it->second;
    const auto r = rref(u.transpose().eval());
    std::vector<bool> pivot(static_cast<std::size_t>(n), false);
    for (auto p : r.pivots) pivot[static_cast<std::size_t>(p)] = true;
    const int k = static_cast<int>(r.rank());
    if (k == n) continue;
    Matrix section = Matrix::Zero(n, n - k);
    for (Eigen::Index j = 0, c = 0; j < n; ++j)
      if (!pivot[static_cast<std::size_t>(j)]) section(j, c++) = 1;
    Matrix full(n, n);
    full.leftCols(k) = column_basis(u);
    full.rightCols(n - k) = section;
    const Matrix inv = inverse<Rational>(full);
    q.section.emplace(g, section);
    q.projection.emplace(g, inv.bottomRows(n - k));
    dims.emplace(g, n - k);
  }
  q.space = make_space(ambient->group(), dims);
  return q;
}

GradedVector GradedQuotient::lift(const GradedVector& v) const {
  require_same_space(*space, v.space(), "lift");
  std::map<GroupElement, Vector> out;
  for (const auto& [g, s] : section) out.emplace(g, s * v.component(g));
  return GradedVector(ambient, out);
}

GradedVector GradedQuotient::project(const GradedVector& v) const {
  require_same_space(*ambient, v.space(), "project");
  std::map<GroupElement, Vector> out;
  for (const auto& [g, p] : projection) out.emplace(g, p * v.component(g));
  return GradedVector(space, out);
}

HomogeneousMap GradedQuotient::induce(const HomogeneousMap& f) const {
  require_same_space(*ambient, f.space(), "induce");
  HomogeneousMap out(space, f.degree());
  for (const auto& [h, s] : section) {
    const auto target = h + f.degree();
    const auto it = projection.find(target);
    if (it == projection.end()) continue;
    out.mutable_block(h) = it->second * f.block(h) * s;
  }
  return out;
}

}  // namespace colorlie
