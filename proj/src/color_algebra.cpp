#include "colorlie/color_algebra.hpp"

#include <algorithm>

#include "colorlie/error.hpp"

namespace colorlie {

HomogeneousMap color_bracket(const Bicharacter& r, const HomogeneousMap& a, const HomogeneousMap& b) {
  if (!(r.group() == a.space().group()))
    throw Error(Errc::GroupMismatch, "bicharacter on " + r.group().to_string() + ", maps graded by " +
                                         a.space().group().to_string());
  return compose(a, b) - r(b.degree(), a.degree()) * compose(b, a);
}

// --------------------------------------------------------------- ColorAlgebra

ColorAlgebra::ColorAlgebra(SpacePtr space, Bicharacter r) {
  if (!(r.group() == space->group()))
    throw Error(Errc::GroupMismatch, "bicharacter on " + r.group().to_string() + ", space graded by " +
                                         space->group().to_string());
  auto data = std::make_shared<Data>();
  data->space = std::move(space);
  data->r = std::move(r);
  data->adjoint_space = make_space(data->space->group(), {});
  data_ = std::move(data);
}

ColorAlgebra ColorAlgebra::span(SpacePtr space, Bicharacter r, std::span<const HomogeneousMap> elements) {
  ColorAlgebra zero(space, std::move(r));
  auto data = std::make_shared<Data>(*zero.data_);

  std::map<GroupElement, std::vector<Vector>> rows;
  for (const auto& x : elements) {
    if (!(x.space() == *space)) throw Error(Errc::SpaceMismatch, "span: element acts on another space");
    if (!x.is_zero()) rows[x.degree()].push_back(x.vectorize());
  }

  std::map<GroupElement, int> adjoint_dims;
  for (const auto& [g, vs] : rows) {
    Matrix m(static_cast<Eigen::Index>(vs.size()), vs.front().size());
    for (std::size_t i = 0; i < vs.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
    const auto red = rref(m);
    Component c;
    c.offset = data->basis.size();
    c.pivots = red.pivots;
    c.echelon = red.reduced.topRows(red.rank());
    for (Eigen::Index i = 0; i < red.rank(); ++i)
      data->basis.push_back(map_from_vector(space, g, red.reduced.row(i).transpose()));
    adjoint_dims.emplace(g, static_cast<int>(red.rank()));
    data->components.emplace(g, std::move(c));
  }
  data->adjoint_space = make_space(space->group(), adjoint_dims);

  ColorAlgebra out{std::shared_ptr<const Data>(data)};
  bool closed = true;
  for (std::size_t i = 0; i < out.dim() && closed; ++i)
    for (std::size_t j = i; j < out.dim() && closed; ++j)
      closed = out.contains(out.bracket(out.basis()[i], out.basis()[j]));
  data->closed = closed;
  return out;
}

std::vector<GroupElement> ColorAlgebra::degrees() const {
  std::vector<GroupElement> out;
  for (const auto& [g, c] : data_->components) out.push_back(g);
  return out;
}

std::size_t ColorAlgebra::component_dim(const GroupElement& g) const {
  const auto it = data_->components.find(g);
  return it == data_->components.end() ? 0 : it->second.pivots.size();
}

std::size_t ColorAlgebra::component_offset(const GroupElement& g) const {
  const auto it = data_->components.find(g);
  if (it != data_->components.end()) return it->second.offset;
  // first index past every lower degree
  std::size_t offset = 0;
  for (const auto& [h, c] : data_->components)
    if (h < g) offset = c.offset + c.pivots.size();
  return offset;
}

std::span<const HomogeneousMap> ColorAlgebra::component(const GroupElement& g) const {
  return std::span(data_->basis).subspan(component_offset(g), component_dim(g));
}

std::optional<Vector> ColorAlgebra::component_coordinates(const HomogeneousMap& x) const {
  if (!(x.space() == space())) return std::nullopt;
  const auto it = data_->components.find(x.degree());
  if (it == data_->components.end()) {
    if (x.is_zero()) return Vector(0);
    return std::nullopt;
  }
  const auto& c = it->second;
  const Vector v = x.vectorize();
  Vector coords(static_cast<Eigen::Index>(c.pivots.size()));
  for (std::size_t i = 0; i < c.pivots.size(); ++i) coords(static_cast<Eigen::Index>(i)) = v(c.pivots[i]);
  if (Vector(c.echelon.transpose() * coords) != v) return std::nullopt;
  return coords;
}

Vector ColorAlgebra::coordinates(const HomogeneousMap& x) const {
  const auto local = component_coordinates(x);
  if (!local) throw Error(Errc::NotInAlgebra, "element of degree " + x.degree().to_string() + " is not in L");
  Vector full = Vector::Zero(static_cast<Eigen::Index>(dim()));
  if (local->size() > 0) full.segment(static_cast<Eigen::Index>(component_offset(x.degree())), local->size()) = *local;
  return full;
}

HomogeneousMap ColorAlgebra::element(const GroupElement& degree, const Vector& component_coords) const {
  const auto basis = component(degree);
  if (static_cast<std::size_t>(component_coords.size()) != basis.size())
    throw Error(Errc::ShapeMismatch, "coordinate vector does not match dim L_" + degree.to_string());
  HomogeneousMap x(space_ptr(), degree);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (component_coords(static_cast<Eigen::Index>(i)) != 0)
      x = x + component_coords(static_cast<Eigen::Index>(i)) * basis[i];
  return x;
}

ColorAlgebra bracket_closure(SpacePtr space, const Bicharacter& r, std::span<const HomogeneousMap> generators) {
  ColorAlgebra l = ColorAlgebra::span(space, r, generators);
  const auto n = static_cast<std::size_t>(space->total_dim());
  const std::size_t max_passes = n * n + 1;
  for (std::size_t pass = 0; !l.closed(); ++pass) {
    if (pass > max_passes) throw Error(Errc::InternalError, "bracket closure did not stabilize");
    std::vector<HomogeneousMap> elements = l.basis();
    for (std::size_t i = 0; i < l.dim(); ++i)
      for (std::size_t j = i; j < l.dim(); ++j) {
        auto c = l.bracket(l.basis()[i], l.basis()[j]);
        if (!l.contains(c)) elements.push_back(std::move(c));
      }
    l = ColorAlgebra::span(space, r, elements);
  }
  return l;
}

// ------------------------------------------------------------------- Subspace

namespace {

void require_same_parent(const ColorAlgebra& a, const ColorAlgebra& b) {
  if (!a.same_algebra(b)) throw Error(Errc::ParentMismatch, "subspaces of different algebras");
}

void require_closed(const ColorAlgebra& l) {
  if (!l.closed()) throw Error(Errc::NotClosed, "algebra is not closed under the bracket");
}

// Echelonized nonzero rows.
Matrix echelon_rows(const Matrix& rows) {
  const auto r = rref(rows);
  return r.reduced.topRows(r.rank());
}

Matrix stack(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), std::max(a.cols(), b.cols()));
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

}  // namespace

Subspace::Subspace(ColorAlgebra parent) : parent_(std::move(parent)) {}

Subspace Subspace::whole(const ColorAlgebra& parent) {
  std::map<GroupElement, Matrix> rows;
  for (const auto& g : parent.degrees()) {
    const auto d = static_cast<Eigen::Index>(parent.component_dim(g));
    rows.emplace(g, Matrix::Identity(d, d));
  }
  return from_coordinates(parent, rows);
}

Subspace Subspace::span(const ColorAlgebra& parent, std::span<const HomogeneousMap> elements) {
  std::map<GroupElement, Matrix> rows;
  for (const auto& x : elements) {
    const auto c = parent.component_coordinates(x);
    if (!c) throw Error(Errc::NotInAlgebra, "spanning element of degree " + x.degree().to_string() + " is not in L");
    if (c->size() == 0 || is_zero(*c)) continue;
    auto [it, inserted] = rows.try_emplace(x.degree(), Matrix(0, c->size()));
    it->second = stack(it->second, c->transpose());
  }
  return from_coordinates(parent, rows);
}

Subspace Subspace::from_coordinates(const ColorAlgebra& parent, const std::map<GroupElement, Matrix>& rows) {
  Subspace s(parent);
  for (const auto& [g, m] : rows) {
    if (m.cols() != static_cast<Eigen::Index>(parent.component_dim(g)))
      throw Error(Errc::ShapeMismatch, "coordinate rows do not match dim L_" + g.to_string());
    Matrix e = echelon_rows(m);
    if (e.rows() > 0) s.rows_.emplace(g, std::move(e));
  }
  return s;
}

std::size_t Subspace::dim() const noexcept {
  std::size_t n = 0;
  for (const auto& [g, m] : rows_) n += static_cast<std::size_t>(m.rows());
  return n;
}

std::size_t Subspace::component_dim(const GroupElement& g) const {
  const auto it = rows_.find(g);
  return it == rows_.end() ? 0 : static_cast<std::size_t>(it->second.rows());
}

std::vector<HomogeneousMap> Subspace::basis() const {
  std::vector<HomogeneousMap> out;
  for (const auto& [g, m] : rows_)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(parent_.element(g, m.row(i).transpose()));
  return out;
}

bool Subspace::contains(const HomogeneousMap& x) const {
  const auto c = parent_.component_coordinates(x);
  if (!c) return false;
  if (c->size() == 0 || is_zero(*c)) return true;
  const auto it = rows_.find(x.degree());
  if (it == rows_.end()) return false;
  return rank(stack(it->second, c->transpose())) == it->second.rows();
}

bool Subspace::contains(const Subspace& other) const {
  require_same_parent(parent_, other.parent_);
  for (const auto& [g, m] : other.rows_) {
    const auto it = rows_.find(g);
    if (it == rows_.end()) return false;
    if (rank(stack(it->second, m)) != it->second.rows()) return false;
  }
  return true;
}

ColorAlgebra Subspace::as_algebra() const {
  const auto b = basis();
  return ColorAlgebra::span(parent_.space_ptr(), parent_.bicharacter(), b);
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  require_same_parent(a.parent_, b.parent_);
  auto rows = a.rows_;
  for (const auto& [g, m] : b.rows_) {
    auto [it, inserted] = rows.try_emplace(g, Matrix(0, m.cols()));
    it->second = stack(it->second, m);
  }
  return Subspace::from_coordinates(a.parent_, rows);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.parent_.same_algebra(b.parent_) && a.rows_ == b.rows_;
}

// ----------------------------------------------------------- series & center

Subspace bracket_subspaces(const Subspace& s, const Subspace& t) {
  require_same_parent(s.parent(), t.parent());
  const auto& l = s.parent();
  require_closed(l);
  const auto sb = s.basis();
  const auto tb = t.basis();
  std::vector<HomogeneousMap> brackets;
  brackets.reserve(sb.size() * tb.size());
  for (const auto& x : sb)
    for (const auto& y : tb) brackets.push_back(l.bracket(x, y));
  return Subspace::span(l, brackets);
}

std::vector<Subspace> derived_series(const ColorAlgebra& l) {
  require_closed(l);
  std::vector<Subspace> series{Subspace::whole(l)};
  while (series.back().dim() > 0) {
    auto next = bracket_subspaces(series.back(), series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> lower_central_series(const ColorAlgebra& l) {
  require_closed(l);
  const auto whole = Subspace::whole(l);
  std::vector<Subspace> series{whole};
  while (series.back().dim() > 0) {
    auto next = bracket_subspaces(whole, series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const ColorAlgebra& l) { return derived_series(l).back().dim() == 0; }

bool is_nilpotent_algebra(const ColorAlgebra& l) { return lower_central_series(l).back().dim() == 0; }

Subspace center(const ColorAlgebra& l) {
  require_closed(l);
  std::map<GroupElement, Matrix> rows;
  for (const auto& g : l.degrees()) {
    const auto comp = l.component(g);
    // column j: all entries of [b_j, y] for every basis y, concatenated
    std::vector<Vector> columns;
    for (const auto& x : comp) {
      std::vector<Vector> parts;
      Eigen::Index length = 0;
      for (const auto& y : l.basis()) {
        parts.push_back(l.bracket(x, y).vectorize());
        length += parts.back().size();
      }
      Vector col(length);
      Eigen::Index pos = 0;
      for (const auto& p : parts) {
        col.segment(pos, p.size()) = p;
        pos += p.size();
      }
      columns.push_back(std::move(col));
    }
    Matrix system(columns.front().size(), static_cast<Eigen::Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) system.col(static_cast<Eigen::Index>(j)) = columns[j];
    const auto kernel = kernel_basis(system);
    if (kernel.empty()) continue;
    Matrix m(static_cast<Eigen::Index>(kernel.size()), system.cols());
    for (std::size_t i = 0; i < kernel.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = kernel[i].transpose();
    rows.emplace(g, std::move(m));
  }
  return Subspace::from_coordinates(l, rows);
}

// ----------------------------------------------------------------------- ad

HomogeneousMap ad_map(const ColorAlgebra& l, const HomogeneousMap& x) {
  require_closed(l);
  if (!l.contains(x)) throw Error(Errc::NotInAlgebra, "ad of an element outside L");
  const auto& adj = l.adjoint_space();
  HomogeneousMap out(adj, x.degree());
  for (const auto& h : l.degrees()) {
    const auto target = h + x.degree();
    const auto source = l.component(h);
    if (!adj->contains(target)) {
      for (const auto& y : source)
        if (!l.bracket(x, y).is_zero()) throw Error(Errc::NotInAlgebra, "[x, y] leaves L");
      continue;
    }
    Matrix& b = out.mutable_block(h);
    for (std::size_t j = 0; j < source.size(); ++j) {
      const auto c = l.component_coordinates(l.bracket(x, source[j]));
      if (!c) throw Error(Errc::NotInAlgebra, "[x, y] leaves L");
      b.col(static_cast<Eigen::Index>(j)) = *c;
    }
  }
  return out;
}

ColorAlgebra ad_representation(const ColorAlgebra& l) {
  std::vector<HomogeneousMap> images;
  images.reserve(l.dim());
  for (const auto& x : l.basis()) images.push_back(ad_map(l, x));
  return ColorAlgebra::span(l.adjoint_space(), l.bicharacter(), images);
}

AdExpansion ad_power_expand(const Bicharacter& r, const GroupElement& x_degree, const GroupElement& y_degree, int m) {
  if (m < 0) throw Error(Errc::InternalError, "negative power of ad");
  std::map<std::pair<int, int>, Rational> terms{{{0, 0}, Rational(1)}};
  const Rational rxx = r(x_degree, x_degree);
  const Rational ryx = r(y_degree, x_degree);
  for (int step = 0; step < m; ++step) {
    std::map<std::pair<int, int>, Rational> next;
    for (const auto& [ij, k] : terms) {
      const auto [i, j] = ij;
      // r(|X^i Y X^j|, |X|) = r(|X|,|X|)^(i+j) r(|Y|,|X|)
      const Rational twist = pow(rxx, i + j) * ryx;
      next[{i + 1, j}] += k;
      next[{i, j + 1}] -= k * twist;
    }
    terms.clear();
    for (auto& [ij, k] : next)
      if (k != 0) terms.emplace(ij, std::move(k));
  }
  AdExpansion out{x_degree, y_degree, m, {}};
  for (const auto& [ij, k] : terms) out.terms.push_back({ij.first, ij.second, k});
  std::sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) { return a.i > b.i; });
  return out;
}

std::map<GroupElement, AdExpansion> ad_power_expand(const ColorAlgebra& l, const HomogeneousMap& x, int m) {
  if (!l.contains(x)) throw Error(Errc::NotInAlgebra, "ad_power_expand of an element outside L");
  std::map<GroupElement, AdExpansion> out;
  for (const auto& g : l.degrees()) out.emplace(g, ad_power_expand(l.bicharacter(), x.degree(), g, m));
  return out;
}

HomogeneousMap evaluate(const AdExpansion& e, const HomogeneousMap& x, const HomogeneousMap& y) {
  if (x.degree() != e.x_degree || y.degree() != e.y_degree)
    throw Error(Errc::DegreeMismatch, "expansion was computed for other degrees");
  HomogeneousMap acc(x.space_ptr(), y.degree() + e.power * x.degree());
  for (const auto& t : e.terms) acc = acc + t.k * compose(power(x, t.i), compose(y, power(x, t.j)));
  return acc;
}

AdNilpotencyCheck nilpotent_implies_ad_nilpotent_check(const ColorAlgebra& l, const HomogeneousMap& x) {
  if (!l.contains(x)) throw Error(Errc::NotInAlgebra, "element outside L");
  AdNilpotencyCheck out;
  out.hypothesis_met = is_nilpotent_matrix(x.flatten());
  if (!out.hypothesis_met) return out;
  const int n = l.space().total_dim();
  out.ad_nilpotent = power(ad_map(l, x), 2 * n).is_zero();
  return out;
}

bool is_ideal(const ColorAlgebra& l, const Subspace& s) {
  require_same_parent(l, s.parent());
  return s.contains(bracket_subspaces(Subspace::whole(l), s));
}

}  // namespace colorlie
