#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "colorlie/graded_linalg.hpp"

namespace colorlie {

/// [a, b] = ab - r(|b|, |a|) ba for homogeneous a, b.
HomogeneousMap color_bracket(const Bicharacter& r, const HomogeneousMap& a, const HomogeneousMap& b);

/// A linear Lie color algebra: a graded span of homogeneous maps on V.
///
/// The basis of each component L_g is the reduced echelon form of the
/// vectorized spanning maps, so it is canonical and coordinates can be read
/// off at the pivot entries. Copies share the same immutable data, which is
/// also what Subspace uses to identify its parent.
class ColorAlgebra {
 public:
  /// The zero algebra on V.
  ColorAlgebra(SpacePtr space, Bicharacter r);

  /// Span of homogeneous maps; `closed()` reports whether the span is
  /// bracket-closed. Throws GroupMismatch if r lives on another group.
  static ColorAlgebra span(SpacePtr space, Bicharacter r, std::span<const HomogeneousMap> elements);

  const GradedSpace& space() const noexcept { return *data_->space; }
  const SpacePtr& space_ptr() const noexcept { return data_->space; }
  const Bicharacter& bicharacter() const noexcept { return data_->r; }
  bool closed() const noexcept { return data_->closed; }

  std::size_t dim() const noexcept { return data_->basis.size(); }
  /// Basis ordered by degree, then by echelon position.
  const std::vector<HomogeneousMap>& basis() const noexcept { return data_->basis; }
  /// Degrees g with L_g != 0.
  std::vector<GroupElement> degrees() const;
  std::size_t component_dim(const GroupElement& g) const;
  /// Index of the first basis element of degree g.
  std::size_t component_offset(const GroupElement& g) const;
  std::span<const HomogeneousMap> component(const GroupElement& g) const;

  /// Coordinates of homogeneous x in the basis of L_{|x|}, or nullopt if x is not in L.
  std::optional<Vector> component_coordinates(const HomogeneousMap& x) const;
  /// Coordinates in the full basis. Throws NotInAlgebra.
  Vector coordinates(const HomogeneousMap& x) const;
  bool contains(const HomogeneousMap& x) const { return component_coordinates(x).has_value(); }
  HomogeneousMap element(const GroupElement& degree, const Vector& component_coords) const;

  HomogeneousMap bracket(const HomogeneousMap& a, const HomogeneousMap& b) const {
    return color_bracket(bicharacter(), a, b);
  }

  /// L itself as a graded space, dims {g: dim L_g}.
  const SpacePtr& adjoint_space() const noexcept { return data_->adjoint_space; }

  bool same_algebra(const ColorAlgebra& other) const noexcept { return data_ == other.data_; }

 private:
  struct Component {
    std::size_t offset = 0;
    std::vector<Eigen::Index> pivots;
    Matrix echelon;
  };
  struct Data {
    SpacePtr space;
    Bicharacter r;
    bool closed = true;
    std::vector<HomogeneousMap> basis;
    std::map<GroupElement, Component> components;
    SpacePtr adjoint_space;
  };

  explicit ColorAlgebra(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Smallest bracket-closed span containing the generators.
ColorAlgebra bracket_closure(SpacePtr space, const Bicharacter& r, std::span<const HomogeneousMap> generators);

/// Graded subspace of a ColorAlgebra, stored as echelon coordinate rows per degree.
class Subspace {
 public:
  /// The zero subspace.
  explicit Subspace(ColorAlgebra parent);

  static Subspace whole(const ColorAlgebra& parent);
  /// Throws NotInAlgebra for elements outside the parent.
  static Subspace span(const ColorAlgebra& parent, std::span<const HomogeneousMap> elements);
  /// Rows are coordinates in the parent's basis of L_g.
  static Subspace from_coordinates(const ColorAlgebra& parent, const std::map<GroupElement, Matrix>& rows);

  const ColorAlgebra& parent() const noexcept { return parent_; }
  std::size_t dim() const noexcept;
  std::size_t component_dim(const GroupElement& g) const;
  const std::map<GroupElement, Matrix>& coordinate_rows() const noexcept { return rows_; }
  /// Homogeneous basis, in degree order.
  std::vector<HomogeneousMap> basis() const;

  bool contains(const HomogeneousMap& x) const;
  /// Throws ParentMismatch.
  bool contains(const Subspace& other) const;

  /// The subspace as an algebra of its own on the same V. Not necessarily closed.
  ColorAlgebra as_algebra() const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  ColorAlgebra parent_;
  std::map<GroupElement, Matrix> rows_;
};

/// Graded span of [s, t] over homogeneous bases. Throws ParentMismatch, NotClosed.
Subspace bracket_subspaces(const Subspace& s, const Subspace& t);

/// L, [L,L], [[L,L],[L,L]], ... until the dimension stops dropping.
std::vector<Subspace> derived_series(const ColorAlgebra& l);
/// L, [L,L], [L,[L,L]], ... until the dimension stops dropping.
std::vector<Subspace> lower_central_series(const ColorAlgebra& l);
bool is_solvable(const ColorAlgebra& l);
bool is_nilpotent_algebra(const ColorAlgebra& l);

/// Z(L), computed degree by degree; graded because components of central
/// elements are central.
Subspace center(const ColorAlgebra& l);

/// y -> [x, y] as a homogeneous map of degree |x| on adjoint_space().
HomogeneousMap ad_map(const ColorAlgebra& l, const HomogeneousMap& x);
/// ad L inside gl({L_g}); its kernel is Z(L).
ColorAlgebra ad_representation(const ColorAlgebra& l);

/// (ad X)^m (Y) = sum k_ij X^i Y X^j for Y of one fixed degree.
struct AdExpansion {
  struct Term {
    int i = 0;
    int j = 0;
    Rational k;

    friend bool operator==(const Term&, const Term&) = default;
  };

  GroupElement x_degree;
  GroupElement y_degree;
  int power = 0;
  /// Sorted by i descending; i + j == power.
  std::vector<Term> terms;
};

/// Expands by iterating [X, X^i Y X^j] = X^{i+1} Y X^j - r(|X^i Y X^j|, |X|) X^i Y X^{j+1}.
AdExpansion ad_power_expand(const Bicharacter& r, const GroupElement& x_degree,
                            const GroupElement& y_degree, int m);
/// One expansion per degree of L (the k_ij depend on |Y|). Throws NotInAlgebra.
std::map<GroupElement, AdExpansion> ad_power_expand(const ColorAlgebra& l, const HomogeneousMap& x, int m);
HomogeneousMap evaluate(const AdExpansion& expansion, const HomogeneousMap& x, const HomogeneousMap& y);

struct AdNilpotencyCheck {
  /// X itself nilpotent; when false the check is vacuous.
  bool hypothesis_met = false;
  /// (ad X)^(2n) = 0 on L, n = dim V.
  bool ad_nilpotent = true;
};

AdNilpotencyCheck nilpotent_implies_ad_nilpotent_check(const ColorAlgebra& l, const HomogeneousMap& x);

/// [L, S] in S. Throws ParentMismatch.
bool is_ideal(const ColorAlgebra& l, const Subspace& s);

}  // namespace colorlie
