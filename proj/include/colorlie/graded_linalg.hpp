#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "colorlie/exact_linalg.hpp"
#include "colorlie/grading.hpp"

namespace colorlie {

/// V = (+)_g V_g with finitely many nonzero n_g = dim V_g.
///
/// Flattening concatenates the components in canonical degree order, so a
/// homogeneous map becomes an ordinary total_dim x total_dim matrix.
class GradedSpace {
 public:
  /// Degrees with dimension 0 are dropped from the support.
  GradedSpace(GroupSpec group, const std::map<GroupElement, int>& dims);

  const GroupSpec& group() const noexcept { return group_; }
  const std::map<GroupElement, int>& dims() const noexcept { return dims_; }
  int dim(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return dims_.count(g) != 0; }
  const std::vector<GroupElement>& support() const noexcept { return support_; }
  int total_dim() const noexcept { return total_; }
  /// Position of V_g's first coordinate in the flattened vector.
  int offset(const GroupElement& g) const;

  friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
    return a.group_ == b.group_ && a.dims_ == b.dims_;
  }

 private:
  GroupSpec group_;
  std::map<GroupElement, int> dims_;
  std::map<GroupElement, int> offsets_;
  std::vector<GroupElement> support_;
  int total_ = 0;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

/// Throws ShapeMismatch for negative dimensions, GroupMismatch for degrees of another group.
SpacePtr make_space(const GroupSpec& group, const std::map<GroupElement, int>& dims);

/// Homogeneous vector-space element of V, stored componentwise.
class GradedVector {
 public:
  explicit GradedVector(SpacePtr space);
  /// Missing components are zero. Throws ShapeMismatch / UnknownDegree.
  GradedVector(SpacePtr space, const std::map<GroupElement, Vector>& components);

  static GradedVector basis_vector(SpacePtr space, const GroupElement& degree, int index);
  static GradedVector from_flat(SpacePtr space, const Vector& flat);

  const GradedSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  const std::map<GroupElement, Vector>& components() const noexcept { return components_; }
  const Vector& component(const GroupElement& g) const;

  bool is_zero() const;
  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous vector.
  std::optional<GroupElement> degree() const;
  Vector flatten() const;

  friend GradedVector operator+(const GradedVector& a, const GradedVector& b);
  friend GradedVector operator*(const Rational& c, const GradedVector& v);
  friend bool operator==(const GradedVector& a, const GradedVector& b);

 private:
  SpacePtr space_;
  std::map<GroupElement, Vector> components_;
};

/// Linear map of degree u: V_h -> V_{h+u}. Blocks are stored for every source
/// h with both h and h + u in the support; everything else is zero.
class HomogeneousMap {
 public:
  /// Zero map of the given degree.
  HomogeneousMap(SpacePtr space, GroupElement degree);

  const GradedSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  const GroupElement& degree() const noexcept { return degree_; }
  const std::map<GroupElement, Matrix>& blocks() const noexcept { return blocks_; }
  /// Block out of V_source, zero-sized or zero when there is no target.
  Matrix block(const GroupElement& source) const;
  Matrix& mutable_block(const GroupElement& source);

  bool is_zero() const;
  Matrix flatten() const;
  /// Entries of all blocks, concatenated in source order (column-major per block).
  Vector vectorize() const;

  friend bool operator==(const HomogeneousMap& a, const HomogeneousMap& b);

 private:
  SpacePtr space_;
  GroupElement degree_;
  std::map<GroupElement, Matrix> blocks_;
};

/// Validated construction; omitted blocks are zero.
HomogeneousMap make_map(SpacePtr space, const GroupElement& degree,
                        const std::map<GroupElement, Matrix>& blocks);
/// Reads the degree-u blocks out of a flattened matrix. Throws DegreeMismatch
/// when the matrix has entries outside those blocks.
HomogeneousMap map_from_flat(SpacePtr space, const GroupElement& degree, const Matrix& flat);
HomogeneousMap map_from_vector(SpacePtr space, const GroupElement& degree, const Vector& entries);
/// Number of entries vectorize() produces for maps of this degree.
Eigen::Index vector_length(const GradedSpace& space, const GroupElement& degree);
/// Homogeneous components of an arbitrary linear map of V, nonzero ones only.
std::map<GroupElement, HomogeneousMap> decompose(SpacePtr space, const Matrix& flat);

HomogeneousMap identity_map(SpacePtr space);

/// f o g, of degree |f| + |g|.
HomogeneousMap compose(const HomogeneousMap& f, const HomogeneousMap& g);
HomogeneousMap add_maps(const HomogeneousMap& f, const HomogeneousMap& g);
HomogeneousMap scale_map(const Rational& c, const HomogeneousMap& f);
HomogeneousMap power(const HomogeneousMap& f, int exponent);
GradedVector apply(const HomogeneousMap& f, const GradedVector& v);

inline HomogeneousMap operator*(const HomogeneousMap& f, const HomogeneousMap& g) { return compose(f, g); }
inline HomogeneousMap operator+(const HomogeneousMap& f, const HomogeneousMap& g) { return add_maps(f, g); }
inline HomogeneousMap operator*(const Rational& c, const HomogeneousMap& f) { return scale_map(c, f); }
inline HomogeneousMap operator-(const HomogeneousMap& f, const HomogeneousMap& g) {
  return add_maps(f, scale_map(Rational(-1), g));
}

/// Homogeneous basis of the common kernel of `maps`, computed degree by degree.
std::vector<GradedVector> graded_kernel(const SpacePtr& space, std::span<const HomogeneousMap> maps);

struct NilpotencyCertificate {
  /// Longest run g, g+u, ..., g+(N-1)u inside the support; f^N = 0.
  int exponent = 0;
  std::vector<GroupElement> longest_chain;
};

/// For a degree of infinite order the support chains are finite, so some
/// power of f leaves the support. The bound is verified by computing f^N.
/// Throws ZeroDegree, TorsionDegree, or TheoremViolation if f^N != 0.
NilpotencyCertificate nilpotent_by_grading(const HomogeneousMap& f);

struct HomogeneousEigenpair {
  Rational value;
  GradedVector vector;
};

struct IrrationalBlock {
  GroupElement degree;
  Poly<Rational> char_poly;
};

struct EigenReport {
  std::vector<HomogeneousEigenpair> eigenpairs;
  /// Components whose characteristic polynomial does not split over Q.
  std::vector<IrrationalBlock> irrational;
};

/// Eigenpairs of each diagonal block of a degree-0 map. Throws NonzeroDegree.
EigenReport homogeneous_eigenvalues(const HomogeneousMap& f);

/// A graded subspace W of V given by a homogeneous basis per degree.
struct GradedSubspace {
  SpacePtr ambient;
  /// dims {g: dim W_g}
  SpacePtr space;
  /// Columns span W_g inside V_g.
  std::map<GroupElement, Matrix> basis;

  /// Basis as homogeneous vectors of V, in degree order.
  std::vector<GradedVector> vectors() const;
  GradedVector include(const GradedVector& w) const;
  /// Matrix of f restricted to W. Throws NotInvariant if f(W) is not in W.
  HomogeneousMap restrict(const HomogeneousMap& f) const;
};

/// Span of homogeneous vectors. Throws UnknownDegree for non-homogeneous input.
GradedSubspace graded_subspace(const SpacePtr& ambient, std::span<const GradedVector> vectors);

/// V / U for a graded subspace U, with a coordinate complement as section.
struct GradedQuotient {
  SpacePtr ambient;
  SpacePtr space;
  /// n_g x q_g, lifts of the quotient basis.
  std::map<GroupElement, Matrix> section;
  /// q_g x n_g, kills U_g and inverts the section.
  std::map<GroupElement, Matrix> projection;

  GradedVector lift(const GradedVector& q) const;
  GradedVector project(const GradedVector& v) const;
  /// projection o f o section; well defined when U is f-invariant.
  HomogeneousMap induce(const HomogeneousMap& f) const;
};

GradedQuotient graded_quotient(const SpacePtr& ambient, std::span<const GradedVector> subspace);

}  // namespace colorlie
