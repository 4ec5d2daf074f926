#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "colorlie/rational.hpp"

namespace colorlie {

/// Finitely generated abelian group Z^free_rank x Z_m1 x ... x Z_mk.
class GroupSpec {
 public:
  /// The trivial group.
  GroupSpec() = default;

  int free_rank() const noexcept { return free_rank_; }
  const std::vector<std::int64_t>& torsion_moduli() const noexcept { return torsion_moduli_; }
  int num_generators() const noexcept {
    return free_rank_ + static_cast<int>(torsion_moduli_.size());
  }
  bool is_torsion_free() const noexcept { return torsion_moduli_.empty(); }

  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
  friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;

 private:
  friend GroupSpec make_group(int, std::vector<std::int64_t>);

  int free_rank_ = 0;
  std::vector<std::int64_t> torsion_moduli_;
};

/// Throws ModulusTooSmall for any modulus < 2.
GroupSpec make_group(int free_rank, std::vector<std::int64_t> torsion_moduli = {});

/// An element of a GroupSpec; coordinates are free part then torsion part,
/// torsion coordinates always reduced into [0, m).
class GroupElement {
 public:
  GroupElement() = default;
  /// Throws GroupMismatch when the coordinate count is wrong.
  GroupElement(GroupSpec group, std::vector<std::int64_t> coords);

  static GroupElement identity(const GroupSpec& group);
  /// i-th generator.
  static GroupElement generator(const GroupSpec& group, int i);

  const GroupSpec& group() const noexcept { return group_; }
  std::span<const std::int64_t> coords() const noexcept { return coords_; }
  std::span<const std::int64_t> free_part() const noexcept {
    return std::span(coords_).first(static_cast<std::size_t>(group_.free_rank()));
  }
  std::span<const std::int64_t> torsion_part() const noexcept {
    return std::span(coords_).subspan(static_cast<std::size_t>(group_.free_rank()));
  }

  bool is_identity() const noexcept;
  bool has_infinite_order() const noexcept;

  GroupElement operator-() const;
  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b) { return a + (-b); }
  friend GroupElement operator*(std::int64_t k, const GroupElement& g);

  /// "2", "(1,0)", "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  /// Canonical order: group, then free part lexicographically, then torsion part.
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  GroupSpec group_;
  std::vector<std::int64_t> coords_;
};

inline GroupElement element_add(const GroupElement& a, const GroupElement& b) { return a + b; }
inline bool has_infinite_order(const GroupElement& g) { return g.has_infinite_order(); }

/// Skew-symmetric bicharacter r: G x G -> Q^*, determined by its values on
/// pairs of generators.
class Bicharacter {
 public:
  /// Trivial bicharacter r = 1.
  static Bicharacter trivial(const GroupSpec& group);

  const GroupSpec& group() const noexcept { return group_; }
  const Matrix& values() const noexcept { return values_; }

  /// r(g, h) = prod_ij values(i,j)^(g_i h_j). Throws GroupMismatch.
  Rational operator()(const GroupElement& g, const GroupElement& h) const;

  friend bool operator==(const Bicharacter& a, const Bicharacter& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

 private:
  friend Bicharacter make_bicharacter(const GroupSpec&, Matrix);

  GroupSpec group_;
  Matrix values_;
};

/// Validates skew symmetry, the +-1 diagonal and compatibility with torsion.
Bicharacter make_bicharacter(const GroupSpec& group, Matrix values);

inline Rational eval_bicharacter(const Bicharacter& r, const GroupElement& g, const GroupElement& h) {
  return r(g, h);
}

/// q^e for any integer e; q must be nonzero when e < 0.
Rational pow(const Rational& q, std::int64_t e);

}  // namespace colorlie
