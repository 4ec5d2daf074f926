#pragma once

// Small named algebras shared by the unit and acceptance tests.

#include "colorlie/structure.hpp"

namespace colorlie::testing {

inline const GroupSpec& trivial_group() {
  static const GroupSpec g = make_group(0);
  return g;
}

inline SpacePtr ungraded_space(int n) {
  return make_space(trivial_group(), {{GroupElement::identity(trivial_group()), n}});
}

/// Matrix unit e_ij (1-based) on Q^n.
inline Matrix unit(int n, int i, int j) {
  Matrix m = Matrix::Zero(n, n);
  m(i - 1, j - 1) = 1;
  return m;
}

inline HomogeneousMap ungraded(const SpacePtr& v, const Matrix& m) {
  return make_map(v, GroupElement::identity(trivial_group()), {{GroupElement::identity(trivial_group()), m}});
}

inline ColorAlgebra ungraded_algebra(int n, const std::vector<Matrix>& gens) {
  const auto v = ungraded_space(n);
  std::vector<HomogeneousMap> maps;
  for (const auto& m : gens) maps.push_back(ungraded(v, m));
  return bracket_closure(v, Bicharacter::trivial(trivial_group()), maps);
}

inline ColorAlgebra heisenberg() { return ungraded_algebra(3, {unit(3, 1, 2), unit(3, 2, 3)}); }

/// Upper triangular n x n matrices.
inline ColorAlgebra borel(int n) {
  std::vector<Matrix> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) gens.push_back(unit(n, i, j));
  return ungraded_algebra(n, gens);
}

/// Z_3, trivial r, V_i = Q e_i, A e1 = e3, A e2 = e1, A e3 = e2.
struct Z3Fixture {
  GroupSpec group = make_group(0, {3});
  Bicharacter r = Bicharacter::trivial(group);
  SpacePtr space;
  HomogeneousMap a;
  ColorAlgebra l;
};

inline Z3Fixture z3_fixture() {
  const auto g = make_group(0, {3});
  const auto deg = [&](std::int64_t i) { return GroupElement(g, {i}); };
  const auto v = make_space(g, {{deg(0), 1}, {deg(1), 1}, {deg(2), 1}});
  const Matrix one = Matrix::Ones(1, 1);
  auto a = make_map(v, deg(2), {{deg(1), one}, {deg(2), one}, {deg(0), one}});
  auto l = bracket_closure(v, Bicharacter::trivial(g), std::span(&a, 1));
  return {g, Bicharacter::trivial(g), v, a, l};
}

}  // namespace colorlie::testing
