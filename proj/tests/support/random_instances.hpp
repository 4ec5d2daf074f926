#pragma once

// Seeded generators for graded spaces, homogeneous maps and algebra
// instances with known structure, plus brute-force oracles.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "colorlie/structure.hpp"

namespace colorlie::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// p/q with |p| <= bound, 1 <= q <= 3.
inline Rational small_rational(Rng& rng, std::int64_t bound = 3) {
  return Rational(Integer(uniform(rng, -bound, bound)), Integer(uniform(rng, 1, 3)));
}

inline Rational nonzero_rational(Rng& rng, std::int64_t bound = 3) {
  for (;;)
    if (auto q = small_rational(rng, bound); q != 0) return q;
}

inline Matrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, double density = 0.6) {
  Matrix m = Matrix::Zero(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      if (coin(rng, density)) m(i, j) = small_rational(rng);
  return m;
}

/// Invertible by construction: unit lower times diagonal times unit upper.
inline Matrix random_invertible(Rng& rng, Eigen::Index n) {
  Matrix lower = Matrix::Identity(n, n), upper = Matrix::Identity(n, n), diag = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    diag(i, i) = nonzero_rational(rng, 2);
    for (Eigen::Index j = 0; j < i; ++j) {
      lower(i, j) = small_rational(rng, 2);
      upper(j, i) = small_rational(rng, 2);
    }
  }
  return lower * diag * upper;
}

struct Config {
  std::string name;
  GroupSpec group;
  Bicharacter r;
};

/// The (group, bicharacter) pairs used across the property tests.
inline std::vector<Config> configs() {
  std::vector<Config> out;
  auto add = [&](std::string name, GroupSpec g, Matrix v) {
    auto r = make_bicharacter(g, std::move(v));
    out.push_back({std::move(name), std::move(g), std::move(r)});
  };
  const auto trivial = make_group(0);
  out.push_back({"0", trivial, Bicharacter::trivial(trivial)});
  add("Z", make_group(1), Matrix::Ones(1, 1));
  add("Z super", make_group(1), -Matrix::Ones(1, 1));
  Matrix z2v(2, 2);
  z2v << Rational(1), Rational(2), Rational(1, 2), Rational(-1);
  add("Z^2 twisted", make_group(2), z2v);
  add("Z_2 super", make_group(0, {2}), -Matrix::Ones(1, 1));
  add("Z_3 trivial", make_group(0, {3}), Matrix::Ones(1, 1));
  Matrix mixed(2, 2);
  mixed << Rational(1), Rational(-1), Rational(-1), Rational(-1);
  add("Z x Z_2", make_group(1, {2}), mixed);
  return out;
}

inline std::vector<Config> torsion_free_configs() {
  auto all = configs();
  std::erase_if(all, [](const Config& c) { return !c.group.is_torsion_free(); });
  return all;
}

inline GroupElement random_element(Rng& rng, const GroupSpec& g, std::int64_t bound = 2) {
  std::vector<std::int64_t> coords;
  for (int i = 0; i < g.free_rank(); ++i) coords.push_back(uniform(rng, -bound, bound));
  for (auto m : g.torsion_moduli()) coords.push_back(uniform(rng, 0, m - 1));
  return GroupElement(g, std::move(coords));
}

/// Random support of up to `max_degrees` degrees, total dimension in [1, max_total].
inline SpacePtr random_space(Rng& rng, const GroupSpec& g, int max_total, int max_degrees = 3) {
  std::map<GroupElement, int> dims;
  const int total = static_cast<int>(uniform(rng, 1, max_total));
  const int degrees = static_cast<int>(uniform(rng, 1, max_degrees));
  std::vector<GroupElement> support;
  for (int i = 0; i < degrees; ++i) support.push_back(random_element(rng, g));
  for (int i = 0; i < total; ++i) dims[support[static_cast<std::size_t>(uniform(rng, 0, degrees - 1))]] += 1;
  return make_space(g, dims);
}

/// Degrees u with some V_h -> V_{h+u} block, identity included.
inline std::vector<GroupElement> block_degrees(const GradedSpace& v) {
  std::vector<GroupElement> out;
  for (const auto& a : v.support())
    for (const auto& b : v.support()) out.push_back(b - a);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline GroupElement random_block_degree(Rng& rng, const GradedSpace& v) {
  const auto degrees = block_degrees(v);
  return degrees[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(degrees.size()) - 1))];
}

inline HomogeneousMap random_map(Rng& rng, const SpacePtr& v, const GroupElement& u, double density = 0.6) {
  HomogeneousMap f(v, u);
  for (const auto& [source, block] : f.blocks()) f.mutable_block(source) = random_matrix(rng, block.rows(), block.cols(), density);
  return f;
}

inline HomogeneousMap random_map(Rng& rng, const SpacePtr& v, double density = 0.6) {
  return random_map(rng, v, random_block_degree(rng, *v), density);
}

/// Random degree-0 invertible P with its inverse.
struct Conjugator {
  HomogeneousMap p;
  HomogeneousMap p_inv;

  HomogeneousMap operator()(const HomogeneousMap& x) const { return p * x * p_inv; }
  GradedVector apply_to(const GradedVector& v) const { return colorlie::apply(p, v); }
};

inline Conjugator random_conjugator(Rng& rng, const SpacePtr& v) {
  const auto zero = GroupElement::identity(v->group());
  std::map<GroupElement, Matrix> p, p_inv;
  for (const auto& g : v->support()) {
    const Matrix m = random_invertible(rng, v->dim(g));
    p[g] = m;
    p_inv[g] = inverse<Rational>(m);
  }
  return {make_map(v, zero, p), make_map(v, zero, p_inv)};
}

/// Flattened basis indices in a random order: position[i] is the rank of e_i.
inline std::vector<int> random_flag_positions(Rng& rng, int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) position[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  return position;
}

/// Map of degree u whose flattened matrix is upper triangular with respect
/// to the flag order; diagonal entries only when `diagonal` (degree 0 only).
inline HomogeneousMap random_flag_map(Rng& rng, const SpacePtr& v, const GroupElement& u,
                                      const std::vector<int>& position, bool diagonal, double density) {
  HomogeneousMap f(v, u);
  for (const auto& [source, block] : f.blocks()) {
    const int so = v->offset(source), to = v->offset(source + u);
    Matrix m = Matrix::Zero(block.rows(), block.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        const int pi = position[static_cast<std::size_t>(to + i)], pj = position[static_cast<std::size_t>(so + j)];
        if (pi < pj && coin(rng, density)) m(i, j) = small_rational(rng);
        if (pi == pj && diagonal) m(i, j) = small_rational(rng);
      }
    f.mutable_block(source) = m;
  }
  return f;
}

struct Instance {
  Config config;
  SpacePtr space;
  std::vector<HomogeneousMap> generators;
  ColorAlgebra algebra;
};

struct InstanceShape {
  int max_total = 4;
  int max_generators = 3;
  double density = 0.5;
  std::size_t max_algebra_dim = 8;
};

/// Bracket closure of conjugated flag maps; strictly upper triangular (nil)
/// or upper triangular with diagonal on degree 0 (solvable).
inline Instance flag_instance(Rng& rng, const Config& config, bool strictly, const InstanceShape& shape = {}) {
  for (;;) {
    const auto v = random_space(rng, config.group, shape.max_total);
    const auto position = random_flag_positions(rng, v->total_dim());
    const auto conj = random_conjugator(rng, v);
    std::vector<HomogeneousMap> gens;
    const int count = static_cast<int>(uniform(rng, 1, shape.max_generators));
    for (int i = 0; i < count; ++i) {
      const auto u = random_block_degree(rng, *v);
      const bool diagonal = !strictly && u.is_identity();
      gens.push_back(conj(random_flag_map(rng, v, u, position, diagonal, shape.density)));
    }
    auto l = bracket_closure(v, config.r, gens);
    if (l.dim() > shape.max_algebra_dim) continue;
    return {config, v, std::move(gens), std::move(l)};
  }
}

inline Instance nil_instance(Rng& rng, const Config& config, const InstanceShape& shape = {}) {
  return flag_instance(rng, config, true, shape);
}

inline Instance solvable_instance(Rng& rng, const Config& config, const InstanceShape& shape = {}) {
  return flag_instance(rng, config, false, shape);
}

/// x^k by repeated multiplication, up to k = n.
inline bool nilpotent_by_powers(const Matrix& x) {
  if (x.rows() == 0) return true;
  Matrix p = x;
  for (Eigen::Index k = 1; k <= x.rows(); ++k) {
    if (colorlie::is_zero(p)) return true;
    p = (p * x).eval();
  }
  return colorlie::is_zero(p);
}

/// Nil on span(basis) by sampling every integer combination in [-k, k]^s.
/// Exact for spans of dimension <= 2 once k >= n: the power traces are
/// homogeneous of degree <= n in the coefficients.
inline bool nil_by_grid(const std::vector<Matrix>& basis, std::int64_t k) {
  if (basis.empty()) return true;
  const Eigen::Index n = basis.front().rows();
  std::vector<std::int64_t> t(basis.size(), -k);
  for (;;) {
    Matrix x = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < basis.size(); ++i) x += Rational(t[i]) * basis[i];
    if (!nilpotent_by_powers(x)) return false;
    std::size_t i = 0;
    while (i < t.size() && t[i] == k) t[i++] = -k;
    if (i == t.size()) return true;
    ++t[i];
  }
}

/// det by the Leibniz formula.
inline Rational leibniz_det(const Matrix& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(static_cast<Eigen::Index>(i), perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// det(t I - m) evaluated at t.
inline Rational char_poly_at(const Matrix& m, const Rational& t) {
  return leibniz_det((t * Matrix::Identity(m.rows(), m.cols()) - m).eval());
}

}  // namespace colorlie::testing
