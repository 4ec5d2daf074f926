#pragma once

// Exact dense linear algebra over a field scalar (in practice Rational).
// Nothing here compares against a tolerance: every test is "== Scalar(0)".

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "colorlie/error.hpp"
#include "colorlie/rational.hpp"

namespace colorlie {

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

template <typename Derived>
bool is_upper_triangular(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = j + 1; i < m.rows(); ++i)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

template <typename Scalar>
struct RrefResult {
  MatrixX<Scalar> reduced;
  std::vector<Eigen::Index> pivots;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Reduced row echelon form by Gauss-Jordan elimination with exact pivots.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RrefResult<Scalar> out{m, {}};
  auto& a = out.reduced;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = row;
    while (pivot < rows && a(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index j = col; j < cols; ++j) a(row, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || a(i, col) == Scalar(0)) continue;
      const Scalar factor = a(i, col);
      for (Eigen::Index j = col; j < cols; ++j) a(i, j) -= factor * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Null space basis, one vector per free column of the echelon form.
template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto r = rref(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<VectorX<Scalar>> basis;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Zero(cols);
    v(free) = Scalar(1);
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
      v(r.pivots[k]) = -r.reduced(static_cast<Eigen::Index>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves basis * x = rhs column by column. Returns nullopt if some column of
/// rhs is outside the column span of basis. Columns of basis must be
/// independent for the solution to be unique.
template <typename Scalar>
std::optional<MatrixX<Scalar>> solve_in_column_span(const MatrixX<Scalar>& basis,
                                                    const MatrixX<Scalar>& rhs) {
  if (basis.rows() != rhs.rows()) throw Error(Errc::SizeMismatch, "solve: row count differs");
  MatrixX<Scalar> augmented(basis.rows(), basis.cols() + rhs.cols());
  augmented << basis, rhs;
  const auto r = rref(augmented);
  for (auto p : r.pivots)
    if (p >= basis.cols()) return std::nullopt;
  MatrixX<Scalar> x = MatrixX<Scalar>::Zero(basis.cols(), rhs.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k)
    x.row(r.pivots[k]) = r.reduced.row(static_cast<Eigen::Index>(k)).tail(rhs.cols());
  return x;
}

template <typename Scalar>
MatrixX<Scalar> inverse(const MatrixX<Scalar>& m) {
  if (m.rows() != m.cols()) throw Error(Errc::NotSquare, "inverse of a non-square matrix");
  auto x = solve_in_column_span<Scalar>(m, MatrixX<Scalar>::Identity(m.rows(), m.rows()));
  if (!x || rank(m) != m.rows()) throw Error(Errc::Singular, "matrix is singular");
  return *x;
}

/// Dense univariate polynomial, constant term first, never with a zero
/// leading coefficient.
template <typename Scalar>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  static Poly constant(Scalar c) { return Poly(std::vector<Scalar>{std::move(c)}); }
  static Poly monomial(int degree, Scalar c = Scalar(1)) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = std::move(c);
    return Poly(std::move(v));
  }
  /// t - root
  static Poly linear(const Scalar& root) { return Poly({-root, Scalar(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)]
                                                          : Scalar(0);
  }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

  Scalar operator()(const Scalar& t) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  /// Horner evaluation at a square matrix.
  template <typename Derived>
  MatrixX<Scalar> operator()(const Eigen::MatrixBase<Derived>& m) const {
    const auto n = m.rows();
    MatrixX<Scalar> acc = MatrixX<Scalar>::Zero(n, n);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = (acc * m).eval();
      for (Eigen::Index i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + Scalar(-1) * b; }
  friend Poly operator*(const Scalar& c, const Poly& p) {
    std::vector<Scalar> v = p.coeffs_;
    for (auto& x : v) x *= c;
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Synthetic division by (t - root); the remainder is p(root).
  std::pair<Poly, Scalar> divide_linear(const Scalar& root) const {
    if (coeffs_.empty()) return {Poly(), Scalar(0)};
    std::vector<Scalar> q(coeffs_.size() - 1, Scalar(0));
    Scalar carry(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      carry = carry * root + coeffs_[k];
      if (k > 0) q[k - 1] = carry;
    }
    return {Poly(std::move(q)), carry};
  }

  std::string to_string(const std::string& var = "t") const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == Scalar(0)) continue;
      const bool negative = c < Scalar(0);
      const Scalar mag = negative ? Scalar(-c) : c;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      const bool unit = mag == Scalar(1);
      if (!unit || k == 0) {
        out += colorlie::to_string(mag);
        if (k > 0) out += "*";
      }
      if (k >= 1) out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

/// Characteristic polynomial det(tI - m) via reduction to Hessenberg form
/// followed by the Hessenberg determinant recurrence. O(n^3) exact operations.
template <typename Derived>
Poly<typename Derived::Scalar> char_poly(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw Error(Errc::NotSquare, "char_poly of a non-square matrix");
  const Eigen::Index n = m.rows();
  MatrixX<Scalar> h = m;

  for (Eigen::Index piv = 1; piv + 1 < n; ++piv) {
    Eigen::Index i = piv;
    while (i < n && h(i, piv - 1) == Scalar(0)) ++i;
    if (i == n) continue;
    if (i != piv) {
      h.row(i).swap(h.row(piv));
      h.col(i).swap(h.col(piv));
    }
    for (Eigen::Index j = piv + 1; j < n; ++j) {
      if (h(j, piv - 1) == Scalar(0)) continue;
      const Scalar u = h(j, piv - 1) / h(piv, piv - 1);
      h.row(j) -= u * h.row(piv);
      h.col(piv) += u * h.col(j);
    }
  }

  std::vector<Poly<Scalar>> p;
  p.reserve(static_cast<std::size_t>(n) + 1);
  p.push_back(Poly<Scalar>::constant(Scalar(1)));
  for (Eigen::Index k = 1; k <= n; ++k) {
    Poly<Scalar> next = Poly<Scalar>::linear(h(k - 1, k - 1)) * p[static_cast<std::size_t>(k - 1)];
    Scalar sub(1);
    for (Eigen::Index i = 1; i < k; ++i) {
      sub *= h(k - i, k - i - 1);
      if (sub == Scalar(0)) break;
      next = next - (sub * h(k - i - 1, k - 1)) * p[static_cast<std::size_t>(k - i - 1)];
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

struct RationalRoot {
  Rational value;
  int multiplicity = 0;

  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// All rational roots with multiplicity, ascending. Candidates p/q come from
/// the divisors of the constant and leading coefficients of the primitive
/// integer polynomial, so the search is exhaustive.
std::vector<RationalRoot> rational_roots(const Poly<Rational>& p);

/// m^n == 0 for an n x n matrix, by repeated squaring.
template <typename Derived>
bool is_nilpotent_matrix(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw Error(Errc::NotSquare, "nilpotency test of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return true;
  MatrixX<Scalar> power = m;
  for (Eigen::Index exponent = 1; exponent < n; exponent *= 2) {
    if (is_zero(power)) return true;
    power = (power * power).eval();
  }
  return is_zero(power);
}

enum class NilPolicy {
  automatic,      ///< deterministic for spans of dimension <= 4, probabilistic above
  deterministic,
  probabilistic,
};

struct NilCheckOptions {
  NilPolicy policy = NilPolicy::automatic;
  std::uint64_t seed = 0;
  int trials = 3;
  /// Evaluation points are drawn uniformly from [-range, range]^s.
  std::int64_t range = std::int64_t{1} << 20;
};

namespace detail {

// trace((sum_i t_i B_i)^k) == 0 for k = 1..n at one point t.
template <typename Scalar>
bool power_traces_vanish(std::span<const MatrixX<Scalar>> basis,
                         const std::vector<std::int64_t>& point) {
  const Eigen::Index n = basis.front().rows();
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(n, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (point[i] != 0) m += Scalar(point[i]) * basis[i];
  MatrixX<Scalar> power = m;
  for (Eigen::Index k = 1; k <= n; ++k) {
    if (power.trace() != Scalar(0)) return false;
    if (k < n) power = (power * m).eval();
  }
  return true;
}

// Visits every point (1, a_2, ..., a_s) with a_i >= 0 and sum a_i <= bound.
template <typename Visit>
bool for_each_simplex_point(std::size_t s, std::int64_t bound, Visit&& visit) {
  std::vector<std::int64_t> point(s, 0);
  point[0] = 1;
  if (s == 1) return visit(point);
  auto recurse = [&](auto&& self, std::size_t slot, std::int64_t remaining) -> bool {
    if (slot == s) return visit(point);
    for (std::int64_t a = 0; a <= remaining; ++a) {
      point[slot] = a;
      if (!self(self, slot + 1, remaining - a)) return false;
    }
    point[slot] = 0;
    return true;
  };
  return recurse(recurse, 1, bound);
}

}  // namespace detail

/// True iff every element of span(basis) is nilpotent.
///
/// In characteristic zero X is nilpotent iff tr(X^k) = 0 for k = 1..n, so the
/// span is nil iff each p_k(t) = tr((sum t_i B_i)^k) vanishes identically.
/// p_k is homogeneous, so p_k == 0 iff p_k(1, t_2, ..., t_s) == 0, a polynomial
/// of total degree <= k in s - 1 variables; those are determined by their
/// values on the lattice simplex {a >= 0, |a| <= n}. The deterministic policy
/// evaluates there. The probabilistic policy evaluates at `trials` random
/// points; a non-nil span passes one trial with probability <= n / (2 range + 1).
template <typename Scalar>
bool nil_subspace_check(std::span<const MatrixX<Scalar>> basis, const NilCheckOptions& options = {}) {
  if (basis.empty()) return true;
  const Eigen::Index n = basis.front().rows();
  for (const auto& b : basis)
    if (b.rows() != n || b.cols() != n)
      throw Error(Errc::SizeMismatch, "nil_subspace_check: matrices differ in size or are not square");

  NilPolicy policy = options.policy;
  if (policy == NilPolicy::automatic)
    policy = basis.size() <= 4 ? NilPolicy::deterministic : NilPolicy::probabilistic;

  if (policy == NilPolicy::deterministic) {
    return detail::for_each_simplex_point(basis.size(), n, [&](const std::vector<std::int64_t>& t) {
      return detail::power_traces_vanish(basis, t);
    });
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::int64_t> coordinate(-options.range, options.range);
  for (int trial = 0; trial < std::max(options.trials, 1); ++trial) {
    std::vector<std::int64_t> t(basis.size());
    for (auto& x : t) x = coordinate(rng);
    if (!detail::power_traces_vanish(basis, t)) return false;
  }
  return true;
}

template <typename Scalar>
bool nil_subspace_check(const std::vector<MatrixX<Scalar>>& basis, const NilCheckOptions& options = {}) {
  return nil_subspace_check(std::span<const MatrixX<Scalar>>(basis), options);
}

}  // namespace colorlie
