#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "colorlie/rational.hpp"

namespace colorlie {

enum class Errc {
  // grading
  ModulusTooSmall,
  GroupMismatch,
  NotSkewSymmetric,
  BadDiagonal,
  TorsionIncompatible,
  // exact linear algebra
  NotSquare,
  ZeroPolynomial,
  SizeMismatch,
  Singular,
  // graded linear algebra
  ShapeMismatch,
  UnknownDegree,
  SpaceMismatch,
  DegreeMismatch,
  TorsionDegree,
  ZeroDegree,
  NonzeroDegree,
  NotInvariant,
  // color algebras
  ParentMismatch,
  NotClosed,
  NotInAlgebra,
  // structure theory
  NotSolvable,
  ZeroAlgebra,
  EmptySpace,
  HypothesisFailed,
  TorsionGrading,
  NoHomogeneousEigenvector,
  NoCommonAnnihilatedVector,
  IrrationalEigenvalue,
  TheoremViolation,
  // io
  ParseError,
  InternalError,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

  /// Characteristic polynomial (constant term first) for IrrationalEigenvalue.
  const std::vector<Rational>& polynomial() const noexcept { return polynomial_; }
  Error& with_polynomial(std::vector<Rational> coefficients);

  /// Recursion depth of color_flag at which the failure happened.
  std::optional<int> depth() const noexcept { return depth_; }
  Error& at_depth(int depth);

 private:
  Errc code_;
  std::vector<Rational> polynomial_;
  std::optional<int> depth_;
};

}  // namespace colorlie
