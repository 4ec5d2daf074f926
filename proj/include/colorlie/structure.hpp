#pragma once

// Constructive structure theory for linear Lie color algebras: common
// annihilated vectors (Engel), common homogeneous eigenvectors and color
// flags (Lie), chains of color ideals, and the Z_3 counterexample showing
// the torsion-free hypothesis cannot be dropped.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "colorlie/color_algebra.hpp"
#include "colorlie/error.hpp"

namespace colorlie {

struct TheoremOptions {
  /// When false the algorithms run outside their hypotheses and report
  /// failures as diagnostics instead of TheoremViolation.
  bool check_hypotheses = true;
  NilCheckOptions nil;
};

/// Every homogeneous component L_g is a nil subspace.
bool homogeneous_elements_nilpotent(const ColorAlgebra& l, const NilCheckOptions& options = {});
bool homogeneous_elements_nilpotent(const Subspace& s, const NilCheckOptions& options = {});

/// Hypotheses shared by common_homogeneous_eigenvector, color_flag and ideal_chain.
struct LieHypotheses {
  bool closed = false;
  bool nonzero_space = false;
  bool torsion_free = false;
  bool solvable = false;
  bool derived_nil = false;

  bool all() const { return closed && nonzero_space && torsion_free && solvable && derived_nil; }
};

LieHypotheses check_lie_hypotheses(const ColorAlgebra& l, const NilCheckOptions& options = {});
/// Throws NotClosed, EmptySpace, TorsionGrading or HypothesisFailed for the first failing hypothesis.
void require_lie_hypotheses(const ColorAlgebra& l, const NilCheckOptions& options = {});

/// Nonzero homogeneous v with Lv = 0, for L whose homogeneous elements are nilpotent.
GradedVector common_annihilated_vector(const ColorAlgebra& l, const TheoremOptions& options = {});

struct EngelReport {
  bool all_ad_nilpotent = false;
  bool nilpotent = false;
  std::optional<HomogeneousMap> central_witness;
  /// Dimensions along the lower central series.
  std::vector<std::size_t> lower_central_dims;
};

/// Throws TheoremViolation if ad-nilpotency holds but L is not nilpotent.
EngelReport engel_check(const ColorAlgebra& l, const TheoremOptions& options = {});

struct CodimOneIdeal {
  Subspace ideal;
  /// Homogeneous, L = ideal + Q z.
  HomogeneousMap complement;
};

/// Color ideal of codimension one containing [L, L]. Throws NotClosed, NotSolvable, ZeroAlgebra.
CodimOneIdeal codim_one_ideal(const ColorAlgebra& l);

/// Linear functional on an algebra, given by its values on the basis.
class Weight {
 public:
  Weight(ColorAlgebra algebra, Vector values);

  const ColorAlgebra& algebra() const noexcept { return algebra_; }
  const Vector& values() const noexcept { return values_; }
  /// Throws NotInAlgebra.
  Rational operator()(const HomogeneousMap& x) const;

 private:
  ColorAlgebra algebra_;
  Vector values_;
};

struct CommonEigenvector {
  GradedVector vector;
  Weight weight;
};

/// Homogeneous v with x(v) = weight(x) v for all x in L.
///
/// Recursion: K = codim_one_ideal(L) with L = K + Qz, a common eigenvector of
/// K with weight mu, the weight space W of mu (stable under L since
/// mu([K, L]) = 0), and an eigenvector of z on W. A z of nonzero degree acts
/// nilpotently on W, otherwise its eigenvalue comes from a diagonal block.
/// Throws the hypothesis errors, IrrationalEigenvalue (with the characteristic
/// polynomial), or TheoremViolation.
CommonEigenvector common_homogeneous_eigenvector(const ColorAlgebra& l, const TheoremOptions& options = {});

struct ColorFlag {
  /// Homogeneous basis of V; every x in L is upper triangular in it.
  std::vector<GradedVector> basis;
  /// weights[k](x) is the k-th diagonal entry of x.
  std::vector<Weight> weights;

  /// Columns are the flattened basis vectors.
  Matrix change_of_basis() const;
  /// Matrix of x in the flag basis.
  Matrix matrix_of(const HomogeneousMap& x) const;
};

/// Repeatedly extracts a common homogeneous eigenvector and passes to the
/// graded quotient. Errors carry the step at which they occurred.
ColorFlag color_flag(const ColorAlgebra& l, const TheoremOptions& options = {});

struct IdealChain {
  /// 0 = L_0, L_1, ..., L_n = L with dim L_i = i.
  std::vector<Subspace> chain;
};

/// A color flag for the adjoint action, read back as ideals of L.
IdealChain ideal_chain(const ColorAlgebra& l, const TheoremOptions& options = {});

struct Z3Report {
  struct Ordering {
    std::array<int, 3> order{};
    Matrix matrix;
    bool upper_triangular = false;
  };

  /// A in the basis e1, e2, e3.
  Matrix matrix;
  GroupElement degree;
  bool derived_zero = false;
  bool solvable = false;
  bool derived_nil = false;
  bool cube_is_identity = false;
  Poly<Rational> char_poly;
  std::vector<RationalRoot> roots;
  /// Eigenvector for the eigenvalue 1, as coordinates in e1, e2, e3.
  Vector eigenvector;
  bool eigenvector_homogeneous = true;
  /// color_flag with hypotheses checked, then with them skipped.
  Errc flag_error = Errc::InternalError;
  std::string flag_message;
  Errc unchecked_flag_error = Errc::InternalError;
  std::string unchecked_flag_message;
  std::vector<Ordering> orderings;
  bool triangularizable = true;
};

/// G = Z_3, trivial r, V_i = Q e_i, A cyclic of degree 2, L = QA.
/// Throws TheoremViolation if any expected property fails.
Z3Report z3_counterexample();

}  // namespace colorlie
