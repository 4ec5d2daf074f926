#include "colorlie/error.hpp"

namespace colorlie {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ModulusTooSmall: return "ModulusTooSmall";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NotSkewSymmetric: return "NotSkewSymmetric";
    case Errc::BadDiagonal: return "BadDiagonal";
    case Errc::TorsionIncompatible: return "TorsionIncompatible";
    case Errc::NotSquare: return "NotSquare";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::Singular: return "Singular";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::UnknownDegree: return "UnknownDegree";
    case Errc::SpaceMismatch: return "SpaceMismatch";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::TorsionDegree: return "TorsionDegree";
    case Errc::ZeroDegree: return "ZeroDegree";
    case Errc::NonzeroDegree: return "NonzeroDegree";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::ParentMismatch: return "ParentMismatch";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotInAlgebra: return "NotInAlgebra";
    case Errc::NotSolvable: return "NotSolvable";
    case Errc::ZeroAlgebra: return "ZeroAlgebra";
    case Errc::EmptySpace: return "EmptySpace";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::TorsionGrading: return "TorsionGrading";
    case Errc::NoHomogeneousEigenvector: return "NoHomogeneousEigenvector";
    case Errc::NoCommonAnnihilatedVector: return "NoCommonAnnihilatedVector";
    case Errc::IrrationalEigenvalue: return "IrrationalEigenvalue";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::ParseError: return "ParseError";
    case Errc::InternalError: return "InternalError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

Error& Error::with_polynomial(std::vector<Rational> coefficients) {
  polynomial_ = std::move(coefficients);
  return *this;
}

Error& Error::at_depth(int depth) {
  depth_ = depth;
  return *this;
}

}  // namespace colorlie
