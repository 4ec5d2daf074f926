#pragma once

#include <json.hpp>

#include "colorlie/problem_file.hpp"
#include "colorlie/structure.hpp"

namespace colorlie {

/// Structured reports shared by the CLI's JSON and text output. Rationals are
/// always strings in lowest terms.
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const GroupElement& g);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const GradedVector& v);
nlohmann::json to_json(const HomogeneousMap& x);
nlohmann::json to_json(const Subspace& s);
nlohmann::json to_json(const Error& e);

nlohmann::json validate_report(const ProblemFile& problem, const ColorAlgebra& l);
nlohmann::json series_report(const ColorAlgebra& l);
nlohmann::json flag_report(const ProblemFile& problem, const ColorFlag& flag);
nlohmann::json chain_report(const IdealChain& chain);
nlohmann::json z3_report(const Z3Report& report);

}  // namespace colorlie
