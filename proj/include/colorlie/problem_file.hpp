#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colorlie/color_algebra.hpp"

namespace colorlie {

struct Generator {
  std::string name;
  HomogeneousMap map;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A JSON problem document:
///
///   {
///     "group": {"free_rank": 0, "torsion_moduli": [3]},
///     "bicharacter": [["1"]],
///     "space": [{"degree": [1], "dim": 1}, ...],
///     "generators": [{"name": "A", "degree": [2],
///                     "blocks": [{"source": [1], "matrix": [["1"]]}, ...]}]
///   }
///
/// Rationals are strings "p/q" (plain JSON integers are also accepted).
/// "bicharacter" defaults to the trivial one and "name" to "x<i>".
struct ProblemFile {
  GroupSpec group;
  Bicharacter bicharacter;
  SpacePtr space;
  std::vector<Generator> generators;

  /// Bracket closure of the generators.
  ColorAlgebra algebra() const;

  friend bool operator==(const ProblemFile& a, const ProblemFile& b);
};

/// Syntax errors throw ParseError with line and column; malformed fields
/// throw ParseError naming the JSON pointer; invalid algebraic data throws
/// the underlying error (TorsionIncompatible, ShapeMismatch, ...).
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::filesystem::path& path);

std::string serialize_problem(const ProblemFile& problem);

}  // namespace colorlie
