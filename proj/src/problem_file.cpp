#include "colorlie/problem_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace colorlie {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const json::json_pointer& at, const std::string& message) {
  const auto where = at.empty() ? std::string("/") : at.to_string();
  throw Error(Errc::ParseError, "at " + where + ": " + message);
}

const json& field(const json& obj, const json::json_pointer& at, const char* key) {
  if (!obj.is_object()) bad(at, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) bad(at, std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t read_int(const json& v, const json::json_pointer& at) {
  if (!v.is_number_integer()) bad(at, "expected an integer");
  return v.get<std::int64_t>();
}

Rational read_rational(const json& v, const json::json_pointer& at) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (!v.is_string()) bad(at, "expected a rational string \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    bad(at, e.what());
  }
}

Matrix read_matrix(const json& v, const json::json_pointer& at) {
  if (!v.is_array()) bad(at, "expected an array of rows");
  const auto rows = static_cast<Eigen::Index>(v.size());
  Eigen::Index cols = 0;
  if (rows > 0) {
    if (!v[0].is_array()) bad(at / 0, "expected a row array");
    cols = static_cast<Eigen::Index>(v[0].size());
  }
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto row_at = at / static_cast<std::size_t>(i);
    const auto& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array()) bad(row_at, "expected a row array");
    if (static_cast<Eigen::Index>(row.size()) != cols) bad(row_at, "ragged matrix");
    for (Eigen::Index j = 0; j < cols; ++j)
      m(i, j) = read_rational(row[static_cast<std::size_t>(j)], row_at / static_cast<std::size_t>(j));
  }
  return m;
}

GroupElement read_degree(const json& v, const json::json_pointer& at, const GroupSpec& group) {
  if (!v.is_array()) bad(at, "expected a degree array");
  if (static_cast<int>(v.size()) != group.num_generators())
    bad(at, "degree needs " + std::to_string(group.num_generators()) + " coordinates");
  std::vector<std::int64_t> coords;
  for (std::size_t i = 0; i < v.size(); ++i) coords.push_back(read_int(v[i], at / i));
  return GroupElement(group, std::move(coords));
}

json write_degree(const GroupElement& g) {
  return json(std::vector<std::int64_t>(g.coords().begin(), g.coords().end()));
}

json write_matrix(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

ColorAlgebra ProblemFile::algebra() const {
  std::vector<HomogeneousMap> maps;
  for (const auto& g : generators) maps.push_back(g.map);
  return bracket_closure(space, bicharacter, maps);
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  return a.group == b.group && a.bicharacter == b.bicharacter && *a.space == *b.space &&
         a.generators == b.generators;
}

ProblemFile parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    if (const auto column = what.find("column"); column != std::string::npos)
      if (const auto colon = what.find(": ", column); colon != std::string::npos) what = what.substr(colon + 2);
    throw Error(Errc::ParseError, locate(text, at) + ": " + what);
  }

  const json::json_pointer root;
  ProblemFile out;

  const auto group_at = root / "group";
  const auto& group = field(doc, root, "group");
  const auto free_rank = read_int(field(group, group_at, "free_rank"), group_at / "free_rank");
  if (free_rank < 0) bad(group_at / "free_rank", "free rank must be nonnegative");
  std::vector<std::int64_t> moduli;
  if (const auto it = group.find("torsion_moduli"); it != group.end()) {
    if (!it->is_array()) bad(group_at / "torsion_moduli", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i)
      moduli.push_back(read_int((*it)[i], group_at / "torsion_moduli" / i));
  }
  out.group = make_group(static_cast<int>(free_rank), std::move(moduli));

  if (const auto it = doc.find("bicharacter"); it != doc.end())
    out.bicharacter = make_bicharacter(out.group, read_matrix(*it, root / "bicharacter"));
  else
    out.bicharacter = Bicharacter::trivial(out.group);

  const auto space_at = root / "space";
  const auto& space = field(doc, root, "space");
  if (!space.is_array()) bad(space_at, "expected an array");
  std::map<GroupElement, int> dims;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto at = space_at / i;
    const auto g = read_degree(field(space[i], at, "degree"), at / "degree", out.group);
    const auto dim = read_int(field(space[i], at, "dim"), at / "dim");
    if (dim < 0) bad(at / "dim", "dimension must be nonnegative");
    if (!dims.emplace(g, static_cast<int>(dim)).second) bad(at / "degree", "repeated degree " + g.to_string());
  }
  out.space = make_space(out.group, dims);

  const auto gens_at = root / "generators";
  const auto& gens = field(doc, root, "generators");
  if (!gens.is_array()) bad(gens_at, "expected an array");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto at = gens_at / i;
    const auto& gen = gens[i];
    const auto degree = read_degree(field(gen, at, "degree"), at / "degree", out.group);
    std::string name = "x" + std::to_string(i + 1);
    if (const auto it = gen.find("name"); it != gen.end()) {
      if (!it->is_string()) bad(at / "name", "expected a string");
      name = it->get<std::string>();
    }
    const auto& blocks = field(gen, at, "blocks");
    if (!blocks.is_array()) bad(at / "blocks", "expected an array");
    std::map<GroupElement, Matrix> by_source;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      const auto block_at = at / "blocks" / j;
      const auto source = read_degree(field(blocks[j], block_at, "source"), block_at / "source", out.group);
      auto matrix = read_matrix(field(blocks[j], block_at, "matrix"), block_at / "matrix");
      if (!by_source.emplace(source, std::move(matrix)).second)
        bad(block_at / "source", "repeated source " + source.to_string());
    }
    out.generators.push_back({std::move(name), make_map(out.space, degree, by_source)});
  }
  return out;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_problem(text.str());
}

std::string serialize_problem(const ProblemFile& problem) {
  json doc;
  doc["group"] = {{"free_rank", problem.group.free_rank()}, {"torsion_moduli", problem.group.torsion_moduli()}};
  doc["bicharacter"] = write_matrix(problem.bicharacter.values());
  json space = json::array();
  for (const auto& g : problem.space->support())
    space.push_back({{"degree", write_degree(g)}, {"dim", problem.space->dim(g)}});
  doc["space"] = std::move(space);
  json gens = json::array();
  for (const auto& gen : problem.generators) {
    json blocks = json::array();
    for (const auto& [source, block] : gen.map.blocks())
      if (!colorlie::is_zero(block))
        blocks.push_back({{"source", write_degree(source)}, {"matrix", write_matrix(block)}});
    gens.push_back({{"name", gen.name}, {"degree", write_degree(gen.map.degree())}, {"blocks", std::move(blocks)}});
  }
  doc["generators"] = std::move(gens);
  return doc.dump(2) + "\n";
}

}  // namespace colorlie
