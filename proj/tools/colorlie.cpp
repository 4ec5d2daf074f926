// colorlie: validate linear Lie color algebras and run the structure
// algorithms on them.
//
// Exit codes: 0 success, 1 internal error, 2 parse/validation failure,
// 3 hypothesis failure, 4 field-of-definition failure.

#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "colorlie/report_json.hpp"

namespace {

using namespace colorlie;
using nlohmann::json;

enum Exit { ok = 0, internal = 1, invalid = 2, hypothesis = 3, field = 4 };

int exit_code(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::ModulusTooSmall:
    case Errc::GroupMismatch:
    case Errc::NotSkewSymmetric:
    case Errc::BadDiagonal:
    case Errc::TorsionIncompatible:
    case Errc::ShapeMismatch:
    case Errc::UnknownDegree:
    case Errc::SpaceMismatch:
    case Errc::DegreeMismatch:
      return invalid;
    case Errc::NotClosed:
    case Errc::NotSolvable:
    case Errc::ZeroAlgebra:
    case Errc::EmptySpace:
    case Errc::HypothesisFailed:
    case Errc::TorsionGrading:
    case Errc::NoHomogeneousEigenvector:
    case Errc::NoCommonAnnihilatedVector:
      return hypothesis;
    case Errc::IrrationalEigenvalue:
      return field;
    default:
      return internal;
  }
}

struct Settings {
  bool json = false;
  bool skip_hypotheses = false;
  std::uint64_t seed = 0;
  std::string policy = "automatic";

  TheoremOptions options() const {
    TheoremOptions o;
    o.check_hypotheses = !skip_hypotheses;
    o.nil.seed = seed;
    if (policy == "deterministic") o.nil.policy = NilPolicy::deterministic;
    if (policy == "probabilistic") o.nil.policy = NilPolicy::probabilistic;
    return o;
  }
};

std::string text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string degree_text(const json& degree) {
  if (degree.empty()) return "0";
  if (degree.size() == 1) return text(degree[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < degree.size(); ++i) out += (i ? "," : "") + text(degree[i]);
  return out + ")";
}

std::string components_text(const json& components) {
  if (components.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < components.size(); ++i)
    out += (i ? ", " : "") + degree_text(components[i]["degree"]) + ": " + text(components[i]["dim"]);
  return out + "}";
}

void print_matrix(std::ostream& os, const json& m, const std::string& indent) {
  std::size_t width = 1;
  for (const auto& row : m)
    for (const auto& e : row) width = std::max(width, e.get<std::string>().size());
  for (const auto& row : m) {
    os << indent << "[";
    for (std::size_t j = 0; j < row.size(); ++j) {
      const auto s = row[j].get<std::string>();
      os << (j ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    os << "]\n";
  }
}

void print_series(std::ostream& os, const char* name, const json& steps) {
  os << name << ":\n";
  for (std::size_t i = 0; i < steps.size(); ++i)
    os << "  " << i << ": dim " << text(steps[i]["dim"]) << "  " << components_text(steps[i]["components"]) << "\n";
}

void print_basis_element(std::ostream& os, const json& x, const std::string& indent) {
  os << indent << "degree " << degree_text(x["degree"]) << "\n";
  for (const auto& b : x["blocks"]) {
    os << indent << "  from V_" << degree_text(b["source"]) << ":\n";
    print_matrix(os, b["matrix"], indent + "    ");
  }
}

void emit(const Settings& s, const json& report, const std::function<void(std::ostream&)>& human) {
  if (s.json)
    std::cout << report.dump(2) << "\n";
  else
    human(std::cout);
}

int run_validate(const Settings& s, const std::string& path) {
  const auto problem = load_problem(path);
  const auto l = problem.algebra();
  emit(s, validate_report(problem, l), [&](std::ostream& os) {
    const auto r = validate_report(problem, l);
    os << "valid\n"
       << "group:      " << text(r["group"]) << "\n"
       << "space:      " << components_text(r["space"]) << "\n"
       << "generators: " << text(r["generators"]) << "\n"
       << "dim L:      " << text(r["dim"]) << "\n"
       << "components: " << components_text(r["components"]) << "\n";
  });
  return ok;
}

int run_series(const Settings& s, const std::string& path) {
  const auto l = load_problem(path).algebra();
  const auto r = series_report(l);
  emit(s, r, [&](std::ostream& os) {
    print_series(os, "derived series", r["derived"]);
    print_series(os, "lower central series", r["lower_central"]);
    os << "solvable:  " << text(r["solvable"]) << "\n"
       << "nilpotent: " << text(r["nilpotent"]) << "\n";
  });
  return ok;
}

int run_triangularize(const Settings& s, const std::string& path) {
  const auto problem = load_problem(path);
  const auto flag = color_flag(problem.algebra(), s.options());
  const auto r = flag_report(problem, flag);
  emit(s, r, [&](std::ostream& os) {
    os << "flag basis:\n";
    for (std::size_t k = 0; k < r["basis"].size(); ++k) {
      const auto& v = r["basis"][k];
      os << "  v" << k + 1 << "  degree " << degree_text(v["degree"]) << "  (";
      for (std::size_t i = 0; i < v["coordinates"].size(); ++i) os << (i ? ", " : "") << text(v["coordinates"][i]);
      os << ")\n";
    }
    for (const auto& g : r["generators"]) {
      os << text(g["name"]) << " in the flag basis (weights";
      for (const auto& w : g["weights"]) os << " " << text(w);
      os << "):\n";
      print_matrix(os, g["matrix"], "  ");
    }
  });
  return ok;
}

int run_chain(const Settings& s, const std::string& path) {
  const auto l = load_problem(path).algebra();
  const auto r = chain_report(ideal_chain(l, s.options()));
  emit(s, r, [&](std::ostream& os) {
    os << "dims:";
    for (const auto& d : r["dims"]) os << " " << text(d);
    os << "\n";
    for (std::size_t i = 0; i < r["chain"].size(); ++i) {
      const auto& ideal = r["chain"][i];
      os << "L_" << i << ": dim " << text(ideal["dim"]) << "  " << components_text(ideal["components"]) << "\n";
      for (const auto& x : ideal["basis"]) print_basis_element(os, x, "  ");
    }
  });
  return ok;
}

int run_demo_z3(const Settings& s) {
  const auto r = z3_report(z3_counterexample());
  emit(s, r, [&](std::ostream& os) {
    os << "G = Z_3, r = 1, V_i = Q e_i, L = QA\n"
       << "A (basis e1, e2, e3):\n";
    print_matrix(os, r["matrix"], "  ");
    os << "deg A:                 " << degree_text(r["degree"]) << "\n"
       << "[L, L] = 0:            " << text(r["derived_zero"]) << "\n"
       << "solvable:              " << text(r["solvable"]) << "\n"
       << "[L, L] nil:            " << text(r["derived_nil"]) << "\n"
       << "A^3 = I:               " << text(r["cube_is_identity"]) << "\n"
       << "char poly:             " << text(r["char_poly"]) << "\n"
       << "rational roots:       ";
    for (const auto& root : r["rational_roots"]) os << " " << text(root["value"]);
    os << "\neigenvector for 1:     (";
    for (std::size_t i = 0; i < r["eigenvector"].size(); ++i) os << (i ? ", " : "") << text(r["eigenvector"][i]);
    os << ")  homogeneous: " << text(r["eigenvector_homogeneous"]) << "\n"
       << "color_flag:            " << text(r["flag"]["checked"]["error"]) << "\n"
       << "color_flag (skipped):  " << text(r["flag"]["unchecked"]["error"]) << "\n"
       << "homogeneous orderings: " << text(r["orderings_checked"]) << "\n";
    for (const auto& o : r["orderings"]) {
      os << "  (";
      for (std::size_t i = 0; i < o["basis"].size(); ++i) os << (i ? ", " : "") << text(o["basis"][i]);
      os << ")  upper triangular: " << text(o["upper_triangular"]) << "\n";
      print_matrix(os, o["matrix"], "    ");
    }
    os << "triangularizable:      " << text(r["triangularizable"]) << "\n";
  });
  return ok;
}

int report_error(const Settings& s, const Error& e) {
  const int code = exit_code(e.code());
  std::cerr << "colorlie: " << e.what() << "\n";
  if (s.json) {
    auto out = to_json(e);
    out["exit_code"] = code;
    std::cout << out.dump(2) << "\n";
  } else if (!e.polynomial().empty()) {
    std::cout << "characteristic polynomial: " << Poly<Rational>(e.polynomial()).to_string("t") << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure algorithms for linear Lie color algebras over Q"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  app.add_flag("--json", settings.json, "Machine-readable output");
  app.add_flag("--skip-hypotheses", settings.skip_hypotheses, "Run the algorithms without checking hypotheses");
  app.add_option("--seed", settings.seed, "Seed for probabilistic nil checks");
  app.add_option("--policy", settings.policy, "Nil check policy")
      ->check(CLI::IsMember({"automatic", "deterministic", "probabilistic"}));

  std::string path;
  auto* validate = app.add_subcommand("validate", "Parse a problem file and close it under the bracket");
  auto* series = app.add_subcommand("series", "Derived and lower central series");
  auto* triangularize = app.add_subcommand("triangularize", "Homogeneous basis in which L is upper triangular");
  auto* chain = app.add_subcommand("chain", "Chain of color ideals 0 = L_0 < ... < L_n = L");
  app.add_subcommand("demo-z3", "The Z_3 grading where triangularization fails");
  for (auto* sub : {validate, series, triangularize, chain})
    sub->add_option("file", path, "Problem file (JSON)")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : invalid;
  }

  try {
    const auto* sub = app.get_subcommands().front();
    const auto name = sub->get_name();
    if (name == "validate") return run_validate(settings, path);
    if (name == "series") return run_series(settings, path);
    if (name == "triangularize") return run_triangularize(settings, path);
    if (name == "chain") return run_chain(settings, path);
    return run_demo_z3(settings);
  } catch (const Error& e) {
    return report_error(settings, e);
  } catch (const std::exception& e) {
    std::cerr << "colorlie: internal error: " << e.what() << "\n";
    return internal;
  }
}
