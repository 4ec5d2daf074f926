// Acceptance suite: one PASS/FAIL line per criterion, each timed against its
// runtime budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace colorlie;
using namespace colorlie::testing;

namespace {

/// Collects the first few failure messages of one criterion.
struct Checker {
  int checks = 0;
  int failures = 0;
  std::vector<std::string> notes;

  void operator()(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;
  std::function<void(Checker&)> body;
};

bool run(const Criterion& c) {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.body(check);
  } catch (const std::exception& e) {
    check(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = seconds < c.budget_seconds;
  const bool pass = check.failures == 0 && check.checks > 0 && in_time;
  std::printf("%s %s  %s  [%d checks, %.2f s / %.0f s]\n", c.id.c_str(), pass ? "PASS" : "FAIL", c.title.c_str(),
              check.checks, seconds, c.budget_seconds);
  for (const auto& note : check.notes) std::printf("    %s\n", note.c_str());
  if (!in_time) std::printf("    over the runtime budget\n");
  std::fflush(stdout);
  return pass;
}

std::vector<Instance> solvable_corpus;

void ac1(Checker& check) {
  const auto r = z3_counterexample();
  check(r.degree == GroupElement(make_group(0, {3}), {2}), "deg A != 2");
  check(r.derived_zero, "[L, L] != 0");
  check(r.solvable, "L not solvable");
  check(r.flag_error == Errc::TorsionGrading, "checked color_flag did not fail with TorsionGrading");
  check(r.unchecked_flag_error == Errc::NoHomogeneousEigenvector,
        "unchecked color_flag did not fail with NoHomogeneousEigenvector");
  check(r.orderings.size() == 6, "expected 6 orderings");
  for (const auto& o : r.orderings) check(!o.upper_triangular, "an ordering is upper triangular");
  check(!r.triangularizable, "triangularizable");

  // independent reconstruction from the paper's matrix
  const auto f = z3_fixture();
  check(f.l.dim() == 1, "L != QA");
  check(f.a.degree() == GroupElement(f.group, {2}), "fixture degree");
  check(color_bracket(f.r, f.a, f.a).is_zero(), "[A, A] != 0");
  try {
    color_flag(f.l);
    check(false, "color_flag succeeded on the fixture");
  } catch (const Error& e) {
    check(e.code() == Errc::TorsionGrading, "fixture color_flag error");
  }
}

void ac2(Checker& check) {
  Rng rng(1002);
  const auto all = configs();
  std::vector<std::string> required{"Z", "Z^2 twisted", "Z_2 super", "Z_3 trivial"};
  for (const auto& name : required)
    check(std::any_of(all.begin(), all.end(), [&](const Config& c) { return c.name == name; }), "missing " + name);
  check(all.size() >= 5, "fewer than 5 configurations");
  for (int t = 0; t < 500; ++t) {
    const auto& c = all[static_cast<std::size_t>(t) % all.size()];
    const auto v = random_space(rng, c.group, 5);
    const auto a = random_map(rng, v), b = random_map(rng, v), d = random_map(rng, v);
    const auto& r = c.r;
    const auto ab = color_bracket(r, a, b);
    check(ab == Rational(-1) * r(b.degree(), a.degree()) * color_bracket(r, b, a), c.name + ": skew symmetry");
    const auto lhs = color_bracket(r, ab, d);
    const auto rhs = color_bracket(r, a, color_bracket(r, b, d)) +
                     r(d.degree(), b.degree()) * color_bracket(r, color_bracket(r, a, d), b);
    check(lhs == rhs, c.name + ": Jacobi");
  }
}

void ac3(Checker& check) {
  Rng rng(1003);
  const auto all = configs();
  int pairs = 0;
  for (int t = 0; pairs < 200; ++t) {
    const auto& c = all[static_cast<std::size_t>(t) % all.size()];
    const auto l = solvable_instance(rng, c).algebra;
    if (l.dim() == 0) continue;
    for (int k = 0; k < 5 && pairs < 200; ++k, ++pairs) {
      // random elements of random components
      const auto degrees = l.degrees();
      auto pick = [&] {
        const auto& g = degrees[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(degrees.size()) - 1))];
        Vector coords(static_cast<Eigen::Index>(l.component_dim(g)));
        for (auto& q : coords) q = small_rational(rng);
        return l.element(g, coords);
      };
      const auto x = pick(), y = pick();
      check(ad_map(l, l.bracket(x, y)) == color_bracket(l.bicharacter(), ad_map(l, x), ad_map(l, y)),
            c.name + ": ad[x,y] != [ad x, ad y]");
    }
  }
  check(pairs == 200, "pair count");
}

void ac4(Checker& check) {
  Rng rng(1004);
  const auto z = make_group(1);
  const auto r = Bicharacter::trivial(z);
  for (int t = 0; t < 200; ++t) {
    SpacePtr v;
    do {
      v = random_space(rng, z, 12, 5);
    } while (v->support().size() < 2);
    GroupElement u;
    do {
      u = random_block_degree(rng, *v);
    } while (u.is_identity());
    const auto f = random_map(rng, v, u, 0.7);
    check(u.has_infinite_order(), "degree of finite order");
    check(is_nilpotent_matrix(f.flatten()), "homogeneous map of nonzero degree not nilpotent");
    const auto cert = nilpotent_by_grading(f);
    check(power(f, cert.exponent).is_zero(), "f^N != 0");
    check(cert.exponent <= v->total_dim(), "exponent above dim V");

    // (ad f)^(2n) on gl(V), applied to a random homogeneous y
    const int n = v->total_dim();
    auto y = random_map(rng, v);
    for (int k = 0; k < 2 * n && !y.is_zero(); ++k) y = color_bracket(r, f, y);
    check(y.is_zero(), "(ad f)^(2n) y != 0");
  }
  // nilpotent elements of degree 0 too, inside closed algebras
  const auto all = configs();
  for (int t = 0; t < 40; ++t) {
    const auto& c = all[static_cast<std::size_t>(t) % all.size()];
    const auto inst = nil_instance(rng, c);
    for (const auto& x : inst.algebra.basis()) {
      const auto res = nilpotent_implies_ad_nilpotent_check(inst.algebra, x);
      check(res.hypothesis_met && res.ad_nilpotent, c.name + ": nilpotent X with ad X not nilpotent");
    }
  }
}

void ac5(Checker& check) {
  Rng rng(1005);
  const auto all = configs();
  for (int t = 0; t < 100; ++t) {
    const auto& c = all[static_cast<std::size_t>(t) % all.size()];
    const auto inst = nil_instance(rng, c);
    const auto& l = inst.algebra;
    const auto v = common_annihilated_vector(l);
    check(v.is_homogeneous() && !v.is_zero(), "annihilated vector not homogeneous");
    for (const auto& x : l.basis()) check(apply(x, v).is_zero(), c.name + ": x(v) != 0");
    const auto e = engel_check(l);
    check(e.all_ad_nilpotent, c.name + ": not ad-nilpotent");
    check(e.nilpotent, c.name + ": not nilpotent");
    if (l.dim() > 0) {
      check(e.central_witness && !e.central_witness->is_zero(), c.name + ": no central witness");
      if (e.central_witness)
        for (const auto& x : l.basis()) check(l.bracket(*e.central_witness, x).is_zero(), "witness not central");
    }
  }
}

void ac6(Checker& check) {
  for (const auto& inst : solvable_corpus) {
    const auto& l = inst.algebra;
    const auto flag = color_flag(l);
    check(static_cast<int>(flag.basis.size()) == inst.space->total_dim(), "flag size");
    for (const auto& v : flag.basis) check(v.is_homogeneous(), "flag vector not homogeneous");
    for (const auto& g : inst.generators) check(is_upper_triangular(flag.matrix_of(g)), "generator not upper triangular");
    for (const auto& x : l.basis()) {
      const Matrix m = flag.matrix_of(x);
      check(is_upper_triangular(m), "basis element not upper triangular");
      for (std::size_t k = 0; k < flag.weights.size(); ++k)
        check(m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) == flag.weights[k](x), "diagonal != weight");
    }
    const auto e = common_homogeneous_eigenvector(l);
    for (const auto& x : l.basis()) {
      check(apply(x, e.vector) == e.weight(x) * e.vector, "not a common eigenvector");
      for (const auto& y : l.basis()) {
        const auto yx = l.bracket(y, x);
        check(e.weight(yx) == 0, "lambda([y, x]) != 0");
        for (const auto& w : flag.weights) check(w(yx) == 0, "flag weight nonzero on [y, x]");
      }
    }
  }
}

void ac7(Checker& check) {
  int used = 0;
  for (const auto& inst : solvable_corpus) {
    const auto& l = inst.algebra;
    if (l.dim() > 6) continue;
    ++used;
    const auto chain = ideal_chain(l).chain;
    check(chain.size() == l.dim() + 1, "chain length");
    for (std::size_t i = 0; i < chain.size(); ++i) {
      check(chain[i].dim() == i, "dim L_i != i");
      check(is_ideal(l, chain[i]), "L_i not an ideal");
      if (i > 0) check(chain[i].contains(chain[i - 1]), "chain not increasing");
    }
  }
  check(used >= 50, "fewer than 50 instances with dim L <= 6");
}

void ac8(Checker& check) {
  for (int n : {2, 3}) {
    const auto b = borel(n);
    check(b.dim() == static_cast<std::size_t>(n * (n + 1) / 2), "borel dimension");
    const auto flag = color_flag(b);
    // hand oracle: the standard basis is the flag, weights are the diagonal entries
    for (int k = 0; k < n; ++k)
      check(flag.basis[static_cast<std::size_t>(k)].flatten() == Vector::Unit(n, k), "flag vector != e_k");
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        const auto x = ungraded(b.space_ptr(), unit(n, i, j));
        check(flag.matrix_of(x) == unit(n, i, j), "matrix changed in the standard flag");
        for (int k = 1; k <= n; ++k)
          check(flag.weights[static_cast<std::size_t>(k - 1)](x) == Rational(i == j && j == k ? 1 : 0), "weight");
      }
    const auto e = common_homogeneous_eigenvector(b);
    check(e.vector.flatten() == Vector::Unit(n, 0), "eigenvector != e1");
  }
  // a conjugated borel: still triangularizable, the flag is P e_1, P e_2, ...
  Rng rng(1008);
  const auto v = ungraded_space(3);
  const Matrix p = random_invertible(rng, 3), p_inv = inverse<Rational>(p);
  std::vector<HomogeneousMap> gens;
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) gens.push_back(ungraded(v, (p * unit(3, i, j) * p_inv).eval()));
  const auto l = bracket_closure(v, Bicharacter::trivial(trivial_group()), gens);
  const auto flag = color_flag(l);
  for (const auto& g : gens) check(is_upper_triangular(flag.matrix_of(g)), "conjugated borel not triangularized");
  // first flag line is the unique common eigenline P e1
  const Vector v1 = flag.basis[0].flatten();
  check(rank((Matrix(3, 2) << v1, p.col(0)).finished()) == 1, "first flag vector not on P e1");
}

void ac9(Checker& check) {
  Rng rng(1009);
  const Eigen::Index n = 4;
  NilCheckOptions det{NilPolicy::deterministic};
  std::vector<std::vector<Matrix>> spans;
  // every span of one or two matrix units
  std::vector<Matrix> units;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) units.push_back(unit(n, i, j));
  for (std::size_t a = 0; a < units.size(); ++a) {
    spans.push_back({units[a]});
    for (std::size_t b = a + 1; b < units.size(); ++b) spans.push_back({units[a], units[b]});
  }
  // random spans, conjugated nil ones and generic ones
  for (int t = 0; t < 300; ++t) {
    const Matrix p = random_invertible(rng, n), p_inv = inverse<Rational>(p);
    std::vector<Matrix> span;
    const auto s = uniform(rng, 1, 2);
    const int mode = static_cast<int>(uniform(rng, 0, 2));
    for (int i = 0; i < s; ++i) {
      Matrix m = random_matrix(rng, n, n, 0.4);
      if (mode == 0) m = m.triangularView<Eigen::StrictlyUpper>().toDenseMatrix();
      if (mode == 1) m = i == 0 ? m.triangularView<Eigen::StrictlyUpper>().toDenseMatrix()
                                : m.triangularView<Eigen::StrictlyLower>().toDenseMatrix();
      span.push_back(p * m * p_inv);
    }
    spans.push_back(std::move(span));
  }
  int nil = 0;
  for (const auto& span : spans) {
    const bool oracle = nil_by_grid(span, n);
    nil += oracle;
    check(nil_subspace_check(span, det) == oracle, "nil_subspace_check disagrees with the grid oracle");
  }
  check(nil > 50 && nil < static_cast<int>(spans.size()) - 50, "corpus is not balanced");

  for (int t = 0; t < 500; ++t) {
    const auto k = uniform(rng, 1, 6);
    Matrix m = random_matrix(rng, k, k, 0.5);
    if (coin(rng, 0.5)) {
      const Matrix p = random_invertible(rng, k);
      m = p * Matrix(m.triangularView<Eigen::StrictlyUpper>()) * inverse<Rational>(p);
    }
    check(is_nilpotent_matrix(m) == nilpotent_by_powers(m), "is_nilpotent_matrix disagrees with powers");
  }
}

}  // namespace

int main() {
  // shared solvable corpus for the Lie and ideal chain criteria
  {
    Rng rng(1006);
    const auto torsion_free = torsion_free_configs();
    for (int t = 0; t < 100; ++t)
      solvable_corpus.push_back(solvable_instance(rng, torsion_free[static_cast<std::size_t>(t) % torsion_free.size()]));
  }

  const std::vector<Criterion> criteria{
      {"AC1", "Z_3 counterexample reproduced exactly", 1, ac1},
      {"AC2", "color skew symmetry and Jacobi on 500 triples", 10, ac2},
      {"AC3", "ad is a homomorphism on 200 pairs", 10, ac3},
      {"AC4", "nonzero infinite-order degree forces nilpotency; ad-nilpotency", 10, ac4},
      {"AC5", "annihilated vectors and Engel on 100 nil instances", 60, ac5},
      {"AC6", "color flags on 100 solvable instances", 120, ac6},
      {"AC7", "ideal chains on the solvable corpus with dim L <= 6", 60, ac7},
      {"AC8", "ungraded borel subalgebras against the classical flag", 1, ac8},
      {"AC9", "nil checks against grid and power oracles", 30, ac9},
  };
  int failed = 0;
  for (const auto& c : criteria) failed += !run(c);
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
