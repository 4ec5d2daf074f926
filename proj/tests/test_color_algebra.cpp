#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace colorlie;
using namespace colorlie::testing;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InternalError;
}

HomogeneousMap h3(const ColorAlgebra& l, int i, int j) { return ungraded(l.space_ptr(), unit(3, i, j)); }

}  // namespace

TEST_SUITE("color_algebra") {
  TEST_CASE("bracket examples") {
    const auto v = ungraded_space(2);
    const auto r = Bicharacter::trivial(trivial_group());
    const auto c = color_bracket(r, ungraded(v, unit(2, 1, 2)), ungraded(v, unit(2, 1, 1)));
    CHECK(c == ungraded(v, Rational(-1) * unit(2, 1, 2)));

    const auto z3 = z3_fixture();
    CHECK(color_bracket(z3.r, z3.a, z3.a).is_zero());

    const auto z2 = make_group(0, {2});
    const GroupElement even(z2, {0}), odd(z2, {1});
    const auto w = make_space(z2, {{even, 1}, {odd, 1}});
    const auto sr = make_bicharacter(z2, -Matrix::Ones(1, 1));
    const auto q = make_map(w, odd, {{even, Matrix::Ones(1, 1)}, {odd, Matrix::Constant(1, 1, Rational(3))}});
    CHECK(color_bracket(sr, q, q) == Rational(2) * (q * q));
    CHECK(code_of([&] { color_bracket(Bicharacter::trivial(make_group(1)), q, q); }) == Errc::GroupMismatch);
  }

  TEST_CASE("color skew symmetry and Jacobi") {
    Rng rng(41);
    for (const auto& c : configs()) {
      CAPTURE(c.name);
      for (int trial = 0; trial < 25; ++trial) {
        const auto v = random_space(rng, c.group, 4);
        const auto a = random_map(rng, v), b = random_map(rng, v), d = random_map(rng, v);
        const auto& r = c.r;
        const auto ab = color_bracket(r, a, b);
        CHECK(ab == Rational(-1) * r(b.degree(), a.degree()) * color_bracket(r, b, a));
        // [[a, b], d] = [a, [b, d]] + r(|d|, |b|) [[a, d], b]
        const auto jacobi = color_bracket(r, ab, d) - color_bracket(r, a, color_bracket(r, b, d)) -
                            r(d.degree(), b.degree()) * color_bracket(r, color_bracket(r, a, d), b);
        CHECK(jacobi.is_zero());
      }
    }
  }

  TEST_CASE("closure and coordinates") {
    const auto h = heisenberg();
    CHECK(h.dim() == 3);
    CHECK(h.closed());
    CHECK(h.contains(h3(h, 1, 3)));
    CHECK_FALSE(h.contains(h3(h, 1, 1)));
    CHECK(code_of([&] { h.coordinates(h3(h, 2, 1)); }) == Errc::NotInAlgebra);

    const auto z3 = z3_fixture();
    CHECK(z3.l.dim() == 1);
    CHECK(z3.l.degrees() == std::vector<GroupElement>{z3.a.degree()});
    CHECK(bracket_closure(z3.space, z3.r, {}).dim() == 0);

    const auto v = ungraded_space(2);
    std::vector<HomogeneousMap> pair{ungraded(v, unit(2, 1, 2)), ungraded(v, unit(2, 2, 1))};
    CHECK_FALSE(ColorAlgebra::span(v, Bicharacter::trivial(trivial_group()), pair).closed());
    CHECK(bracket_closure(v, Bicharacter::trivial(trivial_group()), pair).dim() == 3);

    Rng rng(42);
    for (const auto& c : configs()) {
      CAPTURE(c.name);
      for (int trial = 0; trial < 6; ++trial) {
        const auto inst = solvable_instance(rng, c);
        const auto& l = inst.algebra;
        CHECK(l.closed());
        for (const auto& x : inst.generators) CHECK(l.contains(x));
        for (std::size_t i = 0; i < l.dim(); ++i) {
          const auto coords = l.coordinates(l.basis()[i]);
          CHECK(coords == Vector::Unit(static_cast<Eigen::Index>(l.dim()), static_cast<Eigen::Index>(i)));
          for (const auto& y : l.basis()) CHECK(l.contains(l.bracket(l.basis()[i], y)));
        }
        for (const auto& g : l.degrees()) {
          Vector coords(static_cast<Eigen::Index>(l.component_dim(g)));
          for (auto& q : coords) q = small_rational(rng);
          CHECK(*l.component_coordinates(l.element(g, coords)) == coords);
        }
      }
    }
  }

  TEST_CASE("series and center") {
    const auto h = heisenberg();
    const auto whole = Subspace::whole(h);
    const auto d = bracket_subspaces(whole, whole);
    CHECK(d.dim() == 1);
    CHECK(d.contains(h3(h, 1, 3)));
    CHECK(bracket_subspaces(whole, Subspace(h)).dim() == 0);
    std::vector<std::size_t> lower;
    for (const auto& s : lower_central_series(h)) lower.push_back(s.dim());
    CHECK(lower == std::vector<std::size_t>{3, 1, 0});
    CHECK(is_nilpotent_algebra(h));
    const auto z = center(h);
    CHECK(z.dim() == 1);
    CHECK(z.contains(h3(h, 1, 3)));
    CHECK(is_ideal(h, z));
    CHECK(is_ideal(h, d));
    CHECK_FALSE(is_ideal(h, Subspace::span(h, std::vector{h3(h, 1, 2)})));

    const auto b = borel(2);
    CHECK(is_solvable(b));
    CHECK_FALSE(is_nilpotent_algebra(b));

    const auto z3 = z3_fixture();
    std::vector<std::size_t> derived;
    for (const auto& s : derived_series(z3.l)) derived.push_back(s.dim());
    CHECK(derived == std::vector<std::size_t>{1, 0});
    CHECK(center(z3.l).dim() == 1);

    const auto zero = bracket_closure(z3.space, z3.r, {});
    CHECK(derived_series(zero).size() == 1);
    CHECK(is_solvable(zero));
    CHECK(is_nilpotent_algebra(zero));
    CHECK(center(zero).dim() == 0);

    CHECK(code_of([&] { bracket_subspaces(whole, Subspace::whole(b)); }) == Errc::ParentMismatch);
    CHECK(code_of([&] { (void)whole.contains(Subspace::whole(b)); }) == Errc::ParentMismatch);
  }

  TEST_CASE("adjoint representation") {
    const auto h = heisenberg();
    const auto ad12 = ad_map(h, h3(h, 1, 2));
    const auto y = h.coordinates(h3(h, 2, 3));
    const Vector image = ad12.flatten() * y;
    CHECK(image == h.coordinates(h3(h, 1, 3)));
    CHECK(is_zero((ad12.flatten() * h.coordinates(h3(h, 1, 3))).eval()));
    CHECK(ad_representation(h).dim() == 2);

    const auto z3 = z3_fixture();
    CHECK(ad_map(z3.l, z3.a).is_zero());
    CHECK(ad_representation(z3.l).dim() == 0);

    Rng rng(43);
    for (const auto& c : configs()) {
      CAPTURE(c.name);
      for (int trial = 0; trial < 5; ++trial) {
        const auto l = solvable_instance(rng, c).algebra;
        const auto ad = ad_representation(l);
        CHECK(ad.dim() == l.dim() - center(l).dim());
        for (const auto& x : l.basis())
          for (const auto& y : l.basis())
            CHECK(ad_map(l, l.bracket(x, y)) == color_bracket(l.bicharacter(), ad_map(l, x), ad_map(l, y)));
      }
    }
  }

  TEST_CASE("ad power expansion") {
    const auto z = make_group(0);
    const auto zero = GroupElement::identity(z);
    const auto r = Bicharacter::trivial(z);
    const auto two = ad_power_expand(r, zero, zero, 2);
    REQUIRE(two.terms.size() == 3);
    CHECK(two.terms[0] == AdExpansion::Term{2, 0, Rational(1)});
    CHECK(two.terms[1] == AdExpansion::Term{1, 1, Rational(-2)});
    CHECK(two.terms[2] == AdExpansion::Term{0, 2, Rational(1)});

    Rng rng(44);
    for (const auto& c : configs()) {
      CAPTURE(c.name);
      for (int trial = 0; trial < 10; ++trial) {
        const auto v = random_space(rng, c.group, 4);
        const auto x = random_map(rng, v), y = random_map(rng, v);
        const auto one = ad_power_expand(c.r, x.degree(), y.degree(), 1);
        REQUIRE(one.terms.size() == 2);
        CHECK(one.terms[1].k == -c.r(y.degree(), x.degree()));
        auto direct = y;
        for (int m = 1; m <= 4; ++m) {
          direct = color_bracket(c.r, x, direct);
          CHECK(evaluate(ad_power_expand(c.r, x.degree(), y.degree(), m), x, y) == direct);
        }
      }
    }
  }

  TEST_CASE("nilpotent elements are ad-nilpotent") {
    const auto b = borel(2);
    const auto e12 = ungraded(b.space_ptr(), unit(2, 1, 2));
    auto check = nilpotent_implies_ad_nilpotent_check(b, e12);
    CHECK(check.hypothesis_met);
    CHECK(check.ad_nilpotent);
    check = nilpotent_implies_ad_nilpotent_check(b, identity_map(b.space_ptr()));
    CHECK_FALSE(check.hypothesis_met);

    Rng rng(45);
    for (const auto& c : configs()) {
      CAPTURE(c.name);
      for (int trial = 0; trial < 5; ++trial) {
        const auto inst = nil_instance(rng, c);
        for (const auto& x : inst.algebra.basis()) {
          const auto res = nilpotent_implies_ad_nilpotent_check(inst.algebra, x);
          CHECK(res.hypothesis_met);
          CHECK(res.ad_nilpotent);
        }
      }
    }
  }

  TEST_CASE("subspace algebra") {
    const auto h = heisenberg();
    const auto s = Subspace::span(h, std::vector{h3(h, 1, 2)});
    const auto t = Subspace::span(h, std::vector{h3(h, 1, 3)});
    CHECK((s + t).dim() == 2);
    CHECK((s + t).contains(s));
    CHECK_FALSE(s.contains(t));
    CHECK((s + s) == s);
    CHECK((s + t).as_algebra().closed());
    CHECK(code_of([&] { Subspace::span(h, std::vector{h3(h, 2, 1)}); }) == Errc::NotInAlgebra);
    const auto v = ungraded_space(2);
    std::vector<HomogeneousMap> pair{ungraded(v, unit(2, 1, 2)), ungraded(v, unit(2, 2, 1))};
    const auto open = ColorAlgebra::span(v, Bicharacter::trivial(trivial_group()), pair);
    CHECK(code_of([&] { ad_map(open, pair[0]); }) == Errc::NotClosed);
  }
}
