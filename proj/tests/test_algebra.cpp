#include <vector>

#include "doctest.h"
#include "flagbound/algebra.hpp"
#include "oracles.hpp"

using namespace flagbound;

namespace {

FamilySpec no_triangle() { return FamilySpec({*named_graph("K3")}); }

Flag rooted_edge() { return Flag(*named_graph("K2"), {0}); }
Flag rooted_nonedge() { return Flag(Graph(2), {0}); }
Flag cherry() { return Flag(*named_graph("P3"), {1}); }
Flag point_flag() { return Flag(*named_graph("K1"), {0}); }

FlagForm form_of(const Flag& f) { return flag_canonical_form(f); }

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("lift and expand") {
  FamilySpec h = no_triangle();
  AlgebraElement e = lift(Flag::prefix_labeled(*named_graph("K2"), 0), h);
  CHECK(e.size() == 2);
  CHECK(e.sigma().size() == 0);
  CHECK(e.coeffs().size() == 1);

  AlgebraElement e3 = expand_to(e, 3);
  CHECK(e3.size() == 3);
  Graph one_edge = Graph::from_edges(3, {{0, 1}});
  CHECK(e3.coeff(form_of(Flag::prefix_labeled(one_edge, 0))) == make_rational(1, 3));
  CHECK(e3.coeff(form_of(Flag::prefix_labeled(*named_graph("P3"), 0))) == make_rational(2, 3));
  CHECK(e3.coeff(form_of(Flag::prefix_labeled(Graph(3), 0))) == 0);

  // Expanding twice equals expanding once.
  CHECK(elements_equal(expand_to(e3, 4), expand_to(e, 4)));
  CHECK(elements_equal(e, e3));

  // Lift-then-expand agrees with the density-level expansion map.
  std::map<FlagForm, Rational> direct =
      expand_density(Flag::prefix_labeled(*named_graph("K2"), 0), 3, h);
  for (const auto& [form, c] : direct) CHECK(e3.coeff(form) == c);
  CHECK(direct.size() == 2);

  CHECK_THROWS_AS(expand_to(e3, 2), InputError);
  CHECK_THROWS_AS(lift(Flag::prefix_labeled(*named_graph("K3"), 0), h), InputError);
}

TEST_CASE("add and scale") {
  FamilySpec h = no_triangle();
  AlgebraElement e = lift(rooted_edge(), h);
  AlgebraElement n = lift(rooted_nonedge(), h);

  CHECK(elements_equal(add(e, e), scale(Rational(2), e)));
  CHECK(elements_equal(add(e, n), add(n, e)));

  // e + n is the whole size-2 basis, which expands to all-ones.
  AlgebraElement one = expand_to(add(e, n), 3);
  CHECK(one.coeffs().size() == 5);
  for (const auto& [form, c] : one.coeffs()) CHECK(c == 1);

  // Scaling by zero gives the empty coefficient map.
  CHECK(scale(Rational(0), e).coeffs().empty());

  // Triple of the unlabeled edge at size 3: coefficients 3 * {0, 1/3, 2/3}.
  AlgebraElement triple =
      expand_to(scale(Rational(3), lift(Flag::prefix_labeled(*named_graph("K2"), 0), h)), 3);
  CHECK(triple.coeff(form_of(Flag::prefix_labeled(Graph(3), 0))) == 0);
  CHECK(triple.coeff(form_of(Flag::prefix_labeled(Graph::from_edges(3, {{0, 1}}), 0))) == 1);
  CHECK(triple.coeff(form_of(Flag::prefix_labeled(*named_graph("P3"), 0))) == 2);

  AlgebraElement unlabeled = lift(Flag::prefix_labeled(*named_graph("K2"), 0), h);
  CHECK_THROWS_AS(add(e, unlabeled), InputError);
  FamilySpec other({*named_graph("K4")});
  CHECK_THROWS_AS(add(e, lift(rooted_edge(), other)), InputError);
}

TEST_CASE("product of rooted edges") {
  FamilySpec h = no_triangle();
  AlgebraElement ee = product(lift(rooted_edge(), h), lift(rooted_edge(), h));
  CHECK(ee.size() == 3);
  REQUIRE(ee.coeffs().size() == 1);
  CHECK(ee.coeff(form_of(cherry())) == 1);

  // Without the triangle forbidden, the rooted triangle joins in.
  FamilySpec k4({*named_graph("K4")});
  AlgebraElement ee2 = product(lift(rooted_edge(), k4), lift(rooted_edge(), k4));
  CHECK(ee2.coeffs().size() == 2);
  CHECK(ee2.coeff(form_of(cherry())) == 1);
  CHECK(ee2.coeff(form_of(Flag(*named_graph("K3"), {0}))) == 1);
}

TEST_CASE("products matching the outer-product table") {
  FamilySpec h = no_triangle();
  AlgebraElement n = lift(rooted_nonedge(), h);
  AlgebraElement e = lift(rooted_edge(), h);

  AlgebraElement nn = product(n, n);
  CHECK(nn.coeff(form_of(Flag(Graph(3), {0}))) == 1);
  CHECK(nn.coeff(form_of(Flag(Graph::from_edges(3, {{1, 2}}), {0}))) == 1);
  CHECK(nn.coeffs().size() == 2);

  AlgebraElement ne = product(n, e);
  Flag pendant(Graph::from_edges(3, {{0, 2}}), {0});
  Flag end_path(*named_graph("P3"), {0});
  CHECK(ne.coeff(form_of(pendant)) == make_rational(1, 2));
  CHECK(ne.coeff(form_of(end_path)) == make_rational(1, 2));
  CHECK(ne.coeffs().size() == 2);
}

TEST_CASE("product laws") {
  FamilySpec h = no_triangle();
  TypeSigma point{*named_graph("K1")};
  std::vector<Flag> basis = enumerate_flags(point, 2, h);

  for (const Flag& a : basis)
    for (const Flag& b : basis) {
      AlgebraElement ab = product(lift(a, h), lift(b, h));
      AlgebraElement ba = product(lift(b, h), lift(a, h));
      CHECK(elements_equal(ab, ba));
    }

  // The lifted type is a multiplicative identity.
  AlgebraElement one = lift(point_flag(), h);
  for (const Flag& a : basis)
    CHECK(elements_equal(product(one, lift(a, h)), lift(a, h)));

  // Multiplication commutes with basis expansion.
  AlgebraElement e = lift(rooted_edge(), h);
  AlgebraElement n = lift(rooted_nonedge(), h);
  CHECK(elements_equal(product(expand_to(e, 3), n), product(e, n)));

  CHECK_THROWS_AS(product(e, lift(point_flag(), FamilySpec({*named_graph("K4")}))),
                  InputError);
}

TEST_CASE("q coefficients") {
  CHECK(q_sigma(cherry()) == make_rational(1, 3));
  CHECK(q_sigma(point_flag()) == 1);
  CHECK(q_sigma(Flag(Graph::from_edges(3, {{0, 2}}), {0})) == make_rational(2, 3));
  CHECK(q_sigma(Flag(*named_graph("P3"), {0})) == make_rational(2, 3));
  CHECK(q_sigma(Flag(Graph(3), {0})) == 1);
  CHECK(q_sigma(Flag(Graph::from_edges(3, {{1, 2}}), {0})) == make_rational(1, 3));
  // Unlabeled flags always give 1.
  CHECK(q_sigma(Flag::prefix_labeled(*named_graph("C5"), 0)) == 1);
  // Two labels on an edge of the 5-cycle: 10 ordered pairs, 10 adjacent
  // ordered pairs all give isomorphic flags.
  CHECK(q_sigma(Flag(*named_graph("C5"), {0, 1})) == make_rational(1, 2));
}

TEST_CASE("downward averaging") {
  FamilySpec h = no_triangle();
  AlgebraElement down = downward(lift(cherry(), h));
  CHECK(down.sigma().size() == 0);
  REQUIRE(down.coeffs().size() == 1);
  CHECK(down.coeff(form_of(Flag::prefix_labeled(*named_graph("P3"), 0))) ==
        make_rational(1, 3));

  AlgebraElement dpoint = downward(lift(point_flag(), h));
  CHECK(dpoint.coeff(form_of(Flag::prefix_labeled(*named_graph("K1"), 0))) == 1);

  // Averaging commutes with expansion.
  AlgebraElement a = lift(cherry(), h);
  CHECK(elements_equal(downward(expand_to(a, 4)), expand_to(downward(a), 4)));
  AlgebraElement ne = product(lift(rooted_nonedge(), h), lift(rooted_edge(), h));
  CHECK(elements_equal(downward(expand_to(ne, 4)), expand_to(downward(ne), 4)));
}

TEST_CASE("vertex averaging identity for the cherry") {
  // (1/|V(G)|) sum over v of p(cherry; G rooted at v) equals
  // (1/3) p(path; G) for triangle-free G.
  FamilySpec h = no_triangle();
  Flag path = Flag::prefix_labeled(*named_graph("P3"), 0);
  for (int n = 3; n <= 5; ++n)
    for (const Graph& g : enumerate_h_free(n, h)) {
      Rational avg = 0;
      for (int v = 0; v < n; ++v) avg += density(cherry(), Flag(g, {v}));
      avg /= n;
      CHECK(avg == make_rational(1, 3) * density(path, Flag::prefix_labeled(g, 0)));
    }
}

TEST_CASE("element dump format") {
  FamilySpec h = no_triangle();
  CHECK(format_element(lift(rooted_edge(), h)) == "1/1  2; 0-1 | embedding: 0\n");
  AlgebraElement ne = product(lift(rooted_nonedge(), h), lift(rooted_edge(), h));
  CHECK(format_element(ne) ==
        "1/2  3; 0-2 | embedding: 0\n"
        "1/2  3; 0-2, 1-2 | embedding: 0\n");
}

}  // TEST_SUITE
