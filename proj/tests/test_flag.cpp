#include <vector>

#include "doctest.h"
#include "flagbound/flag.hpp"
#include "oracles.hpp"

using namespace flagbound;

namespace {

FamilySpec no_triangle() { return FamilySpec({*named_graph("K3")}); }

// All 5-vertex graphs that contain a triangle: the smallest family for
// which the triangle type dies out at size 5 but not before.
FamilySpec triangle_at_five() {
  std::vector<Graph> members;
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    Graph g = oracle::graph_from_mask(5, mask);
    if (oracle::has_triangle(g)) members.push_back(g);
  }
  return FamilySpec(members);
}

}  // namespace

TEST_SUITE("flag") {

TEST_CASE("construction normalizes the embedding to the front") {
  Graph c5 = *named_graph("C5");
  Flag f(c5, {2, 3});
  CHECK(f.size() == 5);
  CHECK(f.type_size() == 2);
  CHECK(f.type_graph() == *named_graph("K2"));
  CHECK(f.embedding() == std::vector<int>{0, 1});
  // The relabeled graph is still a 5-cycle.
  CHECK(oracle::isomorphic(f.graph(), c5));

  CHECK_THROWS_AS(Flag(c5, {0, 0}), InputError);
  CHECK_THROWS_AS(Flag(c5, {0, 9}), InputError);
}

TEST_CASE("flag forms separate rooted paths by root position") {
  Graph path = *named_graph("P3");  // edges 0-1, 1-2
  Flag end_a(path, {0});
  Flag end_b(path, {2});
  Flag center(path, {1});
  CHECK(flag_canonical_form(end_a) == flag_canonical_form(end_b));
  CHECK(flag_canonical_form(end_a) != flag_canonical_form(center));
  // Unlabeled, all three collapse.
  CHECK(flag_canonical_form(Flag::prefix_labeled(path, 0)) ==
        flag_canonical_form(
            Flag::prefix_labeled(Graph::from_edges(3, {{0, 2}, {2, 1}}), 0)));
}

TEST_CASE("canonical flag representative reproduces the form") {
  Graph path = *named_graph("P3");
  FlagForm form = flag_canonical_form(Flag(path, {1}));
  Flag rep = canonical_flag(form);
  CHECK(flag_canonical_form(rep) == form);
  CHECK(rep.graph().upper_bits() == form.bits);
}

TEST_CASE("enumerate_types") {
  CHECK(enumerate_types(0, no_triangle()).size() == 1);
  CHECK(enumerate_types(1, no_triangle()).size() == 1);
  CHECK(enumerate_types(2, no_triangle()).size() == 2);
  CHECK(enumerate_types(3, no_triangle()).size() == 3);
  CHECK(enumerate_types(3, FamilySpec()).size() == 4);
}

TEST_CASE("enumerate_flags over the 1-labeled type") {
  TypeSigma point{*named_graph("K1")};
  std::vector<Flag> f2 = enumerate_flags(point, 2, no_triangle());
  REQUIRE(f2.size() == 2);
  // Nonedge sorts before edge.
  CHECK(f2[0].graph().edge_total() == 0);
  CHECK(f2[1].graph().edge_total() == 1);

  std::vector<Flag> f3 = enumerate_flags(point, 3, no_triangle());
  REQUIRE(f3.size() == 5);
  // Frozen canonical order: empty, unlabeled edge, pendant edge at the
  // root, path rooted at an end, path rooted at the center.
  CHECK(f3[0].graph().upper_bits() == 0);
  CHECK(f3[1].graph().upper_bits() == pair_bit(2));
  CHECK(f3[2].graph().upper_bits() == pair_bit(1));
  CHECK(f3[3].graph().upper_bits() == (pair_bit(1) | pair_bit(2)));
  CHECK(f3[4].graph().upper_bits() == (pair_bit(0) | pair_bit(1)));
}

TEST_CASE("enumerate_flags basics and invariants") {
  TypeSigma point{*named_graph("K1")};
  FamilySpec h = no_triangle();

  // Size equal to the type gives just the type itself.
  std::vector<Flag> base = enumerate_flags(point, 1, h);
  REQUIRE(base.size() == 1);
  CHECK(base[0].graph() == point.graph);

  // Unlabeled flags match plain graph enumeration.
  std::vector<Flag> unl = enumerate_flags(TypeSigma{Graph(0)}, 4, h);
  std::vector<Graph> graphs = enumerate_h_free(4, h);
  REQUIRE(unl.size() == graphs.size());
  for (std::size_t i = 0; i < unl.size(); ++i) CHECK(unl[i].graph() == graphs[i]);

  for (const Flag& f : enumerate_flags(point, 4, h)) {
    CHECK(is_h_free(f.graph(), h));
    CHECK(f.type_graph() == point.graph);
  }

  // Flags are sorted by form with no repeats.
  std::vector<Flag> f4 = enumerate_flags(point, 4, h);
  for (std::size_t i = 1; i < f4.size(); ++i)
    CHECK(flag_canonical_form(f4[i - 1]) < flag_canonical_form(f4[i]));

  CHECK_THROWS_AS(enumerate_flags(point, 0, h), InputError);
  CHECK_THROWS_AS(enumerate_flags(point, 13, h), CapacityError);
  CHECK_THROWS_AS(enumerate_flags(TypeSigma{*named_graph("K3")}, 3, h), InputError);
}

TEST_CASE("flag count does not depend on the type representative") {
  // Two labelings of the path as a fully labeled type.
  TypeSigma s1{Graph::from_edges(3, {{0, 1}, {1, 2}})};
  TypeSigma s2{Graph::from_edges(3, {{0, 2}, {2, 1}})};
  FamilySpec h = no_triangle();
  for (int n = 3; n <= 5; ++n)
    CHECK(enumerate_flags(s1, n, h).size() == enumerate_flags(s2, n, h).size());
}

TEST_CASE("check_nondegenerate") {
  TypeSigma point{*named_graph("K1")};
  CHECK(check_nondegenerate(point, no_triangle(), 6));
  CHECK(check_nondegenerate(TypeSigma{Graph(0)}, no_triangle(), 6));

  FamilySpec f5 = triangle_at_five();
  TypeSigma tri{*named_graph("K3")};
  CHECK(check_nondegenerate(tri, f5, 4));
  CHECK(!check_nondegenerate(tri, f5, 5));

  CHECK_THROWS_AS(check_nondegenerate(tri, f5, 2), InputError);
}

TEST_CASE("flag serialization round trip") {
  Flag center(*named_graph("P3"), {1});
  std::string s = format_flag(center);
  CHECK(s == "3; 0-1, 0-2 | embedding: 0");
  Flag back = parse_flag(s);
  CHECK(flag_canonical_form(back) == flag_canonical_form(center));

  // Unlabeled flags serialize as a bare graph.
  Flag plain = Flag::prefix_labeled(*named_graph("P3"), 0);
  CHECK(format_flag(plain) == "3; 0-2, 1-2");
  CHECK(parse_flag("3; 0-1, 1-2").type_size() == 0);

  // Arbitrary embeddings are accepted and normalized.
  Flag in = parse_flag("5; 0-1, 1-2, 2-3, 3-4, 0-4 | embedding: 3,4");
  CHECK(in.type_size() == 2);
  CHECK(in.type_graph() == *named_graph("K2"));

  CHECK(format_flag(center, GraphFormat::graph6) == "Bo | embedding: 0");

  CHECK_THROWS_AS(parse_flag("3; 0-1 | roots: 0"), ParseError);
  CHECK_THROWS_AS(parse_flag("3; 0-1 | embedding: "), ParseError);
  CHECK_THROWS_AS(parse_flag("3; 0-1 | embedding: 0 1"), ParseError);
  CHECK_THROWS_AS(parse_flag("3; 0-1 | embedding: 9"), InputError);
}

}  // TEST_SUITE
