#include <stdexcept>
#include "doctest.h"
#include "stepcomp/competition.hpp"
#include "stepcomp/constructors.hpp"
#include "stepcomp/isomorphism.hpp"
#include "stepcomp/structure.hpp"

using namespace stepcomp;

namespace {

// Definitional operator as the oracle for every constructor postcondition.
SimpleGraph c12_oracle(const BipartiteTournament& t) {
  return step_competition_graph(t.to_digraph(), {1, 2});
}

}  // namespace

TEST_CASE("star witness") {
  auto t = star_witness();
  CHECK(t.bit_string() == "101101");
  CHECK(t.outdegree_left(1) == 2);
  for (int v : {0, 2, 3, 4}) CHECK(t.to_digraph().outdegree(v) == 1);
  CHECK(are_isomorphic(c12_oracle(t), star_graph(4)));
  CHECK(competition_graph(t.to_digraph()).edge_count() == 2);
}

TEST_CASE("disjoint union witness") {
  SUBCASE("two triangles") {
    auto t = disjoint_union_witness(3, 3);
    CHECK(t.m() == 4);
    CHECK(t.n() == 2);
    SimpleGraph g = c12_oracle(t);
    CHECK(are_isomorphic(g, disjoint_union(complete_graph(3), complete_graph(3))));
    // The components mix the sides: each 2-side vertex joins its fan.
    auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 4});
    CHECK(comps[1] == std::vector<int>{2, 3, 5});
  }

  SUBCASE("asymmetric sizes") {
    for (auto [m, n] : {std::pair{4, 3}, {5, 4}, {5, 3}}) {
      SimpleGraph g = c12_oracle(disjoint_union_witness(m, n));
      CHECK(are_isomorphic(
          g, disjoint_union(complete_graph(m), complete_graph(n))));
    }
  }

  SUBCASE("single sink side") {
    SimpleGraph g = c12_oracle(disjoint_union_witness(4, 1));
    CHECK(are_isomorphic(g, disjoint_union(complete_graph(4), SimpleGraph(1))));
  }

  SUBCASE("n = 2 is impossible") {
    CHECK_THROWS_AS(disjoint_union_witness(2, 2), std::domain_error);
    CHECK_THROWS_AS(disjoint_union_witness(5, 2), std::domain_error);
    CHECK_THROWS_AS(disjoint_union_witness(2, 3), std::invalid_argument);
  }
}

TEST_CASE("K_m with K_5 pair witness") {
  auto t = pair_k10_k5_witness(10);
  SimpleGraph plain = competition_graph(t.to_digraph());
  CHECK(plain == disjoint_union(complete_graph(10), complete_graph(5)));

  // Ten designated receivers of out-degree 3, the rest full fans.
  int deg3 = 0, deg5 = 0;
  for (int i = 0; i < 10; ++i) {
    if (t.outdegree_left(i) == 3) ++deg3;
    if (t.outdegree_left(i) == 5) ++deg5;
  }
  CHECK(deg3 == 10);
  CHECK(deg5 == 0);
  for (int i = 0; i < 10; ++i)
    for (int i2 = i + 1; i2 < 10; ++i2) CHECK((t.row(i) & t.row(i2)) != 0);

  // Every out-degree is >= 2, so the cross edges fill up: K_15.
  CHECK(c12_oracle(t) == complete_graph(15));

  auto bigger = pair_k10_k5_witness(12);
  CHECK(competition_graph(bigger.to_digraph()) ==
        disjoint_union(complete_graph(12), complete_graph(5)));

  CHECK_THROWS_AS(pair_k10_k5_witness(9), std::invalid_argument);
}

TEST_CASE("cover to orientation") {
  SUBCASE("K_5 from its ten edges") {
    CliqueCover cover;
    cover.base_order = 5;
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) cover.cliques.push_back({u, v});
    auto t = cover_to_orientation(complete_graph(5), cover, 10);
    CHECK(competition_graph(t.to_digraph()) ==
          disjoint_union(complete_graph(5), complete_graph(10)));
  }

  SUBCASE("a path cover violating the union bound is rejected") {
    CliqueCover cover;
    cover.base_order = 3;
    cover.cliques = {{0, 1}, {1, 2}};
    // The two cliques cover all three vertices, so the receiver pair could
    // never compete.
    CHECK_THROWS_AS(cover_to_orientation(path_graph(3), cover, 2),
                    std::invalid_argument);
  }

  SUBCASE("single clique, single receiver") {
    CliqueCover cover;
    cover.base_order = 3;
    cover.cliques = {{0, 1, 2}};
    auto t = cover_to_orientation(complete_graph(3), cover, 1);
    CHECK(competition_graph(t.to_digraph()) ==
          disjoint_union(complete_graph(3), SimpleGraph(1)));
  }

  SUBCASE("padding slots stay compatible") {
    CliqueCover cover;
    cover.base_order = 5;
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) cover.cliques.push_back({u, v});
    auto t = cover_to_orientation(complete_graph(5), cover, 12);
    CHECK(competition_graph(t.to_digraph()) ==
          disjoint_union(complete_graph(5), complete_graph(12)));
  }

  SUBCASE("two cliques spanning every vertex are rejected even with slack") {
    CliqueCover cover;
    cover.base_order = 3;
    cover.cliques = {{0, 1}, {1, 2}, {0, 2}};
    CHECK_THROWS_AS(cover_to_orientation(complete_graph(3), cover, 5),
                    std::invalid_argument);
  }

  SUBCASE("invalid covers are rejected") {
    CliqueCover not_cover;
    not_cover.base_order = 3;
    not_cover.cliques = {{0, 1}};  // edge 1-2 uncovered
    CHECK_THROWS_AS(cover_to_orientation(path_graph(3), not_cover, 2),
                    std::invalid_argument);

    CliqueCover not_clique;
    not_clique.base_order = 3;
    not_clique.cliques = {{0, 1, 2}};
    CHECK_THROWS_AS(cover_to_orientation(path_graph(3), not_clique, 2),
                    std::invalid_argument);

    CliqueCover fine;
    fine.base_order = 3;
    fine.cliques = {{0, 1, 2}};
    CHECK_THROWS_AS(cover_to_orientation(complete_graph(3), fine, 0),
                    std::invalid_argument);
  }
}

TEST_CASE("complete graph witness") {
  auto t12 = complete_c12_witness(12);
  CHECK(t12.m() == 6);
  CHECK(t12.n() == 6);
  SimpleGraph g12 = c12_oracle(t12);
  CHECK(g12 == complete_graph(12));
  CHECK(g12.edge_count() == 66);

  CHECK(c12_oracle(complete_c12_witness(13)) == complete_graph(13));

  CHECK_THROWS_AS(complete_c12_witness(11), std::domain_error);
  CHECK_THROWS_AS(complete_c12_witness(2), std::domain_error);
}

TEST_CASE("minimum edge witness") {
  CHECK(c12_oracle(min_edge_witness(2, 2)).edge_count() == 0);
  CHECK(c12_oracle(min_edge_witness(3, 2)).edge_count() == 1);

  SimpleGraph g = c12_oracle(min_edge_witness(4, 3));
  CHECK(g.edge_count() == 3);
  CHECK(are_isomorphic(
      g, disjoint_union(SimpleGraph(4), complete_graph(3))));

  CHECK(c12_oracle(min_edge_witness(5, 1)).edge_count() == 0);
  CHECK(c12_oracle(min_edge_witness(1, 1)).edge_count() == 0);
  CHECK_THROWS_AS(min_edge_witness(2, 3), std::invalid_argument);
}

TEST_CASE("diameter-three witness") {
  auto t = diameter_three_witness();
  SimpleGraph g = c12_oracle(t);
  CHECK(g.edge_count() == 13);
  auto shape = classify_shape(g);
  CHECK(shape.classification == ShapeClass::kOneNontrivial);
  CHECK(shape.nontrivial_diameter == 3);
  CHECK(has_triangle(g));
  CHECK(has_edge_sharing_cycles(g));
}
