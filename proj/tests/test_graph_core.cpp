#include <stdexcept>
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "stepcomp/graph.hpp"
#include "stepcomp/isomorphism.hpp"
#include "stepcomp/tournament.hpp"

using namespace stepcomp;

namespace {

// Arcs of the 3x2 orientation 10/11/01 read off by hand from the matrix.
const std::set<std::pair<int, int>> kStarArcs = {{0, 3}, {1, 3}, {1, 4},
                                                 {2, 4}, {3, 2}, {4, 0}};

std::set<std::pair<int, int>> arcs_of(const Digraph& d) {
  std::set<std::pair<int, int>> arcs;
  for (int u = 0; u < d.order(); ++u)
    for (int v : d.out_neighbors(u)) arcs.insert({u, v});
  return arcs;
}

SimpleGraph random_graph(int order, double p, std::mt19937_64& rng) {
  SimpleGraph g(order);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
  SimpleGraph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace

TEST_CASE("tournament from bit matrix") {
  auto star = BipartiteTournament::from_bit_string(3, 2, "101101");
  CHECK(arcs_of(star.to_digraph()) == kStarArcs);

  auto four_cycle = BipartiteTournament::from_bit_string(2, 2, "1001");
  CHECK(arcs_of(four_cycle.to_digraph()) ==
        std::set<std::pair<int, int>>{{0, 2}, {2, 1}, {1, 3}, {3, 0}});

  auto tiny = BipartiteTournament::from_bit_string(1, 1, "1");
  CHECK(arcs_of(tiny.to_digraph()) == std::set<std::pair<int, int>>{{0, 1}});

  CHECK_THROWS_AS(BipartiteTournament::from_bit_string(3, 2, "10110"),
                  std::invalid_argument);
  CHECK_THROWS_AS(BipartiteTournament::from_bit_string(0, 2, ""),
                  std::invalid_argument);
  CHECK_THROWS_AS(BipartiteTournament::from_bit_string(2, 2, "10x1"),
                  std::invalid_argument);
}

TEST_CASE("tournament to digraph") {
  auto zeros = BipartiteTournament::from_bit_string(2, 2, "0000");
  CHECK(arcs_of(zeros.to_digraph()) ==
        std::set<std::pair<int, int>>{{2, 0}, {3, 0}, {2, 1}, {3, 1}});

  // Always m*n arcs, none within a side.
  for (auto [m, n] : {std::pair{3, 2}, {4, 3}, {1, 5}}) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      std::uint64_t code = rng() & bits::low_mask(m * n);
      Digraph d = BipartiteTournament::from_code(m, n, code).to_digraph();
      CHECK(d.arc_count() == m * n);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if (a != b) CHECK(!d.has_arc(a, b));
      for (int a = m; a < m + n; ++a)
        for (int b = m; b < m + n; ++b)
          if (a != b) CHECK(!d.has_arc(a, b));
    }
  }
}

TEST_CASE("orientation bits round-trip exhaustively") {
  for (int m = 1; m <= 12; ++m)
    for (int n = 1; m * n <= 12 && n <= 12; ++n) {
      const std::uint64_t total = std::uint64_t{1} << (m * n);
      for (std::uint64_t code = 0; code < total; ++code) {
        auto t = BipartiteTournament::from_code(m, n, code);
        CHECK(t.code() == code);
        auto back = BipartiteTournament::from_bit_string(m, n, t.bit_string());
        CHECK(back == t);
      }
    }
}

TEST_CASE("out neighbors") {
  Digraph star = BipartiteTournament::from_bit_string(3, 2, "101101")
                     .to_digraph();
  CHECK(star.out_neighbors(1) == std::vector<int>{3, 4});
  CHECK(star.out_neighbors(0) == std::vector<int>{3});
  CHECK(star.outdegree(1) == 2);

  Digraph arcless(4);
  for (int v = 0; v < 4; ++v) CHECK(arcless.out_neighbors(v).empty());

  CHECK_THROWS_AS(star.out_neighbors(5), std::invalid_argument);
  CHECK_THROWS_AS(star.out_neighbors(-1), std::invalid_argument);
}

TEST_CASE("isomorphism on named graphs") {
  SimpleGraph star = star_graph(4);
  SimpleGraph shifted(5);  // center relabeled to 3
  for (int v : {0, 1, 2, 4}) shifted.add_edge(3, v);
  CHECK(are_isomorphic(star, shifted));

  SimpleGraph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK(!are_isomorphic(two_triangles, cycle_graph(6)));

  CHECK(!are_isomorphic(path_graph(4), star_graph(3)));
  CHECK(are_isomorphic(complete_graph(6), complete_graph(6)));
}

TEST_CASE("isomorphism behaves like an equivalence relation") {
  std::mt19937_64 rng(11);
  std::vector<SimpleGraph> pool;
  for (int trial = 0; trial < 12; ++trial)
    pool.push_back(random_graph(4 + static_cast<int>(rng() % 5), 0.4, rng));

  for (const auto& g : pool) CHECK(are_isomorphic(g, g));

  for (const auto& g : pool) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SimpleGraph h = relabel(g, perm);
    CHECK(are_isomorphic(g, h));
    CHECK(are_isomorphic(h, g));

    std::shuffle(perm.begin(), perm.end(), rng);
    SimpleGraph k = relabel(h, perm);
    // Transitivity spot-check along the relabeling chain.
    CHECK(are_isomorphic(g, k));
  }

  for (const auto& g : pool)
    for (const auto& h : pool)
      CHECK(are_isomorphic(g, h) == are_isomorphic(h, g));
}

TEST_CASE("canonical key separates iff isomorphic") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    SimpleGraph g = random_graph(5 + static_cast<int>(rng() % 3), 0.45, rng);
    SimpleGraph h = random_graph(g.order(), 0.45, rng);
    CHECK((canonical_key(g) == canonical_key(h)) == are_isomorphic(g, h));
  }
  SimpleGraph star = star_graph(4);
  std::vector<int> perm{4, 2, 0, 1, 3};
  CHECK(canonical_key(star) == canonical_key(relabel(star, perm)));
}

TEST_CASE("graph primitives") {
  SimpleGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);
}
