#include <stdexcept>
#include <set>

#include "doctest.h"
#include "stepcomp/competition.hpp"
#include "stepcomp/formats.hpp"
#include "stepcomp/structure.hpp"
#include "stepcomp/verify.hpp"

using namespace stepcomp;

namespace {

EnumerationSpec spec_of(int m, int n, int shards = 1, bool dedup = false) {
  EnumerationSpec spec;
  spec.m = m;
  spec.n = n;
  spec.shards = shards;
  spec.dedup = dedup;
  return spec;
}

}  // namespace

TEST_CASE("orientation enumeration counts") {
  auto count = [](const EnumerationSpec& spec) {
    return enumerate_orientations(spec,
                                  [](const BipartiteTournament&, std::uint64_t) {});
  };
  CHECK(count(spec_of(2, 2)) == 16);
  CHECK(count(spec_of(1, 1)) == 2);
  CHECK(count(spec_of(3, 2)) == 64);

  EnumerationSpec too_big = spec_of(5, 5);
  CHECK_THROWS_AS(count(too_big), std::invalid_argument);
  too_big.bit_limit = 30;
  CHECK_NOTHROW(count(too_big));
}

TEST_CASE("enumeration visits codes in ascending order") {
  std::vector<std::uint64_t> codes;
  enumerate_orientations(spec_of(2, 2),
                         [&](const BipartiteTournament& t, std::uint64_t code) {
                           CHECK(t.code() == code);
                           codes.push_back(code);
                         });
  for (std::size_t k = 0; k + 1 < codes.size(); ++k)
    CHECK(codes[k] < codes[k + 1]);
}

TEST_CASE("component theorem suite") {
  auto small = verify_component_theorem(spec_of(2, 2));
  CHECK(small.verified());
  CHECK(small.orientations_tested == 16);

  auto report = verify_component_theorem(spec_of(3, 3));
  CHECK(report.verified());
  CHECK(report.orientations_tested == 512);
  CHECK(report.violation_count == 0);
}

TEST_CASE("diameter theorem suite") {
  auto report = verify_diameter_theorem(spec_of(2, 2));
  CHECK(report.verified());
  // Orientation 1110 yields a path on three vertices plus an isolated
  // vertex, so the true maximum at (2,2) is 2.
  CHECK(report.observations.at("max-nontrivial-diameter") == "2");
  auto probe = BipartiteTournament::from_bit_string(2, 2, "1110");
  auto comps = components(c12_fast(probe));
  REQUIRE(comps.size() == 2);
  CHECK(diameter(c12_fast(probe), comps[0]) == 2);

  CHECK(verify_diameter_theorem(spec_of(3, 3)).verified());

  auto wide = verify_diameter_theorem(spec_of(4, 3));
  CHECK(wide.verified());
  CHECK(wide.observations.at("max-nontrivial-diameter") == "3");
}

TEST_CASE("invariant suite") {
  auto report = verify_invariant_suite(spec_of(3, 2));
  CHECK(report.verified());
  CHECK(report.orientations_tested == 64);
  // 6 bits <= 12: every orientation is cross-checked definitionally.
  CHECK(report.observations.at("definitional-cross-checks") == "64");

  CHECK(verify_invariant_suite(spec_of(1, 4)).verified());
  CHECK(verify_invariant_suite(spec_of(3, 4)).verified());
}

TEST_CASE("degenerate side: every (1,4) output is one clique plus isolates") {
  // With one vertex on side 1 there are never cross edges; the side-2
  // vertices aimed at the singleton form the only clique.
  enumerate_orientations(
      spec_of(1, 4), [](const BipartiteTournament& t, std::uint64_t) {
        SimpleGraph g = c12_fast(t);
        CHECK(g.degree(0) == 0);
        for (int a = 0; a < 4; ++a)
          for (int b = a + 1; b < 4; ++b)
            CHECK(g.has_edge(1 + a, 1 + b) == (!t.bit(0, a) && !t.bit(0, b)));
      });
}

TEST_CASE("extremal edge counts") {
  auto square = extremal_edge_counts(spec_of(2, 2));
  CHECK(square.verified());
  CHECK(square.extremal->min_edges == 0);

  auto rect = extremal_edge_counts(spec_of(4, 3));
  CHECK(rect.verified());
  CHECK(rect.extremal->min_edges == 3);

  auto tall = extremal_edge_counts(spec_of(5, 2));
  CHECK(tall.verified());
  CHECK(tall.extremal->min_edges == 1);

  // Witness strings re-parse and reproduce the extremes.
  auto parse = [&](const std::string& bits, int m, int n) {
    return BipartiteTournament::from_bit_string(m, n, bits);
  };
  CHECK(c12_fast(parse(rect.extremal->min_witness, 4, 3)).edge_count() == 3);
  CHECK(c12_fast(parse(rect.extremal->max_witness, 4, 3)).edge_count() ==
        rect.extremal->max_edges);

  CHECK_THROWS_AS(extremal_edge_counts(spec_of(2, 3)), std::invalid_argument);
}

namespace {

// Independent orbit computation: close each code under the generating
// moves (adjacent row swap, adjacent column swap, transpose when square)
// instead of minimizing over the full permutation product.
std::set<std::uint64_t> orbit_by_closure(int m, int n, std::uint64_t code) {
  auto apply = [&](std::uint64_t c, auto&& cell) {
    std::uint64_t image = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        if ((c >> (i * n + j)) & 1) {
          auto [i2, j2] = cell(i, j);
          image |= std::uint64_t{1} << (i2 * n + j2);
        }
    return image;
  };
  std::set<std::uint64_t> seen{code};
  std::vector<std::uint64_t> frontier{code};
  while (!frontier.empty()) {
    std::uint64_t c = frontier.back();
    frontier.pop_back();
    std::vector<std::uint64_t> images;
    for (int r = 0; r + 1 < m; ++r)
      images.push_back(apply(c, [&](int i, int j) {
        int i2 = i == r ? r + 1 : i == r + 1 ? r : i;
        return std::pair(i2, j);
      }));
    for (int s = 0; s + 1 < n; ++s)
      images.push_back(apply(c, [&](int i, int j) {
        int j2 = j == s ? s + 1 : j == s + 1 ? s : j;
        return std::pair(i, j2);
      }));
    if (m == n)
      images.push_back(apply(c, [&](int i, int j) { return std::pair(j, i); }));
    for (std::uint64_t image : images)
      if (seen.insert(image).second) frontier.push_back(image);
  }
  return seen;
}

}  // namespace

TEST_CASE("canonical orientation codes define orbits") {
  for (auto [m, n] : {std::pair{2, 2}, {3, 2}}) {
    const std::uint64_t total = std::uint64_t{1} << (m * n);
    std::map<std::uint64_t, std::set<std::uint64_t>> orbits;
    for (std::uint64_t code = 0; code < total; ++code)
      orbits[canonical_orientation_code(m, n, code)].insert(code);

    std::size_t covered = 0;
    for (const auto& [canon, members] : orbits) {
      CHECK(members.count(canon) == 1);  // the representative is a member
      covered += members.size();
      // The canonical class is exactly the group-closure orbit, and the
      // representative is its minimum.
      auto closure = orbit_by_closure(m, n, canon);
      CHECK(closure == members);
      CHECK(*closure.begin() == canon);
    }
    CHECK(covered == total);

    auto dedup_report = verify_component_theorem(spec_of(m, n, 1, true));
    CHECK(dedup_report.orientations_tested == orbits.size());
  }
}

TEST_CASE("reports are identical across shard counts") {
  std::vector<std::string> texts;
  for (int shards : {1, 2, 8}) {
    auto spec = spec_of(3, 3, shards);
    std::string all = verify_component_theorem(spec).to_text() +
                      verify_diameter_theorem(spec).to_text() +
                      verify_invariant_suite(spec).to_text() +
                      extremal_edge_counts(spec).to_text();
    texts.push_back(all);
  }
  CHECK(texts[0] == texts[1]);
  CHECK(texts[0] == texts[2]);
}

TEST_CASE("violations are recorded, capped, and replayable") {
  // A deliberately false predicate: no edges at all.
  auto report = run_orientation_check(
      spec_of(2, 2), "edgeless-everywhere",
      [](const BipartiteTournament& t) { return c12_fast(t).edge_count() == 0; });
  CHECK(!report.verified());
  CHECK(report.violation_count > 0);
  CHECK(report.violations.size() ==
        std::min<std::size_t>(report.violation_count, kMaxStoredViolations));
  for (const auto& bits : report.violations) {
    auto t = BipartiteTournament::from_bit_string(2, 2, bits);
    CHECK(c12_fast(t).edge_count() != 0);  // the violation reproduces
  }

  // Capping: a predicate that always fails stores only the first 100.
  auto flood = run_orientation_check(spec_of(4, 3), "never-true",
                                     [](const BipartiteTournament&) {
                                       return false;
                                     });
  CHECK(flood.violation_count == 4096);
  CHECK(flood.violations.size() == kMaxStoredViolations);
  // First stored violation is orientation 0.
  CHECK(flood.violations.front() == std::string(12, '0'));
}

TEST_CASE("violation lists are shard-independent too") {
  auto failing = [](const BipartiteTournament& t) {
    return c12_fast(t).edge_count() % 3 != 0;
  };
  auto a = run_orientation_check(spec_of(3, 2, 1), "mod3", failing);
  auto b = run_orientation_check(spec_of(3, 2, 4), "mod3", failing);
  CHECK(a.to_text() == b.to_text());
}

TEST_CASE("tree census") {
  auto report = tree_census(5);
  CHECK(report.verified());
  CHECK(report.observations.at("trees-order-1") == "1");
  CHECK(report.observations.at("trees-order-2") == "1");
  CHECK(report.observations.at("trees-order-3") == "1");
  CHECK(report.observations.at("trees-order-4") == "2");
  CHECK(report.observations.at("trees-order-5") == "3");
  CHECK(report.observations.at("realizable-trees") == "1");

  auto six = tree_census(6);
  CHECK(six.verified());
  CHECK(six.observations.at("trees-order-6") == "6");
  CHECK(six.observations.at("realizable-trees") == "1");
}
