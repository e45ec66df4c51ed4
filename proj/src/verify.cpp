#include "stepcomp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "stepcomp/competition.hpp"
#include "stepcomp/isomorphism.hpp"
#include "stepcomp/structure.hpp"

namespace stepcomp {
namespace {

void validate(const EnumerationSpec& spec) {
  if (spec.m < 1 || spec.n < 1)
    throw std::invalid_argument("partite sizes must be >= 1");
  if (spec.m > 62 || spec.n > 62 || spec.m * spec.n > 62)
    throw std::invalid_argument("orientation space exceeds 62 bits");
  if (spec.m * spec.n > spec.bit_limit)
    throw std::invalid_argument(
        "m*n = " + std::to_string(spec.m * spec.n) +
        " exceeds the exhaustive limit of " + std::to_string(spec.bit_limit) +
        " bits");
  if (spec.shards < 1)
    throw std::invalid_argument("shard count must be >= 1");
  if (spec.dedup && (spec.m > 8 || spec.n > 8))
    throw std::invalid_argument("dedup supports sides up to 8");
}

std::string code_to_bits(const EnumerationSpec& spec, std::uint64_t code) {
  return BipartiteTournament::from_code(spec.m, spec.n, code).bit_string();
}

struct ShardTally {
  std::uint64_t tested = 0;
  std::uint64_t violation_count = 0;
  std::vector<std::uint64_t> violation_codes;
};

// Sharded ascending sweep of the orientation space. The visitor returns
// whether the orientation is conforming; per-shard suite state is merged in
// shard order, so every field of the final report is independent of the
// shard count and of scheduling.
template <typename State, typename Visit, typename Merge>
VerificationReport run_suite(const EnumerationSpec& spec,
                             const std::string& check_id, const State& init,
                             Visit visit, Merge merge, State& final_state) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();

  const std::uint64_t total = std::uint64_t{1} << (spec.m * spec.n);
  const int shards = spec.shards;
  std::vector<ShardTally> tallies(shards);
  std::vector<State> states(shards, init);

  auto worker = [&](int s) {
    const std::uint64_t begin = total / shards * s + std::min<std::uint64_t>(s, total % shards);
    const std::uint64_t end =
        total / shards * (s + 1) + std::min<std::uint64_t>(s + 1, total % shards);
    ShardTally& tally = tallies[s];
    State& state = states[s];
    for (std::uint64_t code = begin; code < end; ++code) {
      if (spec.dedup &&
          canonical_orientation_code(spec.m, spec.n, code) != code)
        continue;
      BipartiteTournament t =
          BipartiteTournament::from_code(spec.m, spec.n, code);
      ++tally.tested;
      if (!visit(t, code, state)) {
        ++tally.violation_count;
        if (tally.violation_codes.size() < kMaxStoredViolations)
          tally.violation_codes.push_back(code);
      }
    }
  };

  if (shards == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(shards);
    for (int s = 0; s < shards; ++s) pool.emplace_back(worker, s);
    for (auto& t : pool) t.join();
  }

  VerificationReport report;
  report.check_id = check_id;
  report.m = spec.m;
  report.n = spec.n;
  report.dedup = spec.dedup;
  report.shards = shards;
  final_state = init;
  for (int s = 0; s < shards; ++s) {
    report.orientations_tested += tallies[s].tested;
    report.violation_count += tallies[s].violation_count;
    for (std::uint64_t code : tallies[s].violation_codes) {
      if (report.violations.size() >= kMaxStoredViolations) break;
      report.violations.push_back(code_to_bits(spec, code));
    }
    merge(final_state, states[s]);
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

struct NoState {};

std::uint64_t transpose_code(int m, int n, std::uint64_t code) {
  std::uint64_t out = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if ((code >> (i * n + j)) & 1) out |= std::uint64_t{1} << (j * m + i);
  return out;
}

std::uint64_t min_over_permutations(int m, int n, std::uint64_t code) {
  std::vector<int> row_perm(m), col_perm(n);
  std::iota(row_perm.begin(), row_perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::iota(col_perm.begin(), col_perm.end(), 0);
    do {
      std::uint64_t image = 0;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
          if ((code >> (row_perm[i] * n + col_perm[j])) & 1)
            image |= std::uint64_t{1} << (i * n + j);
      best = std::min(best, image);
    } while (std::next_permutation(col_perm.begin(), col_perm.end()));
  } while (std::next_permutation(row_perm.begin(), row_perm.end()));
  return best;
}

}  // namespace

std::uint64_t canonical_orientation_code(int m, int n, std::uint64_t code) {
  if (m < 1 || n < 1 || m > 8 || n > 8)
    throw std::invalid_argument("canonical codes support sides 1..8");
  std::uint64_t best = min_over_permutations(m, n, code);
  if (m == n)
    best = std::min(best, min_over_permutations(m, n, transpose_code(m, n, code)));
  return best;
}

std::uint64_t enumerate_orientations(
    const EnumerationSpec& spec,
    const std::function<void(const BipartiteTournament&, std::uint64_t)>&
        visitor) {
  NoState state;
  auto report = run_suite(
      spec, "enumerate", NoState{},
      [&](const BipartiteTournament& t, std::uint64_t code, NoState&) {
        visitor(t, code);
        return true;
      },
      [](NoState&, const NoState&) {}, state);
  return report.orientations_tested;
}

VerificationReport run_orientation_check(
    const EnumerationSpec& spec, const std::string& check_id,
    const std::function<bool(const BipartiteTournament&)>& ok) {
  NoState state;
  return run_suite(
      spec, check_id, NoState{},
      [&](const BipartiteTournament& t, std::uint64_t, NoState&) {
        return ok(t);
      },
      [](NoState&, const NoState&) {}, state);
}

VerificationReport verify_component_theorem(const EnumerationSpec& spec) {
  NoState state;
  return run_suite(
      spec, "component-theorem", NoState{},
      [&](const BipartiteTournament& t, std::uint64_t, NoState&) {
        SimpleGraph g = c12_fast(t);
        return classify_shape(g).classification != ShapeClass::kViolation;
      },
      [](NoState&, const NoState&) {}, state);
}

VerificationReport verify_diameter_theorem(const EnumerationSpec& spec) {
  struct DiamState {
    int max_diameter = 0;
  };
  DiamState final_state;
  auto report = run_suite(
      spec, "diameter-theorem", DiamState{},
      [&](const BipartiteTournament& t, std::uint64_t, DiamState& s) {
        SimpleGraph g = c12_fast(t);
        bool ok = true;
        for (const auto& comp : components(g)) {
          if (comp.size() < 2) continue;
          int diam = diameter(g, comp);
          s.max_diameter = std::max(s.max_diameter, diam);
          if (diam > 3) ok = false;
        }
        return ok;
      },
      [](DiamState& a, const DiamState& b) {
        a.max_diameter = std::max(a.max_diameter, b.max_diameter);
      },
      final_state);
  report.observations["max-nontrivial-diameter"] =
      std::to_string(final_state.max_diameter);
  return report;
}

namespace {

struct InvariantTally {
  std::uint64_t equivalence_checked = 0;
  // Connected diameter-3 outputs, plus how many of them carry edge-sharing
  // triangles (recorded, not asserted; only the cycle form is a theorem).
  std::uint64_t diameter_three = 0;
  std::uint64_t diameter_three_sharing_triangles = 0;
};

bool invariants_hold(const EnumerationSpec& spec, const BipartiteTournament& t,
                     std::uint64_t code, InvariantTally& tally) {
  const int m = t.m();
  const int n = t.n();
  const int order = m + n;
  SimpleGraph g = c12_fast(t);
  Digraph d = t.to_digraph();

  // Non-isolated vertices have an out-neighbor.
  for (int v = 0; v < order; ++v)
    if (g.degree(v) > 0 && d.outdegree(v) == 0) return false;

  // Edge dichotomy: same-side edges are plain competition, cross edges are
  // one-two-step competition with a checkable witness.
  for (int u = 0; u < order; ++u) {
    bool bad = false;
    bits::for_each(g.row(u), [&](int v) {
      if (bad || v <= u) return;
      const bool same_side = (u < m) == (v < m);
      auto plain = competes(d, u, v);
      if (same_side) {
        if (!plain || !witness_valid(d, u, v, *plain)) bad = true;
        return;
      }
      if (plain) {
        bad = true;  // cross out-sets live in different partite sets
        return;
      }
      auto wit = one_two_competes(d, u, v);
      if (!wit || !witness_valid(d, u, v, *wit)) bad = true;
    });
    if (bad) return false;
  }

  // Arc rule: for an arc u->v with outdeg(v) >= 1, adjacency is exactly
  // outdeg(u) >= 2.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      if (t.bit(i, j)) {
        if (t.outdegree_right(j) >= 1 &&
            g.has_edge(i, m + j) != (t.outdegree_left(i) >= 2))
          return false;
      } else {
        if (t.outdegree_left(i) >= 1 &&
            g.has_edge(i, m + j) != (t.outdegree_right(j) >= 2))
          return false;
      }
    }

  // All out-degrees >= 2 iff the cross edges induce the full K_{m,n}.
  bool all_two = true;
  for (int v = 0; v < order && all_two; ++v)
    if (d.outdegree(v) < 2) all_two = false;
  std::size_t cross_edges = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (g.has_edge(i, m + j)) ++cross_edges;
  if (all_two != (cross_edges == static_cast<std::size_t>(m) * n))
    return false;

  // A cross edge needs a same-side neighbor at one of its ends.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      if (!g.has_edge(i, m + j)) continue;
      bool left_side = false, right_side = false;
      for (int i2 = 0; i2 < m && !left_side; ++i2)
        if (i2 != i && g.has_edge(i, i2)) left_side = true;
      for (int j2 = 0; j2 < n && !right_side; ++j2)
        if (j2 != j && g.has_edge(m + j, m + j2)) right_side = true;
      if (!left_side && !right_side) return false;
    }

  // Complete-component trichotomy and the connected-case corollaries.
  auto comps = components(g);
  int nontrivial = 0;
  const std::vector<int>* the_nontrivial = nullptr;
  for (const auto& comp : comps)
    if (comp.size() >= 2) {
      ++nontrivial;
      the_nontrivial = &comp;
    }
  bool any_complete_nontrivial = false;
  for (const auto& comp : comps)
    if (comp.size() >= 2 && is_complete(g, comp)) any_complete_nontrivial = true;
  if (any_complete_nontrivial) {
    const bool whole_complete_12 =
        comps.size() == 1 && order >= 12 && is_complete(g, comps[0]);
    const bool one_plus_isolated = nontrivial == 1 && comps.size() >= 2 &&
                                   is_complete(g, *the_nontrivial);
    const bool two_complete =
        comps.size() == 2 && comps[0].size() >= 3 && comps[1].size() >= 3 &&
        is_complete(g, comps[0]) && is_complete(g, comps[1]);
    if (!whole_complete_12 && !one_plus_isolated && !two_complete)
      return false;
  }

  if (comps.size() == 1 && order >= 2) {
    if (max_degree(g) < 3) return false;
    if (is_unicyclic(g)) return false;
    const int diam = diameter(g, comps[0]);
    if (diam == 3) {
      ++tally.diameter_three;
      if (has_edge_sharing_triangles(g)) ++tally.diameter_three_sharing_triangles;
      if (!(has_triangle(g) && has_edge_sharing_cycles(g))) return false;
    }
    // Connected, non-complete, no edge-sharing triangles forces the star.
    if (!is_complete(g, comps[0]) && !has_edge_sharing_triangles(g) &&
        !are_isomorphic(g, star_graph(4)))
      return false;
  }

  // Fast path against the definitional operator.
  const bool check_equivalence =
      m * n <= 12 ||
      code % spec.equivalence_stride ==
          spec.equivalence_offset % spec.equivalence_stride;
  if (check_equivalence) {
    ++tally.equivalence_checked;
    if (!(step_competition_graph(d, {1, 2}) == g)) return false;
  }
  return true;
}

}  // namespace

VerificationReport verify_invariant_suite(const EnumerationSpec& spec) {
  InvariantTally final_state;
  auto report = run_suite(
      spec, "invariant-suite", InvariantTally{},
      [&](const BipartiteTournament& t, std::uint64_t code, InvariantTally& s) {
        return invariants_hold(spec, t, code, s);
      },
      [](InvariantTally& a, const InvariantTally& b) {
        a.equivalence_checked += b.equivalence_checked;
        a.diameter_three += b.diameter_three;
        a.diameter_three_sharing_triangles += b.diameter_three_sharing_triangles;
      },
      final_state);
  report.observations["definitional-cross-checks"] =
      std::to_string(final_state.equivalence_checked);
  report.observations["diameter-three-outputs"] =
      std::to_string(final_state.diameter_three);
  report.observations["diameter-three-with-sharing-triangles"] =
      std::to_string(final_state.diameter_three_sharing_triangles);
  return report;
}

VerificationReport extremal_edge_counts(const EnumerationSpec& spec) {
  if (spec.m < spec.n)
    throw std::invalid_argument("extremal counts expect m >= n");
  struct ExtState {
    std::uint64_t min_edges = ~std::uint64_t{0};
    std::uint64_t max_edges = 0;
    std::uint64_t min_code = 0;
    std::uint64_t max_code = 0;
  };
  ExtState final_state;
  auto report = run_suite(
      spec, "extremal-edges", ExtState{},
      [&](const BipartiteTournament& t, std::uint64_t code, ExtState& s) {
        std::uint64_t edges = c12_fast(t).edge_count();
        if (edges < s.min_edges) {
          s.min_edges = edges;
          s.min_code = code;
        }
        if (edges > s.max_edges) {
          s.max_edges = edges;
          s.max_code = code;
        }
        return true;
      },
      [](ExtState& a, const ExtState& b) {
        if (b.min_edges < a.min_edges) {
          a.min_edges = b.min_edges;
          a.min_code = b.min_code;
        }
        if (b.max_edges > a.max_edges) {
          a.max_edges = b.max_edges;
          a.max_code = b.max_code;
        }
      },
      final_state);

  // code 0 always yields C(n,2) edges, so min_edges is set.
  ExtremalEdgeData data;
  data.min_edges = final_state.min_edges;
  data.max_edges = final_state.max_edges;
  data.min_witness = code_to_bits(spec, final_state.min_code);
  data.max_witness = code_to_bits(spec, final_state.max_code);
  report.extremal = data;

  const std::uint64_t expected_min =
      (spec.m == 2 && spec.n == 2)
          ? 0
          : static_cast<std::uint64_t>(spec.n) * (spec.n - 1) / 2;
  report.observations["expected-min-edges"] = std::to_string(expected_min);
  if (data.min_edges != expected_min) {
    ++report.violation_count;
    report.violations.push_back(data.min_witness);
  }
  return report;
}

namespace {

std::string edge_list_string(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.order() << ":";
  for (int u = 0; u < g.order(); ++u)
    bits::for_each(g.row(u), [&](int v) {
      if (u < v) out << " " << u << "-" << v;
    });
  return out.str();
}

}  // namespace

VerificationReport tree_census(int max_order, const SearchBudget& budget) {
  if (max_order < 1 || max_order > 7)
    throw std::invalid_argument("tree census supports orders 1..7");
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.check_id = "tree-census";
  const SimpleGraph star = star_graph(4);

  std::uint64_t realizable_count = 0;
  for (int order = 1; order <= max_order; ++order) {
    auto trees = generate_trees(order);
    report.observations["trees-order-" + std::to_string(order)] =
        std::to_string(trees.size());
    for (const auto& tree : trees) {
      auto answer = is_c12_realizable(tree, budget);
      report.orientations_tested += answer.orientations_tested;
      const bool expected = order == 5 && are_isomorphic(tree, star);
      bool bad = false;
      if (answer.status == SearchStatus::kIndeterminate)
        bad = true;  // an unresolved search can never certify the census
      else if (answer.realizable() != expected)
        bad = true;
      if (answer.realizable()) ++realizable_count;
      if (bad) {
        ++report.violation_count;
        if (report.violations.size() < kMaxStoredViolations)
          report.violations.push_back(edge_list_string(tree));
      }
    }
  }
  report.observations["realizable-trees"] = std::to_string(realizable_count);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::string VerificationReport::to_text(bool include_run_details) const {
  std::ostringstream out;
  out << "check: " << check_id << "\n";
  out << "m: " << m << "\n";
  out << "n: " << n << "\n";
  out << "dedup: " << (dedup ? "on" : "off") << "\n";
  out << "orientations: " << orientations_tested << "\n";
  out << "violations: " << violation_count << "\n";
  out << "verified: " << (verified() ? "yes" : "no") << "\n";
  if (extremal) {
    out << "min-edges: " << extremal->min_edges << "\n";
    out << "min-witness: " << extremal->min_witness << "\n";
    out << "max-edges: " << extremal->max_edges << "\n";
    out << "max-witness: " << extremal->max_witness << "\n";
  }
  for (const auto& [key, value] : observations)
    out << key << ": " << value << "\n";
  for (std::size_t k = 0; k < violations.size(); ++k)
    out << "violation-" << (k + 1) << ": " << violations[k] << "\n";
  if (include_run_details) {
    out << "shards: " << shards << "\n";
    out << "wall-seconds: " << wall_seconds << "\n";
  }
  return out.str();
}

}  // namespace stepcomp
