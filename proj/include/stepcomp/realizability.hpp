#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stepcomp/graph.hpp"
#include "stepcomp/tournament.hpp"

namespace stepcomp {

/// A family of cliques of a base graph covering all of its edges.
struct CliqueCover {
  int base_order = 0;
  std::vector<std::vector<int>> cliques;  // each sorted ascending
};

/// True iff `cover` is a valid edge clique cover of g.
bool cover_is_valid(const SimpleGraph& g, const CliqueCover& cover);

/// Exact backtracking search for an edge clique cover with at most
/// `max_cliques` cliques in which |S u S'| <= union_bound for every pair of
/// cliques, the pair S = S' included (so every clique has size <=
/// union_bound). Branches on cliques through the first uncovered edge,
/// largest first. Empty iff no such cover exists. g must have no isolated
/// vertices.
std::optional<CliqueCover> find_clique_cover(const SimpleGraph& g,
                                             int max_cliques, int union_bound);

/// Certificate that g together with a complete graph on m fresh vertices is
/// the competition graph of some orientation of K_{|V(g)|,m}: a cover with
/// at most m cliques and pairwise unions of size <= |V(g)|-1. Feed the
/// result to cover_to_orientation to materialize the orientation.
std::optional<CliqueCover> is_competition_realizable_pair(const SimpleGraph& g,
                                                          int m);

struct SearchBudget {
  std::uint64_t max_orientations = 20'000'000;
  std::uint64_t max_nodes = 20'000'000;
  /// Full per-subset enumeration up to this many matrix bits; row-by-row
  /// backtracking with consistency pruning above it.
  int full_enum_bit_limit = 20;
  /// Deduplicate partite-set assignments under automorphisms of the target.
  bool use_symmetry = true;
  int jobs = 1;
};

enum class SearchStatus { kRealizable, kNotRealizable, kIndeterminate };

struct RealizabilityAnswer {
  SearchStatus status = SearchStatus::kIndeterminate;
  std::optional<BipartiteTournament> certificate;
  std::uint64_t nodes_visited = 0;
  std::uint64_t orientations_tested = 0;

  bool realizable() const { return status == SearchStatus::kRealizable; }
};

/// Decides whether h is the (1,2)-step competition graph of some bipartite
/// tournament, searching every split m+n = |V(h)| (m >= n >= 1), every
/// assignment of V(h) to the partite sets, and every orientation. Negative
/// answers are exhaustive; running out of budget yields kIndeterminate,
/// never an unverified negative. The certificate reported is the
/// lexicographically smallest (m, assignment, orientation) found.
RealizabilityAnswer is_c12_realizable(const SimpleGraph& h,
                                      const SearchBudget& budget = {});

/// All trees on `order` vertices up to isomorphism, built by leaf addition
/// with canonical-form deduplication; deterministic order.
std::vector<SimpleGraph> generate_trees(int order);

}  // namespace stepcomp
