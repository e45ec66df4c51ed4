#include "stepcomp/realizability.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "stepcomp/competition.hpp"
#include "stepcomp/isomorphism.hpp"

namespace stepcomp {
namespace {

void require_no_isolated(const SimpleGraph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument("graph has an isolated vertex (" +
                                  std::to_string(v) + ")");
}

// All cliques containing `base`, grown by common neighbors with ids above
// the last added vertex so each clique appears once. Sizes capped.
void cliques_through(const SimpleGraph& g, std::uint64_t base, int min_next,
                     std::uint64_t common, int max_size,
                     std::vector<std::uint64_t>& out) {
  out.push_back(base);
  if (std::popcount(base) >= max_size) return;
  std::uint64_t candidates = common & ~bits::low_mask(min_next);
  bits::for_each_word(candidates, [&](int v) {
    cliques_through(g, base | (std::uint64_t{1} << v), v + 1,
                    common & g.row64(v), max_size, out);
  });
}

struct CoverSearch {
  const SimpleGraph& g;
  int max_cliques;
  int union_bound;
  std::vector<std::uint64_t> chosen;
  std::vector<std::uint64_t> covered;  // per-vertex covered-adjacency mask
  std::size_t uncovered_edges = 0;

  bool first_uncovered(int& u, int& v) const {
    for (int a = 0; a < g.order(); ++a) {
      std::uint64_t rest = g.row64(a) & ~covered[a] & ~bits::low_mask(a + 1);
      if (rest) {
        u = a;
        v = std::countr_zero(rest);
        return true;
      }
    }
    return false;
  }

  void mark_covered(std::uint64_t clique) {
    bits::for_each_word(clique, [&](int a) {
      std::uint64_t others = clique & ~(std::uint64_t{1} << a);
      std::uint64_t fresh = others & g.row64(a) & ~covered[a];
      uncovered_edges -= std::popcount(fresh & ~bits::low_mask(a + 1));
      covered[a] |= others;
    });
  }

  bool solve() {
    int u, v;
    if (!first_uncovered(u, v)) return true;
    if (static_cast<int>(chosen.size()) >= max_cliques) return false;

    // Coarse bound: each remaining clique covers at most C(s,2) edges.
    const std::size_t slots = max_cliques - chosen.size();
    const std::size_t per_clique =
        static_cast<std::size_t>(union_bound) * (union_bound - 1) / 2;
    if (uncovered_edges > slots * per_clique) return false;

    std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    std::vector<std::uint64_t> candidates;
    cliques_through(g, pair, 0, g.row64(u) & g.row64(v), union_bound,
                    candidates);
    std::sort(candidates.begin(), candidates.end(),
              [](std::uint64_t a, std::uint64_t b) {
                int pa = std::popcount(a), pb = std::popcount(b);
                return pa != pb ? pa > pb : a < b;
              });

    for (std::uint64_t clique : candidates) {
      bool compatible = std::popcount(clique) <= union_bound;
      for (std::uint64_t other : chosen) {
        if (!compatible) break;
        if (std::popcount(clique | other) > union_bound) compatible = false;
      }
      if (!compatible) continue;

      auto saved_covered = covered;
      auto saved_uncovered = uncovered_edges;
      mark_covered(clique);
      chosen.push_back(clique);
      if (solve()) return true;
      chosen.pop_back();
      covered = std::move(saved_covered);
      uncovered_edges = saved_uncovered;
    }
    return false;
  }
};

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  bits::for_each_word(mask, [&](int v) { out.push_back(v); });
  return out;
}

}  // namespace

bool cover_is_valid(const SimpleGraph& g, const CliqueCover& cover) {
  if (cover.base_order != g.order()) return false;
  SimpleGraph seen(g.order());
  for (const auto& clique : cover.cliques) {
    for (std::size_t a = 0; a < clique.size(); ++a) {
      if (clique[a] < 0 || clique[a] >= g.order()) return false;
      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        if (clique[a] == clique[b] || !g.has_edge(clique[a], clique[b]))
          return false;
        seen.add_edge(clique[a], clique[b]);
      }
    }
  }
  return seen.edge_count() == g.edge_count();
}

std::optional<CliqueCover> find_clique_cover(const SimpleGraph& g,
                                             int max_cliques,
                                             int union_bound) {
  require_no_isolated(g);
  if (g.order() > 64)
    throw std::invalid_argument("cover search supports order <= 64");
  if (max_cliques < 0 || union_bound < 0)
    throw std::invalid_argument("bounds must be non-negative");

  CoverSearch search{g, max_cliques, union_bound, {}, {}, g.edge_count()};
  search.covered.assign(g.order(), 0);
  if (!search.solve()) return std::nullopt;

  CliqueCover cover;
  cover.base_order = g.order();
  for (std::uint64_t clique : search.chosen)
    cover.cliques.push_back(mask_to_vertices(clique));
  return cover;
}

std::optional<CliqueCover> is_competition_realizable_pair(const SimpleGraph& g,
                                                          int m) {
  return find_clique_cover(g, m, g.order() - 1);
}

namespace {

// Target graph with subset vertices first (sorted), the rest after.
SimpleGraph relabel_for_subset(const SimpleGraph& h, std::uint64_t subset) {
  std::vector<int> order = mask_to_vertices(subset);
  std::uint64_t rest = ~subset & bits::low_mask(h.order());
  for (int v : mask_to_vertices(rest)) order.push_back(v);
  std::vector<int> position(h.order());
  for (int p = 0; p < h.order(); ++p) position[order[p]] = p;

  SimpleGraph target(h.order());
  for (int u = 0; u < h.order(); ++u)
    bits::for_each(h.row(u), [&](int v) {
      if (u < v) target.add_edge(position[u], position[v]);
    });
  return target;
}

struct SubsetOutcome {
  std::optional<BipartiteTournament> certificate;
  std::uint64_t nodes = 0;
  std::uint64_t orientations = 0;
  bool budget_hit = false;
};

// Exhausts one partite assignment. Full code enumeration for small
// matrices; otherwise row-by-row backtracking fixing the most significant
// row first, so in both modes the first hit is the minimum-code orientation.
SubsetOutcome search_subset(const SimpleGraph& target, int m, int n,
                            const SearchBudget& budget,
                            std::uint64_t orientation_allowance,
                            std::uint64_t node_allowance) {
  SubsetOutcome out;
  SimpleGraph scratch(m + n);
  const int bits_total = m * n;

  if (bits_total <= budget.full_enum_bit_limit && bits_total < 63) {
    const std::uint64_t total = std::uint64_t{1} << bits_total;
    for (std::uint64_t code = 0; code < total; ++code) {
      if (out.orientations >= orientation_allowance) {
        out.budget_hit = true;
        return out;
      }
      ++out.orientations;
      BipartiteTournament t = BipartiteTournament::from_code(m, n, code);
      c12_fast_into(t, scratch);
      if (scratch == target) {
        out.certificate = t;
        return out;
      }
    }
    return out;
  }

  // Partial consistency while backtracking: same-side adjacency between
  // fixed rows is already determined, and a row whose out-set minus one
  // column is empty forbids that cross edge. Out-degree zero forces
  // isolation.
  std::vector<std::uint64_t> rows(m, 0);
  const std::uint64_t row_cap = std::uint64_t{1} << n;

  struct Frame {
    int i;
    std::uint64_t next_row;
  };
  std::vector<Frame> stack{{m - 1, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_row >= row_cap) {
      stack.pop_back();
      continue;
    }
    ++out.nodes;
    if (out.nodes >= node_allowance ||
        out.orientations >= orientation_allowance) {
      out.budget_hit = true;
      return out;
    }
    const int i = f.i;
    const std::uint64_t row = f.next_row++;

    if (row == 0 && target.degree(i) != 0) continue;
    bool ok = true;
    for (int i2 = i + 1; i2 < m && ok; ++i2)
      if (((row & rows[i2]) != 0) != target.has_edge(i, i2)) ok = false;
    for (int j = 0; j < n && ok; ++j)
      if ((row & ~(std::uint64_t{1} << j)) == 0 && target.has_edge(i, m + j))
        ok = false;
    if (!ok) continue;

    rows[i] = row;
    if (i == 0) {
      ++out.orientations;
      std::vector<std::uint8_t> flat;
      flat.reserve(static_cast<std::size_t>(m) * n);
      for (int r = 0; r < m; ++r)
        for (int j = 0; j < n; ++j) flat.push_back((rows[r] >> j) & 1);
      BipartiteTournament t(m, n, flat);
      c12_fast_into(t, scratch);
      if (scratch == target) {
        out.certificate = t;
        return out;
      }
    } else {
      stack.push_back({i - 1, 0});
    }
  }
  return out;
}

}  // namespace

RealizabilityAnswer is_c12_realizable(const SimpleGraph& h,
                                      const SearchBudget& budget) {
  RealizabilityAnswer answer;
  const int l = h.order();
  if (l < 2) {
    // No bipartite tournament has fewer than two vertices.
    answer.status = SearchStatus::kNotRealizable;
    return answer;
  }
  if (l > 24)
    throw std::invalid_argument(
        "realizability search supports order <= 24");

  std::vector<std::vector<int>> autos;
  if (budget.use_symmetry) autos = automorphisms(h);
  const std::uint64_t full = bits::low_mask(l);
  auto orbit_canonical = [&](std::uint64_t subset, bool allow_swap) {
    std::uint64_t best = subset;
    for (const auto& perm : autos) {
      std::uint64_t image = 0;
      bits::for_each_word(subset,
                          [&](int v) { image |= std::uint64_t{1} << perm[v]; });
      best = std::min(best, image);
      if (allow_swap) best = std::min(best, ~image & full);
    }
    return best;
  };

  bool any_budget_hit = false;
  for (int m = (l + 1) / 2; m <= l - 1 && !any_budget_hit; ++m) {
    const int n = l - m;
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t subset = 0; subset <= full; ++subset) {
      if (std::popcount(subset) != m) continue;
      if (budget.use_symmetry && orbit_canonical(subset, m == n) != subset)
        continue;
      subsets.push_back(subset);
    }

    std::vector<SimpleGraph> targets(subsets.size());
    for (std::size_t k = 0; k < subsets.size(); ++k)
      targets[k] = relabel_for_subset(h, subsets[k]);
    std::vector<SubsetOutcome> outcomes(subsets.size());

    const int jobs = std::max(1, budget.jobs);
    if (jobs == 1) {
      for (std::size_t k = 0; k < subsets.size(); ++k) {
        std::uint64_t orient_left =
            budget.max_orientations > answer.orientations_tested
                ? budget.max_orientations - answer.orientations_tested
                : 0;
        std::uint64_t nodes_left = budget.max_nodes > answer.nodes_visited
                                       ? budget.max_nodes - answer.nodes_visited
                                       : 0;
        outcomes[k] =
            search_subset(targets[k], m, n, budget, orient_left, nodes_left);
        answer.orientations_tested += outcomes[k].orientations;
        answer.nodes_visited += outcomes[k].nodes + 1;
        if (outcomes[k].certificate || outcomes[k].budget_hit) break;
      }
    } else {
      // Each assignment draws on the balance remaining at the start of this
      // split, so the outcome set is independent of thread scheduling.
      const std::uint64_t orient_left =
          budget.max_orientations > answer.orientations_tested
              ? budget.max_orientations - answer.orientations_tested
              : 0;
      const std::uint64_t nodes_left =
          budget.max_nodes > answer.nodes_visited
              ? budget.max_nodes - answer.nodes_visited
              : 0;
      auto worker = [&](int tid) {
        for (std::size_t k = tid; k < subsets.size();
             k += static_cast<std::size_t>(jobs))
          outcomes[k] =
              search_subset(targets[k], m, n, budget, orient_left, nodes_left);
      };
      std::vector<std::thread> pool;
      pool.reserve(jobs);
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
      for (auto& t : pool) t.join();
      for (const auto& outcome : outcomes) {
        answer.orientations_tested += outcome.orientations;
        answer.nodes_visited += outcome.nodes + 1;
      }
    }

    // First certificate in (m, assignment, orientation) order wins,
    // independent of completion order: assignments are scanned ascending and
    // each task reports its own minimum-code hit.
    for (std::size_t k = 0; k < subsets.size(); ++k) {
      if (!outcomes[k].certificate) continue;
      answer.status = SearchStatus::kRealizable;
      answer.certificate = outcomes[k].certificate;
      return answer;
    }
    for (const auto& outcome : outcomes) any_budget_hit |= outcome.budget_hit;
  }

  answer.status = any_budget_hit ? SearchStatus::kIndeterminate
                                 : SearchStatus::kNotRealizable;
  return answer;
}

std::vector<SimpleGraph> generate_trees(int order) {
  if (order < 1) throw std::invalid_argument("tree order must be >= 1");
  std::vector<SimpleGraph> current{SimpleGraph(1)};
  for (int size = 2; size <= order; ++size) {
    std::vector<SimpleGraph> grown;
    std::map<std::string, bool> seen;
    for (const auto& tree : current) {
      for (int attach = 0; attach < tree.order(); ++attach) {
        SimpleGraph bigger(size);
        for (int u = 0; u < tree.order(); ++u)
          bits::for_each(tree.row(u), [&](int v) {
            if (u < v) bigger.add_edge(u, v);
          });
        bigger.add_edge(attach, size - 1);
        if (seen.emplace(canonical_key(bigger), true).second)
          grown.push_back(std::move(bigger));
      }
    }
    current = std::move(grown);
  }
  return current;
}

}  // namespace stepcomp
