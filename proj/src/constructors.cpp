#include "stepcomp/constructors.hpp"

#include <stdexcept>
#include <string>

namespace stepcomp {

BipartiteTournament star_witness() {
  return BipartiteTournament::from_bit_string(3, 2, "101101");
}

BipartiteTournament disjoint_union_witness(int m, int n) {
  if (n == 2)
    throw std::domain_error(
        "K_m u K_2 is never a (1,2)-step competition graph of a bipartite "
        "tournament: two complete components need size at least three");
  if (n < 1 || m < n)
    throw std::invalid_argument("need m >= n >= 1");

  if (n == 1) {
    // Every arc into the singleton: the m-side is a clique through the
    // common prey, the singleton is isolated.
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m), 1);
    return BipartiteTournament(m, 1, bits);
  }

  // Side 1 holds v_1..v_{m-1} then w_1..w_{n-1}; side 2 holds v (column 0)
  // and w (column 1). Arcs: v_i -> w, w -> w_i, w_i -> v, v -> v_i.
  const int rows = m + n - 2;
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(rows) * 2, 0);
  for (int i = 0; i < m - 1; ++i) bits[2 * i + 1] = 1;          // v_i -> w
  for (int i = m - 1; i < rows; ++i) bits[2 * i] = 1;           // w_i -> v
  return BipartiteTournament(rows, 2, bits);
}

BipartiteTournament pair_k10_k5_witness(int m) {
  if (m < 10) throw std::invalid_argument("need m >= 10");
  const int n = 5;
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(m) * n, 1);
  int receiver = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bits[static_cast<std::size_t>(receiver) * n + a] = 0;
      bits[static_cast<std::size_t>(receiver) * n + b] = 0;
      ++receiver;
    }
  return BipartiteTournament(m, n, bits);
}

BipartiteTournament cover_to_orientation(const SimpleGraph& g,
                                         const CliqueCover& cover, int m) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument("graph has an isolated vertex (" +
                                  std::to_string(v) + ")");
  if (m < 1) throw std::invalid_argument("need m >= 1");
  if (!cover_is_valid(g, cover))
    throw std::invalid_argument("not an edge clique cover of the graph");
  if (static_cast<int>(cover.cliques.size()) > m)
    throw std::invalid_argument("cover has more than m cliques");

  const int p = g.order();
  // Every pair of the m receiver slots needs a common out-neighbor, i.e. a
  // vertex outside both assigned cliques; slots past the cover hold the
  // empty clique.
  auto slot_size = [&](int k) {
    return k < static_cast<int>(cover.cliques.size())
               ? static_cast<int>(cover.cliques[k].size())
               : 0;
  };
  auto union_size = [&](int a, int b) {
    if (a >= static_cast<int>(cover.cliques.size())) std::swap(a, b);
    if (a >= static_cast<int>(cover.cliques.size())) return 0;
    if (b >= static_cast<int>(cover.cliques.size())) return slot_size(a);
    std::vector<bool> in(p, false);
    for (int v : cover.cliques[a]) in[v] = true;
    int total = static_cast<int>(cover.cliques[a].size());
    for (int v : cover.cliques[b])
      if (!in[v]) ++total;
    return total;
  };
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (union_size(a, b) > p - 1)
        throw std::invalid_argument(
            "cliques " + std::to_string(a) + " and " + std::to_string(b) +
            " cover at least " + std::to_string(p) +
            " vertices together, so the receiver pair cannot compete");

  std::vector<std::uint8_t> bits(static_cast<std::size_t>(p) * m, 0);
  for (std::size_t k = 0; k < cover.cliques.size(); ++k)
    for (int v : cover.cliques[k])
      bits[static_cast<std::size_t>(v) * m + k] = 1;
  return BipartiteTournament(p, m, bits);
}

BipartiteTournament complete_c12_witness(int l) {
  if (l < 12)
    throw std::domain_error(
        "K_" + std::to_string(l) +
        " is not the (1,2)-step competition graph of any bipartite "
        "tournament; only l >= 12 is attainable");
  const int m = (l + 1) / 2;
  const int n = l / 2;
  auto cover = find_clique_cover(complete_graph(n), m, n - 1);
  if (!cover)
    throw std::logic_error(
        "no qualifying clique cover of K_" + std::to_string(n) + " with " +
        std::to_string(m) + " slots; this contradicts realizability of the "
        "complete pair and indicates a bug");
  return cover_to_orientation(complete_graph(n), *cover, m);
}

BipartiteTournament min_edge_witness(int m, int n) {
  if (n < 1 || m < n) throw std::invalid_argument("need m >= n >= 1");
  if (m == 2 && n == 2)
    return BipartiteTournament::from_bit_string(2, 2, "1001");  // 4-cycle
  // Every arc from side 2: side 2 becomes a clique through its common prey,
  // side 1 is isolated. C(n,2) edges, the attainable minimum.
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(m) * n, 0);
  return BipartiteTournament(m, n, bits);
}

BipartiteTournament diameter_three_witness() {
  return BipartiteTournament::from_bit_string(4, 3, "010010101101");
}

}  // namespace stepcomp
