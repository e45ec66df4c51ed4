#include "stepcomp/isomorphism.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace stepcomp {
namespace {

// Iterated neighborhood refinement. The result depends only on the graph's
// structure, never on labels, so equal colors across two graphs are a sound
// matching constraint.
std::vector<int> refined_colors(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);

  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> signature(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      sig.push_back(color[v]);
      bits::for_each(g.row(v), [&](int u) { sig.push_back(color[u]); });
      std::sort(sig.begin() + 1, sig.end());
      signature[v] = {std::move(sig), v};
    }
    std::map<std::vector<int>, int> dense;
    for (int v = 0; v < n; ++v) dense.emplace(signature[v].first, 0);
    int next = 0;
    for (auto& [sig, id] : dense) id = next++;
    std::vector<int> fresh(n);
    for (int v = 0; v < n; ++v) fresh[v] = dense[signature[v].first];
    if (fresh == color) break;
    color = std::move(fresh);
  }
  return color;
}

struct Matcher {
  const SimpleGraph& g;
  const SimpleGraph& h;
  std::vector<int> g_color, h_color;
  std::vector<int> order;        // g-vertices in branch order
  std::vector<int> map;          // g-vertex -> h-vertex or -1
  std::vector<bool> used;        // h-vertex taken
  std::vector<std::vector<int>> found;
  std::size_t limit = 1;

  bool consistent(int gv, int hv, std::size_t depth) const {
    if (g_color[gv] != h_color[hv]) return false;
    for (std::size_t k = 0; k < depth; ++k) {
      int prev = order[k];
      if (g.has_edge(gv, prev) != h.has_edge(hv, map[prev])) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order.size()) {
      found.push_back(map);
      return found.size() >= limit;
    }
    int gv = order[depth];
    for (int hv = 0; hv < h.order(); ++hv) {
      if (used[hv] || !consistent(gv, hv, depth)) continue;
      map[gv] = hv;
      used[hv] = true;
      if (search(depth + 1)) return true;
      used[hv] = false;
      map[gv] = -1;
    }
    return false;
  }
};

std::vector<std::vector<int>> match(const SimpleGraph& g, const SimpleGraph& h,
                                    std::size_t limit) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return {};
  Matcher m{g, h, refined_colors(g), refined_colors(h), {}, {}, {}, {}, limit};

  auto histogram = [](const std::vector<int>& colors) {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
  };
  if (histogram(m.g_color) != histogram(m.h_color)) return {};

  // Branch on small color classes first.
  std::vector<int> class_size(g.order() + 1, 0);
  for (int c : m.g_color) ++class_size[c];
  m.order.resize(g.order());
  std::iota(m.order.begin(), m.order.end(), 0);
  std::sort(m.order.begin(), m.order.end(), [&](int a, int b) {
    auto ka = std::pair(class_size[m.g_color[a]], a);
    auto kb = std::pair(class_size[m.g_color[b]], b);
    return ka < kb;
  });

  m.map.assign(g.order(), -1);
  m.used.assign(h.order(), false);
  m.search(0);
  return std::move(m.found);
}

}  // namespace

bool are_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  return !match(g, h, 1).empty();
}

std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& g,
                                                 const SimpleGraph& h) {
  auto maps = match(g, h, 1);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

std::vector<std::vector<int>> automorphisms(const SimpleGraph& g) {
  return match(g, g, std::numeric_limits<std::size_t>::max());
}

std::string canonical_key(const SimpleGraph& g) {
  const int n = g.order();
  if (n > 12) throw std::invalid_argument("canonical_key is capped at order 12");

  std::vector<int> color = refined_colors(g);
  // Positions grouped by color; only within-class permutations are tried,
  // which preserves invariance while pruning the n! search.
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  std::stable_sort(verts.begin(), verts.end(),
                   [&](int a, int b) { return color[a] < color[b]; });

  std::vector<std::pair<int, int>> class_ranges;
  for (int begin = 0; begin < n;) {
    int end = begin;
    while (end < n && color[verts[end]] == color[verts[begin]]) ++end;
    class_ranges.emplace_back(begin, end);
    begin = end;
  }

  std::string best;
  std::vector<int> perm = verts;  // perm[position] = original vertex
  auto encode = [&]() {
    std::string s;
    s.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        s.push_back(g.has_edge(perm[p], perm[q]) ? '1' : '0');
    return s;
  };

  // Odometer over per-class permutations.
  for (auto& [begin, end] : class_ranges)
    std::sort(perm.begin() + begin, perm.begin() + end);
  while (true) {
    std::string s = encode();
    if (best.empty() || s < best) best = std::move(s);
    int k = static_cast<int>(class_ranges.size()) - 1;
    for (; k >= 0; --k) {
      auto [begin, end] = class_ranges[k];
      if (std::next_permutation(perm.begin() + begin, perm.begin() + end))
        break;
    }
    if (k < 0) break;
  }
  return std::to_string(n) + ":" + best;
}

}  // namespace stepcomp
