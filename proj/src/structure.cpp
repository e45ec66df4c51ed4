#include "stepcomp/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace stepcomp {
namespace {

// Masked breadth-first search; `allowed` restricts the reachable set.
// Returns eccentricity of source within its reachable part and fills
// `visited`.
int bfs_eccentricity(const SimpleGraph& g, int source,
                     std::span<const std::uint64_t> allowed,
                     std::vector<std::uint64_t>& visited) {
  const int words = g.words();
  visited.assign(words, 0);
  std::vector<std::uint64_t> frontier(words, 0);
  bits::set(frontier, source);
  bits::set(visited, source);
  int depth = 0;
  while (true) {
    std::vector<std::uint64_t> next(words, 0);
    bits::for_each(frontier, [&](int v) {
      auto row = g.row(v);
      for (int k = 0; k < words; ++k) next[k] |= row[k];
    });
    bool grew = false;
    for (int k = 0; k < words; ++k) {
      next[k] &= allowed[k] & ~visited[k];
      if (next[k]) grew = true;
      visited[k] |= next[k];
    }
    if (!grew) return depth;
    frontier.swap(next);
    ++depth;
  }
}

}  // namespace

std::vector<std::vector<int>> components(const SimpleGraph& g) {
  const int n = g.order();
  const int words = g.words();
  std::vector<std::uint64_t> seen(words, 0);
  std::vector<std::uint64_t> all(words, 0);
  for (int v = 0; v < n; ++v) bits::set(all, v);

  std::vector<std::vector<int>> comps;
  std::vector<std::uint64_t> reached;
  for (int v = 0; v < n; ++v) {
    if (bits::test(seen, v)) continue;
    bfs_eccentricity(g, v, all, reached);
    std::vector<int> comp;
    bits::for_each(reached, [&](int u) { comp.push_back(u); });
    for (int k = 0; k < words; ++k) seen[k] |= reached[k];
    comps.push_back(std::move(comp));
  }
  return comps;
}

int diameter(const SimpleGraph& g, std::span<const int> component) {
  if (component.empty())
    throw std::invalid_argument("diameter of an empty vertex set");
  const int words = g.words();
  std::vector<std::uint64_t> allowed(words, 0);
  for (int v : component) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("component vertex out of range");
    bits::set(allowed, v);
  }
  std::vector<std::uint64_t> visited;
  int best = 0;
  for (int v : component) {
    best = std::max(best, bfs_eccentricity(g, v, allowed, visited));
    if (bits::popcount(visited) != static_cast<int>(component.size()))
      throw std::invalid_argument("vertex set is not connected");
  }
  return best;
}

bool is_complete(const SimpleGraph& g, std::span<const int> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (!g.has_edge(vertices[a], vertices[b])) return false;
  return true;
}

ComponentShape classify_shape(const SimpleGraph& g) {
  ComponentShape shape;
  auto comps = components(g);
  shape.component_sizes.reserve(comps.size());
  int nontrivial = 0;
  const std::vector<int>* the_nontrivial = nullptr;
  for (const auto& comp : comps) {
    shape.component_sizes.push_back(static_cast<int>(comp.size()));
    if (comp.size() >= 2) {
      ++nontrivial;
      the_nontrivial = &comp;
    }
  }
  std::sort(shape.component_sizes.rbegin(), shape.component_sizes.rend());

  if (nontrivial == 0) {
    shape.classification = ShapeClass::kAllTrivial;
  } else if (nontrivial == 1) {
    shape.classification = ShapeClass::kOneNontrivial;
    shape.nontrivial_diameter = diameter(g, *the_nontrivial);
  } else if (comps.size() == 2 && comps[0].size() >= 3 &&
             comps[1].size() >= 3 && is_complete(g, comps[0]) &&
             is_complete(g, comps[1])) {
    shape.classification = ShapeClass::kTwoCompleteMinThree;
    shape.nontrivial_diameter = 1;
  } else {
    shape.classification = ShapeClass::kViolation;
  }
  return shape;
}

bool has_triangle(const SimpleGraph& g) {
  for (int u = 0; u < g.order(); ++u) {
    auto row_u = g.row(u);
    bool found = false;
    bits::for_each(row_u, [&](int v) {
      if (found || v <= u) return;
      if (bits::intersects(row_u, g.row(v))) found = true;
    });
    if (found) return true;
  }
  return false;
}

bool has_edge_sharing_triangles(const SimpleGraph& g) {
  for (int u = 0; u < g.order(); ++u) {
    auto row_u = g.row(u);
    bool found = false;
    bits::for_each(row_u, [&](int v) {
      if (found || v <= u) return;
      auto row_v = g.row(v);
      int common = 0;
      for (std::size_t k = 0; k < row_u.size(); ++k)
        common += std::popcount(row_u[k] & row_v[k]);
      if (common >= 2) found = true;
    });
    if (found) return true;
  }
  return false;
}

bool has_edge_sharing_cycles(const SimpleGraph& g) {
  // Hopcroft-Tarjan block decomposition; a block with more edges than
  // vertices carries two cycles through one of its edges.
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::pair<int, int>> edge_stack;
  int timer = 0;
  bool found = false;

  auto inspect_block = [&](std::size_t from) {
    std::vector<int> verts;
    std::size_t edges = edge_stack.size() - from;
    for (std::size_t k = from; k < edge_stack.size(); ++k) {
      verts.push_back(edge_stack[k].first);
      verts.push_back(edge_stack[k].second);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (edges > verts.size()) found = true;
    edge_stack.resize(from);
  };

  // Iterative DFS; per-vertex neighbor cursor.
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<std::size_t> edge_mark(n, 0);  // stack depth when v was entered

  for (int root = 0; root < n && !found; ++root) {
    if (disc[root] != -1) continue;
    std::vector<int> stack{root};
    disc[root] = low[root] = timer++;
    edge_mark[root] = edge_stack.size();
    while (!stack.empty() && !found) {
      int v = stack.back();
      if (cursor[v] < adj[v].size()) {
        int u = adj[v][cursor[v]++];
        if (u == parent[v]) continue;
        if (disc[u] == -1) {
          parent[u] = v;
          disc[u] = low[u] = timer++;
          edge_mark[u] = edge_stack.size();
          edge_stack.emplace_back(v, u);
          stack.push_back(u);
        } else if (disc[u] < disc[v]) {
          edge_stack.emplace_back(v, u);
          low[v] = std::min(low[v], disc[u]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back();
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) inspect_block(edge_mark[v]);
        }
      }
    }
  }
  return found;
}

bool is_connected(const SimpleGraph& g) {
  if (g.order() == 0) return true;
  return components(g).size() == 1;
}

bool is_tree(const SimpleGraph& g) {
  return is_connected(g) &&
         g.edge_count() == static_cast<std::size_t>(g.order()) - 1;
}

bool is_unicyclic(const SimpleGraph& g) {
  return is_connected(g) &&
         g.edge_count() == static_cast<std::size_t>(g.order());
}

int max_degree(const SimpleGraph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

}  // namespace stepcomp
