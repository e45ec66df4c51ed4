#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stepcomp/graph.hpp"

namespace stepcomp {

enum class ShapeClass {
  kAllTrivial,         // every component is a single vertex
  kOneNontrivial,      // exactly one component has >= 2 vertices
  kTwoCompleteMinThree,  // exactly two components, both complete, size >= 3
  kViolation,
};

struct ComponentShape {
  ShapeClass classification = ShapeClass::kAllTrivial;
  std::vector<int> component_sizes;  // descending
  std::optional<int> nontrivial_diameter;
};

/// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<int>> components(const SimpleGraph& g);

/// Longest shortest path within `component`, which must be a connected set
/// of vertices; 0 for a singleton.
int diameter(const SimpleGraph& g, std::span<const int> component);

ComponentShape classify_shape(const SimpleGraph& g);

bool has_triangle(const SimpleGraph& g);

/// Two distinct triangles with a common edge, i.e. some edge in >= 2
/// triangles.
bool has_edge_sharing_triangles(const SimpleGraph& g);

/// Two distinct cycles with a common edge. A connected graph has all cycles
/// edge-disjoint exactly when every biconnected block is a single edge or a
/// single cycle, so the test is |E| > |V| on some block.
bool has_edge_sharing_cycles(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);
bool is_tree(const SimpleGraph& g);
bool is_unicyclic(const SimpleGraph& g);
bool is_complete(const SimpleGraph& g, std::span<const int> vertices);
int max_degree(const SimpleGraph& g);

}  // namespace stepcomp
