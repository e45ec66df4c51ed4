#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stepcomp/graph.hpp"

namespace stepcomp {

/// Edge-preserving bijection test via degree/neighborhood color refinement
/// followed by backtracking over color-consistent candidate maps. Intended
/// for small graphs (order <= 16 or so).
bool are_isomorphic(const SimpleGraph& g, const SimpleGraph& h);

/// The mapping found, as map[g-vertex] = h-vertex.
std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& g,
                                                 const SimpleGraph& h);

/// Every automorphism of g, including the identity.
std::vector<std::vector<int>> automorphisms(const SimpleGraph& g);

/// Exact canonical form: minimum adjacency encoding over all relabelings
/// that respect the refined color classes. Equal keys iff isomorphic.
/// Factorial in the largest color class; capped at order 12.
std::string canonical_key(const SimpleGraph& g);

}  // namespace stepcomp
