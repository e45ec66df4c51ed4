#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stepcomp/bits.hpp"

namespace stepcomp {

/// Undirected simple graph on a fixed vertex set {0, ..., order-1}.
/// Adjacency is stored as one bitset row per vertex, so neighborhood
/// intersections (triangles, common neighbors, cliques) are word operations.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int order);

  int order() const { return order_; }
  int words() const { return words_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  void clear_edges();

  int degree(int v) const;
  std::size_t edge_count() const;

  std::span<const std::uint64_t> row(int v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }
  /// Single-word adjacency row; requires order <= 64.
  std::uint64_t row64(int v) const { return adj_[v]; }

  std::vector<int> neighbors(int v) const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  friend void c12_fast_into(const class BipartiteTournament&, SimpleGraph&);
  std::span<std::uint64_t> mutable_row(int v) {
    return {adj_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }
  void check_vertex(int v) const;

  int order_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> adj_;
};

SimpleGraph complete_graph(int n);
SimpleGraph star_graph(int leaves);  // K_{1,leaves}; vertex 0 is the center
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace stepcomp
