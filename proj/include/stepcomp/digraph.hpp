#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stepcomp/bits.hpp"

namespace stepcomp {

/// Loop-free directed graph on {0, ..., order-1} with bitset adjacency in
/// both directions.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int order);

  int order() const { return order_; }
  int arc_count() const { return arc_count_; }

  void add_arc(int tail, int head);
  bool has_arc(int tail, int head) const;

  std::span<const std::uint64_t> out_row(int v) const {
    return {out_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }
  std::span<const std::uint64_t> in_row(int v) const {
    return {in_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }
  /// Single-word out-neighborhood mask; requires order <= 64.
  std::uint64_t out_mask64(int v) const { return out_[v]; }

  std::vector<int> out_neighbors(int v) const;
  std::vector<int> in_neighbors(int v) const;
  int outdegree(int v) const;
  int indegree(int v) const;

  bool operator==(const Digraph&) const = default;

 private:
  void check_vertex(int v) const;
  std::span<std::uint64_t> mutable_out(int v) {
    return {out_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }
  std::span<std::uint64_t> mutable_in(int v) {
    return {in_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  int order_ = 0;
  int words_ = 0;
  int arc_count_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

}  // namespace stepcomp
