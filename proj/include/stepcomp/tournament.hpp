#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stepcomp/bits.hpp"
#include "stepcomp/digraph.hpp"

namespace stepcomp {

/// Orientation of the complete bipartite graph K_{m,n}, stored as an m x n
/// bit matrix: bit (i,j) = 1 means the arc goes from side-1 vertex i to
/// side-2 vertex j, bit (i,j) = 0 means it goes the other way.
///
/// Vertex ids in the induced digraph: side 1 is 0..m-1, side 2 is m..m+n-1.
/// The whole matrix also reads as an integer code (cell (i,j) is bit i*n+j),
/// which makes enumerating all 2^{m*n} orientations a counter increment.
class BipartiteTournament {
 public:
  static constexpr int kMaxSide = 64;

  BipartiteTournament(int m, int n, const std::vector<std::uint8_t>& bits);
  static BipartiteTournament from_bit_string(int m, int n,
                                             std::string_view bits);
  /// Requires m*n <= 64.
  static BipartiteTournament from_code(int m, int n, std::uint64_t code);

  int m() const { return m_; }
  int n() const { return n_; }
  int order() const { return m_ + n_; }

  /// True iff the arc between side-1 vertex i and side-2 vertex j points
  /// from side 1 to side 2.
  bool bit(int i, int j) const { return (rows_[i] >> j) & 1; }

  /// Out-neighborhood of side-1 vertex i, as a mask over columns 0..n-1.
  std::uint64_t row(int i) const { return rows_[i]; }
  /// Out-neighborhood of side-2 vertex j, as a mask over rows 0..m-1.
  std::uint64_t column_out(int j) const;

  int outdegree_left(int i) const { return std::popcount(rows_[i]); }
  int outdegree_right(int j) const { return std::popcount(column_out(j)); }
  /// Out-degree of a digraph vertex id (side resolved by the id).
  int outdegree(int v) const {
    return v < m_ ? outdegree_left(v) : outdegree_right(v - m_);
  }

  std::string bit_string() const;
  /// Requires m*n <= 64.
  std::uint64_t code() const;

  Digraph to_digraph() const;

  bool operator==(const BipartiteTournament& other) const;

 private:
  BipartiteTournament(int m, int n);
  static void check_sides(int m, int n);

  int m_ = 0;
  int n_ = 0;
  std::array<std::uint64_t, kMaxSide> rows_;
};

}  // namespace stepcomp
