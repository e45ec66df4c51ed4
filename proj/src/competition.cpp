#include "stepcomp/competition.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace stepcomp {
namespace {

constexpr int kUnreached = -1;

// Distances from source, truncated at `limit`, in d minus `forbidden`.
void truncated_bfs(const Digraph& d, int forbidden, int source, int limit,
                   std::vector<int>& dist) {
  dist.assign(d.order(), kUnreached);
  dist[source] = 0;
  std::vector<int> frontier{source};
  std::vector<int> next;
  for (int depth = 0; depth < limit && !frontier.empty(); ++depth) {
    next.clear();
    for (int v : frontier) {
      bits::for_each(d.out_row(v), [&](int u) {
        if (u == forbidden || dist[u] != kUnreached) return;
        dist[u] = depth + 1;
        next.push_back(u);
      });
    }
    frontier.swap(next);
  }
}

void check_pair(const Digraph& d, int u, int v) {
  if (u < 0 || u >= d.order() || v < 0 || v >= d.order())
    throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("vertices must be distinct");
}

}  // namespace

bool bounded_distance(const Digraph& d, int forbidden, int u, int w,
                      int limit) {
  if (forbidden < 0 || forbidden >= d.order())
    throw std::invalid_argument("forbidden vertex out of range");
  if (u == forbidden || w == forbidden)
    throw std::invalid_argument("endpoints must differ from the deleted vertex");
  if (u < 0 || u >= d.order() || w < 0 || w >= d.order())
    throw std::invalid_argument("vertex out of range");
  if (limit < 0) return false;
  if (u == w) return true;
  std::vector<int> dist;
  truncated_bfs(d, forbidden, u, limit, dist);
  return dist[w] != kUnreached;
}

std::optional<EdgeWitness> competes(const Digraph& d, int u, int v) {
  check_pair(d, u, v);
  auto out_u = d.out_row(u);
  auto out_v = d.out_row(v);
  for (std::size_t k = 0; k < out_u.size(); ++k) {
    std::uint64_t common = out_u[k] & out_v[k];
    if (common) {
      int w = static_cast<int>(k) * bits::kWordBits + std::countr_zero(common);
      return EdgeWitness{EdgeWitness::Kind::kCommonOutNeighbor, w, -1, -1};
    }
  }
  return std::nullopt;
}

std::optional<EdgeWitness> one_two_competes(const Digraph& d, int u, int v) {
  check_pair(d, u, v);
  // For a fixed w, an arc (a,w) plus a length-2 walk b -> x -> w with
  // x != a. In a loop-free digraph such a walk is automatically a path.
  auto walk_mid = [&](int from, int avoid, int w) {
    int mid = -1;
    bits::for_each(d.out_row(from), [&](int x) {
      if (mid >= 0 || x == avoid || x == w) return;
      if (d.has_arc(x, w)) mid = x;
    });
    return mid;
  };
  for (int w = 0; w < d.order(); ++w) {
    if (w == u || w == v) continue;
    if (d.has_arc(u, w)) {
      int mid = walk_mid(v, u, w);
      if (mid >= 0)
        return EdgeWitness{EdgeWitness::Kind::kOneTwoStep, w, u, mid};
    }
    if (d.has_arc(v, w)) {
      int mid = walk_mid(u, v, w);
      if (mid >= 0)
        return EdgeWitness{EdgeWitness::Kind::kOneTwoStep, w, v, mid};
    }
  }
  return std::nullopt;
}

SimpleGraph competition_graph(const Digraph& d) {
  SimpleGraph g(d.order());
  for (int u = 0; u < d.order(); ++u)
    for (int v = u + 1; v < d.order(); ++v)
      if (bits::intersects(d.out_row(u), d.out_row(v))) g.add_edge(u, v);
  return g;
}

SimpleGraph step_competition_graph(const Digraph& d, StepParams p) {
  if (p.i < 1 || p.j < 1)
    throw std::invalid_argument("step parameters must be positive");
  const int n = d.order();
  SimpleGraph g(n);
  const int limit = std::max(p.i, p.j);
  std::vector<int> dist_u, dist_v;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      // One truncated search from u in d-v serves every candidate w, and
      // symmetrically from v in d-u.
      truncated_bfs(d, v, u, limit, dist_u);
      truncated_bfs(d, u, v, limit, dist_v);
      for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        int du = dist_u[w], dv = dist_v[w];
        if (du == kUnreached || dv == kUnreached) continue;
        if ((du <= p.i && dv <= p.j) || (dv <= p.i && du <= p.j)) {
          g.add_edge(u, v);
          break;
        }
      }
    }
  }
  return g;
}

void c12_fast_into(const BipartiteTournament& t, SimpleGraph& out) {
  const int m = t.m();
  const int n = t.n();
  if (out.order() != m + n)
    throw std::invalid_argument("output graph has the wrong order");
  out.clear_edges();

  std::uint64_t rows[BipartiteTournament::kMaxSide];
  std::uint64_t cols[BipartiteTournament::kMaxSide];
  for (int i = 0; i < m; ++i) rows[i] = t.row(i);
  for (int j = 0; j < n; ++j) cols[j] = t.column_out(j);

  auto link = [&](int a, int b) {
    bits::set(out.mutable_row(a), b);
    bits::set(out.mutable_row(b), a);
  };

  // Same side: adjacent iff the out-sets intersect (they compete).
  for (int i = 0; i < m; ++i)
    for (int i2 = i + 1; i2 < m; ++i2)
      if (rows[i] & rows[i2]) link(i, i2);
  for (int j = 0; j < n; ++j)
    for (int j2 = j + 1; j2 < n; ++j2)
      if (cols[j] & cols[j2]) link(m + j, m + j2);

  // Cross pairs: adjacent iff each endpoint has an out-neighbor other than
  // the other endpoint.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if ((rows[i] & ~(std::uint64_t{1} << j)) &&
          (cols[j] & ~(std::uint64_t{1} << i)))
        link(i, m + j);
}

SimpleGraph c12_fast(const BipartiteTournament& t) {
  SimpleGraph g(t.order());
  c12_fast_into(t, g);
  return g;
}

std::optional<EdgeWitness> explain_edge(const BipartiteTournament& t, int u,
                                        int v) {
  if (u < 0 || u >= t.order() || v < 0 || v >= t.order())
    throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("vertices must be distinct");
  SimpleGraph g = c12_fast(t);
  if (!g.has_edge(u, v)) return std::nullopt;
  Digraph d = t.to_digraph();
  const bool same_side = (u < t.m()) == (v < t.m());
  return same_side ? competes(d, u, v) : one_two_competes(d, u, v);
}

bool witness_valid(const Digraph& d, int u, int v, const EdgeWitness& wit) {
  if (wit.w < 0 || wit.w >= d.order() || wit.w == u || wit.w == v)
    return false;
  if (wit.kind == EdgeWitness::Kind::kCommonOutNeighbor)
    return d.has_arc(u, wit.w) && d.has_arc(v, wit.w);
  if (wit.direct_from != u && wit.direct_from != v) return false;
  const int walker = wit.direct_from == u ? v : u;
  const int mid = wit.intermediate;
  if (mid < 0 || mid >= d.order() || mid == wit.direct_from) return false;
  return d.has_arc(wit.direct_from, wit.w) && d.has_arc(walker, mid) &&
         d.has_arc(mid, wit.w);
}

}  // namespace stepcomp
