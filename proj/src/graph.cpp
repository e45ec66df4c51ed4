#include "stepcomp/graph.hpp"

#include <stdexcept>
#include <string>

namespace stepcomp {

SimpleGraph::SimpleGraph(int order)
    : order_(order),
      words_(bits::words_for(order)),
      adj_(static_cast<std::size_t>(order) * bits::words_for(order), 0) {
  if (order < 0) throw std::invalid_argument("graph order must be >= 0");
}

void SimpleGraph::check_vertex(int v) const {
  if (v < 0 || v >= order_)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for order " +
                                std::to_string(order_));
}

void SimpleGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  bits::set(mutable_row(u), v);
  bits::set(mutable_row(v), u);
}

bool SimpleGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return u != v && bits::test(row(u), v);
}

void SimpleGraph::clear_edges() {
  std::fill(adj_.begin(), adj_.end(), 0);
}

int SimpleGraph::degree(int v) const {
  check_vertex(v);
  return bits::popcount(row(v));
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (int v = 0; v < order_; ++v) twice += bits::popcount(row(v));
  return twice / 2;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  bits::for_each(row(v), [&](int u) { out.push_back(u); });
  return out;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph star_graph(int leaves) {
  SimpleGraph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  SimpleGraph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g(a.order() + b.order());
  for (int u = 0; u < a.order(); ++u)
    bits::for_each(a.row(u), [&](int v) {
      if (u < v) g.add_edge(u, v);
    });
  for (int u = 0; u < b.order(); ++u)
    bits::for_each(b.row(u), [&](int v) {
      if (u < v) g.add_edge(a.order() + u, a.order() + v);
    });
  return g;
}

}  // namespace stepcomp
