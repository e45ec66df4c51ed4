#include "stepcomp/digraph.hpp"

#include <stdexcept>
#include <string>

namespace stepcomp {

Digraph::Digraph(int order)
    : order_(order),
      words_(bits::words_for(order)),
      out_(static_cast<std::size_t>(order) * bits::words_for(order), 0),
      in_(static_cast<std::size_t>(order) * bits::words_for(order), 0) {
  if (order < 0) throw std::invalid_argument("digraph order must be >= 0");
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= order_)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for order " +
                                std::to_string(order_));
}

void Digraph::add_arc(int tail, int head) {
  check_vertex(tail);
  check_vertex(head);
  if (tail == head) throw std::invalid_argument("loops are not allowed");
  if (!bits::test(out_row(tail), head)) {
    bits::set(mutable_out(tail), head);
    bits::set(mutable_in(head), tail);
    ++arc_count_;
  }
}

bool Digraph::has_arc(int tail, int head) const {
  check_vertex(tail);
  check_vertex(head);
  return tail != head && bits::test(out_row(tail), head);
}

std::vector<int> Digraph::out_neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  bits::for_each(out_row(v), [&](int u) { out.push_back(u); });
  return out;
}

std::vector<int> Digraph::in_neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  bits::for_each(in_row(v), [&](int u) { out.push_back(u); });
  return out;
}

int Digraph::outdegree(int v) const {
  check_vertex(v);
  return bits::popcount(out_row(v));
}

int Digraph::indegree(int v) const {
  check_vertex(v);
  return bits::popcount(in_row(v));
}

}  // namespace stepcomp
