#include "stepcomp/formats.hpp"

#include <sstream>
#include <stdexcept>

namespace stepcomp {
namespace {

std::istringstream open_text(const std::string& text) {
  return std::istringstream(text);
}

[[noreturn]] void parse_fail(const std::string& what) {
  throw std::invalid_argument("parse error: " + what);
}

}  // namespace

BipartiteTournament parse_tournament_text(const std::string& text) {
  auto in = open_text(text);
  int m = 0, n = 0;
  if (!(in >> m >> n)) parse_fail("expected header line \"m n\"");
  std::string bit_chars;
  if (!(in >> bit_chars)) parse_fail("expected a bit string after the header");
  std::string trailing;
  if (in >> trailing) parse_fail("unexpected trailing token: " + trailing);
  return BipartiteTournament::from_bit_string(m, n, bit_chars);
}

std::string render_tournament(const BipartiteTournament& t) {
  std::ostringstream out;
  out << t.m() << " " << t.n() << "\n" << t.bit_string() << "\n";
  return out.str();
}

namespace {

template <typename Insert>
int parse_pair_lines(const std::string& text, Insert insert) {
  auto in = open_text(text);
  int order = 0;
  if (!(in >> order)) parse_fail("expected an order header");
  if (order < 0) parse_fail("order must be non-negative");
  int u, v;
  while (in >> u) {
    if (!(in >> v)) parse_fail("dangling endpoint " + std::to_string(u));
    insert(u, v);
  }
  return order;
}

}  // namespace

SimpleGraph parse_graph_text(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  int order =
      parse_pair_lines(text, [&](int u, int v) { edges.emplace_back(u, v); });
  SimpleGraph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Digraph parse_digraph_text(const std::string& text) {
  auto in = open_text(text);
  int order = 0;
  if (!(in >> order)) parse_fail("expected an order header");
  Digraph d(order);
  int u, v;
  while (in >> u) {
    if (!(in >> v)) parse_fail("dangling endpoint " + std::to_string(u));
    d.add_arc(u, v);
  }
  return d;
}

std::string render_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  for (int u = 0; u < g.order(); ++u)
    bits::for_each(g.row(u), [&](int v) {
      if (u < v) out << u << "-" << v << "\n";
    });
  return out.str();
}

std::string to_dot(const BipartiteTournament& t) {
  std::ostringstream out;
  out << "digraph tournament {\n";
  out << "  rankdir=TB;\n";
  out << "  { rank=same;";
  for (int i = 0; i < t.m(); ++i) out << " x" << i << ";";
  out << " }\n";
  out << "  { rank=same;";
  for (int j = 0; j < t.n(); ++j) out << " y" << j << ";";
  out << " }\n";
  for (int i = 0; i < t.m(); ++i)
    for (int j = 0; j < t.n(); ++j) {
      if (t.bit(i, j))
        out << "  x" << i << " -> y" << j << ";\n";
      else
        out << "  y" << j << " -> x" << i << ";\n";
    }
  out << "}\n";
  return out.str();
}

std::string to_dot(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph g {\n";
  for (int v = 0; v < g.order(); ++v) out << "  v" << v << ";\n";
  for (int u = 0; u < g.order(); ++u)
    bits::for_each(g.row(u), [&](int v) {
      if (u < v) out << "  v" << u << " -- v" << v << ";\n";
    });
  out << "}\n";
  return out.str();
}

}  // namespace stepcomp
