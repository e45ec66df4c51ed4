#pragma once

#include <iosfwd>
#include <string>

#include "stepcomp/digraph.hpp"
#include "stepcomp/graph.hpp"
#include "stepcomp/tournament.hpp"

namespace stepcomp {

/// Orientation text: a header line "m n" followed by the row-major bit
/// string (length m*n of '0'/'1').
BipartiteTournament parse_tournament_text(const std::string& text);
std::string render_tournament(const BipartiteTournament& t);

/// Graph text: a header line with the order followed by "u v" edge lines.
SimpleGraph parse_graph_text(const std::string& text);
/// Digraph text: same shape, lines are arcs tail head.
Digraph parse_digraph_text(const std::string& text);

/// One "u-v" line per edge, ascending.
std::string render_edge_list(const SimpleGraph& g);

/// DOT with the two partite sets on separate ranks and directed arcs.
std::string to_dot(const BipartiteTournament& t);
/// DOT for an undirected graph.
std::string to_dot(const SimpleGraph& g);

}  // namespace stepcomp
