#pragma once

#include <optional>

#include "stepcomp/digraph.hpp"
#include "stepcomp/graph.hpp"
#include "stepcomp/tournament.hpp"

namespace stepcomp {

/// Step bounds (i,j) of the generalized competition operator; both >= 1.
struct StepParams {
  int i = 1;
  int j = 1;
};

/// Why an edge is present: either a plain common out-neighbor w of both
/// endpoints, or a one-step/two-step pair — `direct_from` has the arc to w
/// and the other endpoint reaches w through `intermediate`, avoiding
/// `direct_from`.
struct EdgeWitness {
  enum class Kind { kCommonOutNeighbor, kOneTwoStep };
  Kind kind = Kind::kCommonOutNeighbor;
  int w = -1;
  int direct_from = -1;
  int intermediate = -1;
};

/// True iff a directed path of length <= limit from u to w exists after
/// deleting `forbidden` and its incident arcs. Truncated breadth-first
/// search. u and w must differ from `forbidden`.
bool bounded_distance(const Digraph& d, int forbidden, int u, int w,
                      int limit);

/// Smallest common out-neighbor of u and v, if any.
std::optional<EdgeWitness> competes(const Digraph& d, int u, int v);

/// Smallest w != u,v such that one endpoint has an arc to w and the other a
/// directed walk of length 2 to w avoiding the first endpoint. For each w
/// the direct arc from u is tried before the direct arc from v.
std::optional<EdgeWitness> one_two_competes(const Digraph& d, int u, int v);

/// Edge uv iff u and v compete (share an out-neighbor).
SimpleGraph competition_graph(const Digraph& d);

/// The (i,j)-step operator by definition: edge uv iff some w != u,v is
/// within distance i of one endpoint (in the digraph minus the other) and
/// within distance j of the other, in either role assignment. (1,1) is the
/// plain competition graph.
SimpleGraph step_competition_graph(const Digraph& d, StepParams p);

/// (1,2)-step competition graph of a bipartite tournament without any
/// search: vertices on the same side are adjacent iff their out-sets meet,
/// and a cross pair is adjacent iff each endpoint has an out-neighbor other
/// than the other endpoint.
SimpleGraph c12_fast(const BipartiteTournament& t);

/// Same, writing into a caller-owned graph of order t.order(). Lets
/// enumeration loops reuse one allocation; `out` must not be shared across
/// threads.
void c12_fast_into(const BipartiteTournament& t, SimpleGraph& out);

/// Witness for an edge of the (1,2)-step graph of t: same-side edges get a
/// common out-neighbor, cross edges a one-two-step witness. Empty iff the
/// edge is absent.
std::optional<EdgeWitness> explain_edge(const BipartiteTournament& t, int u,
                                        int v);

/// Re-validates a witness against the raw arc relation.
bool witness_valid(const Digraph& d, int u, int v, const EdgeWitness& wit);

}  // namespace stepcomp
