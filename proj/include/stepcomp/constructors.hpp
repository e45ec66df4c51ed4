#pragma once

#include "stepcomp/realizability.hpp"
#include "stepcomp/tournament.hpp"

namespace stepcomp {

/// The 3x2 orientation whose (1,2)-step competition graph is the star
/// K_{1,4}; matrix 10/11/01.
BipartiteTournament star_witness();

/// Orientation whose (1,2)-step competition graph is K_m u K_n (m >= n,
/// n != 2). For n = 1 this is K_{m,1} with every arc into the singleton;
/// for n >= 3 it is an orientation of K_{m+n-2,2} built from two opposite
/// fans. Throws std::domain_error for n = 2, where no such orientation
/// exists.
BipartiteTournament disjoint_union_witness(int m, int n);

/// Orientation of K_{m,5} (m >= 10) whose plain competition graph is
/// K_m u K_5: the ten pairs from the 5-side each get a dedicated receiver
/// on the m-side, every other cross arc points at the 5-side.
BipartiteTournament pair_k10_k5_witness(int m);

/// Orientation of K_{|V(g)|,m} whose plain competition graph is g plus a
/// complete graph on the m fresh vertices: clique k of the cover points at
/// receiver k, everything else points away. Cover slots beyond the cover
/// are empty (all out-arcs). Validates the cover and the pairwise union
/// bound over all m slots.
BipartiteTournament cover_to_orientation(const SimpleGraph& g,
                                         const CliqueCover& cover, int m);

/// Orientation of K_{ceil(l/2),floor(l/2)} whose (1,2)-step competition
/// graph is the complete graph K_l; requires l >= 12 (std::domain_error
/// below, where no orientation works). The clique cover behind it is found
/// by search.
BipartiteTournament complete_c12_witness(int l);

/// Orientation of K_{m,n} (m >= n) attaining the minimum possible number of
/// (1,2)-step competition edges: 0 for m = n = 2 (the directed 4-cycle),
/// C(n,2) otherwise (every arc from the n-side).
BipartiteTournament min_edge_witness(int m, int n);

/// The 4x3 orientation whose (1,2)-step competition graph is connected with
/// 13 edges and diameter exactly three.
BipartiteTournament diameter_three_witness();

}  // namespace stepcomp
