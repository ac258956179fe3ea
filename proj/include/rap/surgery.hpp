#pragma once

#include <vector>

#include "rap/polytope.hpp"

namespace rap {

// Edge twist: removes two disjoint edges of a common face, adds one new
// valence-4 vertex joined to their four endpoints, and re-splits the merged
// region (the face plus the two faces across the removed edges) into four
// faces. Counts change as V+1, E+2, F+1.
CombinatorialPolytope edge_twist(const CombinatorialPolytope& p, const Edge& e1,
                                 const Edge& e2);

// The twisted antiprism A_{n,k}: twist two edges of the top n-gon of A_n with
// k-2 edges between them. Valid for 3 <= k <= n/2 + 1.
CombinatorialPolytope twisted_antiprism(int n, int k);

// Glues p1 and p2 along faces f1, f2 of equal length. The matching is the
// orientation-reversing bijection sending face(f1)[i] to face(f2)[(offset - i)
// mod L]. Interface faces and interface edges disappear; the two faces across
// each interface edge merge into one (right dihedral angles sum to a straight
// angle there, so the walls become one wall).
CombinatorialPolytope glue(const CombinatorialPolytope& p1, int f1,
                           const CombinatorialPolytope& p2, int f2, int offset);

// Antiprism gluing used by the twisted-antiprism decomposition: joins A_k and
// A_m along a belt triangle of each, with the matching that merges the two
// bottom faces into an (k+m-2)-gon.
CombinatorialPolytope glue_antiprisms(int k, int m);

}  // namespace rap
