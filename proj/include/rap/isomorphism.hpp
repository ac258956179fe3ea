#pragma once

#include <optional>
#include <vector>

#include "rap/polytope.hpp"

namespace rap {

// Combinatorial equivalence of oriented face complexes, allowing orientation
// reversal. The canonical form is the lexicographically smallest breadth-first
// encoding of the rotation system over all starting directed edges and both
// chiralities; two polytopes are isomorphic iff their canonical codes match.
std::vector<int> canonical_code(const CombinatorialPolytope& p);

struct IsomorphismWitness {
  std::vector<int> vertex_map;  // vertex of p1 -> vertex of p2
  std::vector<int> face_map;    // face of p1 -> face of p2
};

bool is_isomorphic(const CombinatorialPolytope& p1, const CombinatorialPolytope& p2);

// As above, also producing an incidence-preserving vertex/face bijection.
std::optional<IsomorphismWitness> isomorphism_witness(const CombinatorialPolytope& p1,
                                                      const CombinatorialPolytope& p2);

}  // namespace rap
