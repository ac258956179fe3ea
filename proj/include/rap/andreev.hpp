#pragma once

#include <string>
#include <vector>

#include "rap/polytope.hpp"

namespace rap {

// One failed realizability condition with an explicit, re-checkable witness.
struct AndreevViolation {
  int condition = 0;            // 1..4
  std::vector<int> faces;      // witness faces (conditions 1, 3, 4)
  std::vector<Edge> edges;     // witness edges (conditions 3, 4)
  int vertex = -1;             // witness vertex (condition 2)
  std::string describe() const;
};

struct AndreevVerdict {
  bool ok = false;
  std::vector<AndreevViolation> violations;
};

// Right-angled realizability of a combinatorial 3-polytope as a finite-volume
// hyperbolic polyhedron:
//   (1) not a tetrahedron and not a triangular prism;
//   (2) every vertex lies in at most four faces;
//   (3) no faces f, f', f'' with e' = f n f', e'' = f n f'' disjoint edges
//       while f' and f'' still intersect;
//   (4) no prismatic circuit of four faces whose four intersection edges are
//       pairwise disjoint.
AndreevVerdict check_andreev(const CombinatorialPolytope& p);

// Confirms that a reported violation actually violates its condition on p.
bool recheck_violation(const CombinatorialPolytope& p, const AndreevViolation& v);

}  // namespace rap
