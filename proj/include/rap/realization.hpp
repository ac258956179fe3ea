#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rap/lorentz.hpp"
#include "rap/polytope.hpp"

namespace rap {

struct SolverConfig {
  double tolerance = 1e-10;   // max constraint violation accepted
  int max_iterations = 200;   // Newton iterations per attempt
  std::uint64_t seed = 0;     // seeds the initial-guess jitter on restarts
};

// Geometric realization of an all-ideal right-angled polytope: one unit
// spacelike normal per face, one lightlike ray per (ideal) vertex, each ray
// normalized to x0 = 1.
struct Realization {
  std::vector<LorentzVec> normals;      // per face
  std::vector<LorentzVec> vertex_rays;  // per vertex
  double residual = 0;                  // max constraint violation at the solution
};

// Per-constraint-class maxima, recomputed independently of the solver.
struct ResidualReport {
  double unit_norm = 0;        // | (e_i,e_i) - 1 |
  double adjacency = 0;        // | (e_i,e_j) | over edges
  double vertex_incidence = 0; // | (v,e) | over incidences
  double vertex_lightlike = 0; // | (v,v) |
  double tangency = 0;         // | (e_i,e_j) + 1 | over opposite pairs at a vertex
  double overall() const;
};

// Solves the right-angled ideal constraint system by damped Gauss-Newton on
// the stacked residual (unit norms, edge orthogonality, vertex incidence and
// lightlikeness, tangency of the two opposite face pairs at each vertex).
// Gauge: the first face's normal is pinned to (0,0,0,1), its first neighbour's
// to (0,0,1,0), and vertex ray 0 gets non-negative x1 by a final reflection.
// The initial guess embeds the face-adjacency graph on the sphere (Tutte
// embedding of the polar graph, stereographically lifted and Moebius-centred);
// failed attempts restart with seeded jitter, up to 5 times.
// Preconditions: check_andreev(p).ok and every vertex of valence 4.
Realization realize_ideal_right_angled(const CombinatorialPolytope& p,
                                       const SolverConfig& cfg = {});

// Recomputes every constraint class from scratch; never mutates.
ResidualReport validate_realization(const CombinatorialPolytope& p, const Realization& r);

// The two face pairs meeting at a 4-valent vertex without sharing an edge.
std::vector<std::pair<int, int>> tangent_pairs_at(const CombinatorialPolytope& p, int v);

std::string realization_to_text(const Realization& r);
Realization realization_from_text(const std::string& text);

}  // namespace rap
