#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rap {

// Undirected edge, stored with a < b.
struct Edge {
  int a = -1;
  int b = -1;
  Edge() = default;
  Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}
  friend bool operator==(const Edge& x, const Edge& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator<(const Edge& x, const Edge& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
  bool touches(const Edge& o) const {
    return a == o.a || a == o.b || b == o.a || b == o.b;
  }
};

enum class VertexKind { Finite, Ideal };

// Combinatorial 3-polytope given as the oriented face complex of its boundary
// sphere. Faces are cyclic vertex sequences with a consistent global
// orientation: every directed edge (u,v) appears in exactly one face, its
// reverse (v,u) in exactly one other. Edges are always derived, never stored.
class CombinatorialPolytope {
 public:
  CombinatorialPolytope() = default;
  explicit CombinatorialPolytope(std::vector<std::vector<int>> faces);

  int vertex_count() const { return vertex_count_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<int>& face(int i) const { return faces_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }

  int valence(int v) const { return static_cast<int>(vertex_faces_[v].size()); }
  // Faces incident to vertex v, in cyclic order around v.
  const std::vector<int>& faces_at(int v) const { return vertex_faces_[v]; }
  // Neighbours of vertex v, in cyclic order (the rotation at v).
  const std::vector<int>& rotation_at(int v) const { return vertex_rotation_[v]; }

  // The two faces sharing an edge, or nullopt if the edge does not exist.
  std::optional<std::pair<int, int>> faces_of_edge(const Edge& e) const;
  // Face containing the directed edge u -> v, or -1.
  int face_with_arc(int u, int v) const;
  bool has_edge(const Edge& e) const;
  // True if faces i and j share an edge.
  bool adjacent(int i, int j) const;
  // Vertices common to faces i and j.
  std::vector<int> common_vertices(int i, int j) const;

  VertexKind vertex_kind(int v) const;

  // Structural validation: ids in range, faces simple cycles of length >= 3,
  // each directed edge used exactly once, vertex links single cycles,
  // V - E + F = 2, and the 1-skeleton 3-connected. Throws DomainError with a
  // description if anything fails. Valence is deliberately not restricted
  // here; the 3/4 rule is enforced where the geometry needs it.
  void validate() const;

  std::string to_text() const;
  static CombinatorialPolytope from_text(const std::string& text);

 private:
  void build_index();

  std::vector<std::vector<int>> faces_;
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::map<Edge, std::pair<int, int>> edge_faces_;
  std::map<std::pair<int, int>, int> arc_face_;
  std::vector<std::vector<int>> vertex_faces_;
  std::vector<std::vector<int>> vertex_rotation_;
};

// The n-antiprism: two n-gon faces joined by a belt of 2n triangles.
// Faces come out as [top, bottom, T_0..T_{n-1}, U_0..U_{n-1}] with
// top vertices 0..n-1 and bottom vertices n..2n-1.
CombinatorialPolytope antiprism(int n);

// Reference solids for checks and demos.
CombinatorialPolytope tetrahedron();
CombinatorialPolytope cube();
CombinatorialPolytope triangular_prism();
// Pyramid over an n-gon (apex valence n); useful as a high-valence specimen.
CombinatorialPolytope pyramid(int n);

std::ostream& operator<<(std::ostream& os, const CombinatorialPolytope& p);

}  // namespace rap
