#include "rap/andreev.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "rap/isomorphism.hpp"

namespace rap {

namespace {

// The single edge shared by faces i and j, if any.
std::optional<Edge> shared_edge(const CombinatorialPolytope& p, int i, int j) {
  const auto& f = p.face(i);
  int m = static_cast<int>(f.size());
  for (int k = 0; k < m; ++k) {
    Edge e(f[k], f[(k + 1) % m]);
    auto ff = *p.faces_of_edge(e);
    if ((ff.first == i && ff.second == j) || (ff.first == j && ff.second == i)) return e;
  }
  return std::nullopt;
}

bool faces_intersect(const CombinatorialPolytope& p, int i, int j) {
  return !p.common_vertices(i, j).empty();
}

}  // namespace

std::string AndreevViolation::describe() const {
  std::ostringstream os;
  os << "condition " << condition;
  if (condition == 2) {
    os << ": vertex " << vertex << " lies in more than four faces";
    return os.str();
  }
  if (!faces.empty()) {
    os << ": faces";
    for (int f : faces) os << " " << f;
  }
  if (!edges.empty()) {
    os << "; edges";
    for (const auto& e : edges) os << " (" << e.a << "," << e.b << ")";
  }
  return os.str();
}

AndreevVerdict check_andreev(const CombinatorialPolytope& p) {
  AndreevVerdict out;

  // (1) excluded solids
  if (is_isomorphic(p, tetrahedron()) || is_isomorphic(p, triangular_prism())) {
    AndreevViolation v;
    v.condition = 1;
    for (int i = 0; i < p.face_count(); ++i) v.faces.push_back(i);
    out.violations.push_back(v);
  }

  // (2) vertex valence
  for (int v = 0; v < p.vertex_count(); ++v)
    if (p.valence(v) > 4) {
      AndreevViolation viol;
      viol.condition = 2;
      viol.vertex = v;
      out.violations.push_back(viol);
    }

  // (3) bad 3-circuits; first hit is enough for a witness
  int F = p.face_count();
  bool found3 = false;
  for (int f = 0; f < F && !found3; ++f)
    for (int f1 = 0; f1 < F && !found3; ++f1) {
      if (f1 == f) continue;
      auto e1 = shared_edge(p, f, f1);
      if (!e1) continue;
      for (int f2 = f1 + 1; f2 < F && !found3; ++f2) {
        if (f2 == f) continue;
        auto e2 = shared_edge(p, f, f2);
        if (!e2) continue;
        if (e1->touches(*e2)) continue;
        if (faces_intersect(p, f1, f2)) {
          AndreevViolation v;
          v.condition = 3;
          v.faces = {f, f1, f2};
          v.edges = {*e1, *e2};
          out.violations.push_back(v);
          found3 = true;
        }
      }
    }

  // (4) prismatic 4-circuits: ordered face cycles (f0,f1,f2,f3), canonical up
  // to rotation and reflection by f0 minimal and f1 < f3.
  bool found4 = false;
  for (int f0 = 0; f0 < F && !found4; ++f0)
    for (int f1 = f0 + 1; f1 < F && !found4; ++f1) {
      auto e0 = shared_edge(p, f0, f1);
      if (!e0) continue;
      for (int f2 = f0 + 1; f2 < F && !found4; ++f2) {
        if (f2 == f1) continue;
        auto e1 = shared_edge(p, f1, f2);
        if (!e1) continue;
        for (int f3 = f1 + 1; f3 < F && !found4; ++f3) {
          if (f3 == f2) continue;
          auto e2 = shared_edge(p, f2, f3);
          if (!e2) continue;
          auto e3 = shared_edge(p, f3, f0);
          if (!e3) continue;
          std::vector<Edge> es{*e0, *e1, *e2, *e3};
          bool disjoint = true;
          for (size_t a = 0; a < es.size() && disjoint; ++a)
            for (size_t b = a + 1; b < es.size() && disjoint; ++b)
              if (es[a].touches(es[b])) disjoint = false;
          if (disjoint) {
            AndreevViolation v;
            v.condition = 4;
            v.faces = {f0, f1, f2, f3};
            v.edges = es;
            out.violations.push_back(v);
            found4 = true;
          }
        }
      }
    }

  out.ok = out.violations.empty();
  return out;
}

bool recheck_violation(const CombinatorialPolytope& p, const AndreevViolation& v) {
  switch (v.condition) {
    case 1:
      return is_isomorphic(p, tetrahedron()) || is_isomorphic(p, triangular_prism());
    case 2:
      return v.vertex >= 0 && v.vertex < p.vertex_count() && p.valence(v.vertex) > 4;
    case 3: {
      if (v.faces.size() != 3 || v.edges.size() != 2) return false;
      auto e1 = shared_edge(p, v.faces[0], v.faces[1]);
      auto e2 = shared_edge(p, v.faces[0], v.faces[2]);
      if (!e1 || !e2 || !(*e1 == v.edges[0]) || !(*e2 == v.edges[1])) return false;
      if (e1->touches(*e2)) return false;
      return faces_intersect(p, v.faces[1], v.faces[2]);
    }
    case 4: {
      if (v.faces.size() != 4 || v.edges.size() != 4) return false;
      for (int i = 0; i < 4; ++i) {
        auto e = shared_edge(p, v.faces[i], v.faces[(i + 1) % 4]);
        if (!e || !(*e == v.edges[i])) return false;
      }
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          if (v.edges[a].touches(v.edges[b])) return false;
      return true;
    }
    default:
      return false;
  }
}

}  // namespace rap
