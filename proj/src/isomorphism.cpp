#include "rap/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "rap/error.hpp"

namespace rap {

namespace {

struct RotationSystem {
  std::vector<std::vector<int>> nbr;      // cyclic neighbour order per vertex
  std::vector<std::map<int, int>> index;  // neighbour -> position
};

RotationSystem rotation_system(const CombinatorialPolytope& p) {
  RotationSystem rs;
  rs.nbr.resize(p.vertex_count());
  rs.index.resize(p.vertex_count());
  for (int v = 0; v < p.vertex_count(); ++v) {
    rs.nbr[v] = p.rotation_at(v);
    for (size_t i = 0; i < rs.nbr[v].size(); ++i) rs.index[v][rs.nbr[v][i]] = static_cast<int>(i);
  }
  return rs;
}

// Breadth-first encoding of the rotation system starting at the directed edge
// (u, v). Every vertex's neighbours are listed starting from the neighbour it
// was discovered through, walking the rotation (mirrored or not); first visits
// mint new labels. Equal codes <=> there is a chirality-respecting isomorphism
// carrying one starting edge to the other.
std::vector<int> encode(const RotationSystem& rs, int u, int v, bool mirror,
                        std::vector<int>* labels_out) {
  int n = static_cast<int>(rs.nbr.size());
  std::vector<int> label(n, -1), entry(n, -1), order;
  order.reserve(n);
  label[u] = 0;
  entry[u] = v;
  order.push_back(u);
  std::vector<int> code;
  for (size_t head = 0; head < order.size(); ++head) {
    int x = order[head];
    int deg = static_cast<int>(rs.nbr[x].size());
    int pos = rs.index[x].at(entry[x]);
    for (int t = 0; t < deg; ++t) {
      int i = mirror ? (pos - t + deg) % deg : (pos + t) % deg;
      int w = rs.nbr[x][i];
      if (label[w] == -1) {
        label[w] = static_cast<int>(order.size());
        entry[w] = x;
        order.push_back(w);
      }
      code.push_back(label[w]);
    }
    code.push_back(-1);
  }
  if (labels_out) *labels_out = label;
  return code;
}

struct Canonical {
  std::vector<int> code;
  std::vector<int> label;  // vertex -> canonical label
};

Canonical canonical_with_labels(const CombinatorialPolytope& p) {
  RotationSystem rs = rotation_system(p);
  Canonical best;
  for (int u = 0; u < p.vertex_count(); ++u)
    for (int v : rs.nbr[u])
      for (bool mirror : {false, true}) {
        std::vector<int> label;
        std::vector<int> code = encode(rs, u, v, mirror, &label);
        if (best.code.empty() || code < best.code) {
          best.code = std::move(code);
          best.label = std::move(label);
        }
      }
  return best;
}

}  // namespace

std::vector<int> canonical_code(const CombinatorialPolytope& p) {
  return canonical_with_labels(p).code;
}

bool is_isomorphic(const CombinatorialPolytope& p1, const CombinatorialPolytope& p2) {
  if (p1.vertex_count() != p2.vertex_count() || p1.face_count() != p2.face_count() ||
      p1.edge_count() != p2.edge_count())
    return false;
  std::vector<size_t> census1, census2;
  for (const auto& f : p1.faces()) census1.push_back(f.size());
  for (const auto& f : p2.faces()) census2.push_back(f.size());
  std::sort(census1.begin(), census1.end());
  std::sort(census2.begin(), census2.end());
  if (census1 != census2) return false;
  return canonical_code(p1) == canonical_code(p2);
}

std::optional<IsomorphismWitness> isomorphism_witness(const CombinatorialPolytope& p1,
                                                      const CombinatorialPolytope& p2) {
  if (!is_isomorphic(p1, p2)) return std::nullopt;
  Canonical c1 = canonical_with_labels(p1);
  Canonical c2 = canonical_with_labels(p2);
  std::vector<int> inv2(p2.vertex_count());
  for (int v = 0; v < p2.vertex_count(); ++v) inv2[c2.label[v]] = v;
  IsomorphismWitness w;
  w.vertex_map.resize(p1.vertex_count());
  for (int v = 0; v < p1.vertex_count(); ++v) w.vertex_map[v] = inv2[c1.label[v]];

  // Faces follow the vertex bijection; in a polytope a face is determined by
  // its vertex set.
  std::map<std::set<int>, int> face_of_set;
  for (int i = 0; i < p2.face_count(); ++i)
    face_of_set[std::set<int>(p2.face(i).begin(), p2.face(i).end())] = i;
  w.face_map.resize(p1.face_count());
  for (int i = 0; i < p1.face_count(); ++i) {
    std::set<int> img;
    for (int v : p1.face(i)) img.insert(w.vertex_map[v]);
    auto it = face_of_set.find(img);
    if (it == face_of_set.end()) return std::nullopt;
    w.face_map[i] = it->second;
  }
  return w;
}

}  // namespace rap
