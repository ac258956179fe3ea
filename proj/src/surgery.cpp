#include "rap/surgery.hpp"

#include <algorithm>
#include <map>

#include "rap/error.hpp"

namespace rap {

namespace {

int position_in_face(const std::vector<int>& f, int v) {
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] == v) return static_cast<int>(i);
  return -1;
}

}  // namespace

CombinatorialPolytope edge_twist(const CombinatorialPolytope& p, const Edge& e1,
                                 const Edge& e2) {
  if (!p.has_edge(e1) || !p.has_edge(e2)) throw DomainError("edge_twist: edge not in polytope");
  if (e1.touches(e2)) throw DomainError("edge_twist: edges are not disjoint");

  // Find the common face and orient the two edges along its boundary.
  auto [fa1, fb1] = *p.faces_of_edge(e1);
  auto [fa2, fb2] = *p.faces_of_edge(e2);
  int common = -1;
  for (int c1 : {fa1, fb1})
    for (int c2 : {fa2, fb2})
      if (c1 == c2) common = c1;
  if (common < 0) throw DomainError("edge_twist: edges do not lie on a common face");

  const auto& f = p.face(common);
  int m = static_cast<int>(f.size());
  // a,b and c,d consecutive along f's orientation.
  int ia = -1, ic = -1;
  for (int i = 0; i < m; ++i) {
    int u = f[i], v = f[(i + 1) % m];
    if (Edge(u, v) == e1) ia = i;
    if (Edge(u, v) == e2) ic = i;
  }
  if (ia < 0 || ic < 0) throw DomainError("edge_twist: edges not on the common face");
  int a = f[ia], b = f[(ia + 1) % m];
  int c = f[ic], d = f[(ic + 1) % m];

  int across1 = p.face_with_arc(b, a);
  int across2 = p.face_with_arc(d, c);
  if (across1 == across2)
    throw DomainError("edge_twist: the faces across the two edges coincide");

  int w = p.vertex_count();  // the new vertex

  // Arc of f from x (exclusive) to y (inclusive).
  auto f_arc = [&](int from_pos, int to_vertex) {
    std::vector<int> out;
    int i = (from_pos + 1) % m;
    while (true) {
      out.push_back(f[i]);
      if (f[i] == to_vertex) break;
      i = (i + 1) % m;
    }
    return out;
  };
  // Face g with its arc (v,u) dropped: the path u -> ... -> v through all of
  // g's vertices.
  auto splice = [&](int g, int u, int v) {
    const auto& fg = p.face(g);
    int n = static_cast<int>(fg.size());
    int iu = position_in_face(fg, u);
    std::vector<int> out;
    for (int t = 0; t < n; ++t) out.push_back(fg[(iu + t) % n]);
    if (out.back() != v) throw DomainError("edge_twist: inconsistent face orientation");
    return out;
  };

  std::vector<std::vector<int>> faces;
  for (int i = 0; i < p.face_count(); ++i)
    if (i != common && i != across1 && i != across2) faces.push_back(p.face(i));

  // Four new faces around w; each takes one boundary arc of the merged region.
  std::vector<int> f1{w};
  for (int v : f_arc(ia, c)) f1.push_back(v);  // b ... c along f
  std::vector<int> f2{w};
  for (int v : splice(across2, c, d)) f2.push_back(v);  // c ... d through the far face
  std::vector<int> f3{w};
  for (int v : f_arc(ic, a)) f3.push_back(v);  // d ... a along f
  std::vector<int> f4{w};
  for (int v : splice(across1, a, b)) f4.push_back(v);  // a ... b through the far face
  faces.push_back(f1);
  faces.push_back(f2);
  faces.push_back(f3);
  faces.push_back(f4);

  CombinatorialPolytope out(std::move(faces));
  out.validate();
  return out;
}

CombinatorialPolytope twisted_antiprism(int n, int k) {
  if (n < 4) throw DomainError("twisted_antiprism: need n >= 4");
  if (k < 3 || 2 * k > n + 2)
    throw DomainError("twisted_antiprism: k out of range 3 <= k <= n/2 + 1");
  auto a = antiprism(n);
  return edge_twist(a, Edge(0, 1), Edge(k - 1, k));
}

CombinatorialPolytope glue(const CombinatorialPolytope& p1, int f1,
                           const CombinatorialPolytope& p2, int f2, int offset) {
  if (f1 < 0 || f1 >= p1.face_count() || f2 < 0 || f2 >= p2.face_count())
    throw DomainError("glue: face index out of range");
  const auto& c1 = p1.face(f1);
  const auto& c2 = p2.face(f2);
  int L = static_cast<int>(c1.size());
  if (static_cast<int>(c2.size()) != L)
    throw DomainError("glue: interface faces have different lengths");

  // Vertex map from p2 ids into the glued id space. Interface vertices of f2
  // land on their partners in f1; the rest get fresh ids.
  std::vector<int> map2(p2.vertex_count(), -1);
  for (int i = 0; i < L; ++i) {
    int from = c2[((offset - i) % L + L) % L];
    if (map2[from] != -1) throw DomainError("glue: matching is not a bijection");
    map2[from] = c1[i];
  }
  int next = p1.vertex_count();
  for (int v = 0; v < p2.vertex_count(); ++v)
    if (map2[v] == -1) map2[v] = next++;

  // Faces across each interface edge, from both sides.
  std::map<int, std::pair<int, int>> merge_of;  // p1 face -> (p2 face, shared edge key)
  std::map<int, int> partner_u, partner_v;      // p1 face -> oriented shared arc u,v
  for (int i = 0; i < L; ++i) {
    int u = c1[i], v = c1[(i + 1) % L];
    int g1 = p1.face_with_arc(v, u);
    if (g1 == f1 || g1 < 0) throw DomainError("glue: interface face touches itself");
    // Matched arc in p2 (the matching reverses orientation, so (u,v) on f1
    // corresponds to an arc of f2 whose image is (v,u); the face across it in
    // p2 maps onto the arc (u,v)).
    int u2 = -1, v2 = -1;
    for (int w = 0; w < p2.vertex_count(); ++w) {
      if (map2[w] == u) u2 = w;
      if (map2[w] == v) v2 = w;
    }
    int g2 = p2.face_with_arc(u2, v2);
    if (g2 == f2 || g2 < 0) throw DomainError("glue: matching is not orientation-reversing");
    if (merge_of.count(g1)) throw DomainError("glue: face adjacent to two interface edges");
    for (const auto& [other1, other2] : merge_of)
      if (other2.first == g2) throw DomainError("glue: face adjacent to two interface edges");
    merge_of[g1] = {g2, 0};
    partner_u[g1] = u;
    partner_v[g1] = v;
  }

  auto splice_path = [&](const std::vector<int>& cyc, int u, int v) {
    // Path u -> ... -> v through all vertices, dropping the arc (v,u).
    int n = static_cast<int>(cyc.size());
    int iu = position_in_face(cyc, u);
    if (iu < 0) throw DomainError("glue: splice vertex missing");
    std::vector<int> out;
    for (int t = 0; t < n; ++t) out.push_back(cyc[(iu + t) % n]);
    if (out.back() != v) throw DomainError("glue: splice arc missing");
    return out;
  };

  std::vector<std::vector<int>> faces;
  std::set<int> consumed2;  // p2 faces that disappear into merges
  for (const auto& [g1, g2e] : merge_of) consumed2.insert(g2e.first);

  for (int i = 0; i < p1.face_count(); ++i) {
    if (i == f1) continue;
    auto it = merge_of.find(i);
    if (it == merge_of.end()) {
      faces.push_back(p1.face(i));
      continue;
    }
    // Merge p1 face i with its p2 partner across the shared interface edge:
    // path u..v through the p1 side, then v..u through the p2 side with the
    // duplicated endpoints dropped.
    int u = partner_u[i], v = partner_v[i];
    std::vector<int> g2cyc;
    for (int w : p2.face(it->second.first)) g2cyc.push_back(map2[w]);
    std::vector<int> merged = splice_path(p1.face(i), u, v);
    std::vector<int> other = splice_path(g2cyc, v, u);
    merged.insert(merged.end(), other.begin() + 1, other.end() - 1);
    std::set<int> uniq(merged.begin(), merged.end());
    if (uniq.size() != merged.size())
      throw DomainError("glue: merged face is not a simple cycle");
    faces.push_back(std::move(merged));
  }
  for (int i = 0; i < p2.face_count(); ++i) {
    if (i == f2 || consumed2.count(i)) continue;
    std::vector<int> f;
    for (int w : p2.face(i)) f.push_back(map2[w]);
    faces.push_back(std::move(f));
  }

  CombinatorialPolytope out(std::move(faces));
  out.validate();
  return out;
}

CombinatorialPolytope glue_antiprisms(int k, int m) {
  auto pk = antiprism(k);
  auto pm = antiprism(m);
  // Belt triangles U_0 on each side: (b_0, b_1, t_1). The matching
  // b_0 <-> b'_1, b_1 <-> b'_0, t_1 <-> t'_1 merges bottom with bottom.
  int uk = 2 + k;  // face id of U_0 in A_k
  int um = 2 + m;
  const auto& ck = pk.face(uk);  // (k, k+1, 1)
  const auto& cm = pm.face(um);  // (m, m+1, 1)
  // matching[i] pairs ck[i] with cm[(offset - i) mod 3]; we need
  // ck[0]=b_0 -> cm[1]=b'_1, ck[1]=b_1 -> cm[0]=b'_0, ck[2]=t_1 -> cm[2]=t'_1.
  (void)ck;
  (void)cm;
  return glue(pk, uk, pm, um, 1);
}

}  // namespace rap
