#include "rap/polytope.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "rap/error.hpp"

namespace rap {

CombinatorialPolytope::CombinatorialPolytope(std::vector<std::vector<int>> faces)
    : faces_(std::move(faces)) {
  build_index();
}

void CombinatorialPolytope::build_index() {
  int max_id = -1;
  for (const auto& f : faces_)
    for (int v : f) {
      if (v < 0) throw DomainError("negative vertex id in face");
      max_id = std::max(max_id, v);
    }
  vertex_count_ = max_id + 1;

  edge_faces_.clear();
  arc_face_.clear();
  edges_.clear();
  for (int fi = 0; fi < face_count(); ++fi) {
    const auto& f = faces_[fi];
    if (f.size() < 3) throw DomainError("face with fewer than 3 vertices");
    for (size_t k = 0; k < f.size(); ++k) {
      int u = f[k];
      int v = f[(k + 1) % f.size()];
      if (u == v) throw DomainError("degenerate edge in face");
      auto [it, inserted] = arc_face_.try_emplace({u, v}, fi);
      if (!inserted)
        throw DomainError("directed edge used twice; faces are not consistently oriented");
      Edge e(u, v);
      auto ef = edge_faces_.find(e);
      if (ef == edge_faces_.end()) {
        edge_faces_[e] = {fi, -1};
      } else {
        if (ef->second.second != -1) throw DomainError("edge shared by more than two faces");
        ef->second.second = fi;
      }
    }
  }
  for (const auto& [e, ff] : edge_faces_) {
    if (ff.second == -1) throw DomainError("boundary edge: not shared by two faces");
    edges_.push_back(e);
  }

  // Rotation at each vertex: in face (..., a, v, b, ...) the successor of
  // neighbour a around v is b. The link is a single cycle iff this successor
  // map is one cyclic permutation of the neighbours.
  vertex_faces_.assign(vertex_count_, {});
  vertex_rotation_.assign(vertex_count_, {});
  std::vector<std::map<int, std::pair<int, int>>> succ(vertex_count_);  // a -> (b, face)
  for (int fi = 0; fi < face_count(); ++fi) {
    const auto& f = faces_[fi];
    int m = static_cast<int>(f.size());
    for (int k = 0; k < m; ++k) {
      int a = f[(k + m - 1) % m];
      int v = f[k];
      int b = f[(k + 1) % m];
      auto [it, inserted] = succ[v].try_emplace(a, std::make_pair(b, fi));
      if (!inserted) throw DomainError("vertex link branches; not a polyhedral sphere");
    }
  }
  for (int v = 0; v < vertex_count_; ++v) {
    if (succ[v].empty()) throw DomainError("isolated vertex id " + std::to_string(v));
    int start = succ[v].begin()->first;
    int cur = start;
    do {
      auto it = succ[v].find(cur);
      if (it == succ[v].end()) throw DomainError("vertex link is not closed");
      vertex_rotation_[v].push_back(cur);
      vertex_faces_[v].push_back(it->second.second);
      cur = it->second.first;
    } while (cur != start && vertex_rotation_[v].size() <= succ[v].size());
    if (vertex_rotation_[v].size() != succ[v].size() || cur != start)
      throw DomainError("vertex link of " + std::to_string(v) + " is not a single cycle");
  }
}

std::optional<std::pair<int, int>> CombinatorialPolytope::faces_of_edge(const Edge& e) const {
  auto it = edge_faces_.find(e);
  if (it == edge_faces_.end()) return std::nullopt;
  return it->second;
}

int CombinatorialPolytope::face_with_arc(int u, int v) const {
  auto it = arc_face_.find({u, v});
  return it == arc_face_.end() ? -1 : it->second;
}

bool CombinatorialPolytope::has_edge(const Edge& e) const {
  return edge_faces_.count(e) > 0;
}

bool CombinatorialPolytope::adjacent(int i, int j) const {
  const auto& fi = faces_[i];
  int m = static_cast<int>(fi.size());
  for (int k = 0; k < m; ++k) {
    auto ff = edge_faces_.at(Edge(fi[k], fi[(k + 1) % m]));
    if ((ff.first == i && ff.second == j) || (ff.first == j && ff.second == i)) return true;
  }
  return false;
}

std::vector<int> CombinatorialPolytope::common_vertices(int i, int j) const {
  std::set<int> a(faces_[i].begin(), faces_[i].end());
  std::vector<int> out;
  for (int v : faces_[j])
    if (a.count(v)) out.push_back(v);
  return out;
}

VertexKind CombinatorialPolytope::vertex_kind(int v) const {
  int val = valence(v);
  if (val == 3) return VertexKind::Finite;
  if (val == 4) return VertexKind::Ideal;
  throw DomainError("vertex " + std::to_string(v) + " has valence " + std::to_string(val) +
                    "; kind defined only for valence 3 or 4");
}

namespace {

// 3-connectivity of the 1-skeleton by brute force: remove every vertex pair
// and check the rest stays connected. Inputs are tiny, so O(V^2 (V+E)) is fine.
bool skeleton_3_connected(int n, const std::vector<Edge>& edges) {
  if (n < 4) return false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  auto connected_without = [&](int x, int y) {
    int start = -1;
    for (int v = 0; v < n; ++v)
      if (v != x && v != y) {
        start = v;
        break;
      }
    if (start < 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (w != x && w != y && !seen[w]) {
          seen[w] = 1;
          ++cnt;
          stack.push_back(w);
        }
    }
    return cnt == n - (x == y ? 1 : 2);
  };
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y)
      if (!connected_without(x, y)) return false;
  return true;
}

}  // namespace

void CombinatorialPolytope::validate() const {
  for (const auto& f : faces_) {
    std::set<int> s(f.begin(), f.end());
    if (s.size() != f.size()) throw DomainError("face repeats a vertex");
  }
  int v = vertex_count_, e = edge_count(), f = face_count();
  if (v - e + f != 2)
    throw DomainError("Euler relation fails: V-E+F = " + std::to_string(v - e + f));
  if (!skeleton_3_connected(v, edges_))
    throw DomainError("1-skeleton is not 3-connected");
}

std::string CombinatorialPolytope::to_text() const {
  std::ostringstream os;
  os << "polytope v1\n" << vertex_count_ << " " << face_count() << "\n";
  for (const auto& f : faces_) {
    for (size_t k = 0; k < f.size(); ++k) os << (k ? " " : "") << f[k];
    os << "\n";
  }
  return os.str();
}

CombinatorialPolytope CombinatorialPolytope::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  if (!std::getline(is, header) || header != "polytope v1")
    throw DomainError("bad polytope header (expected 'polytope v1')");
  int v = 0, f = 0;
  if (!(is >> v >> f) || v < 4 || f < 4)
    throw DomainError("bad polytope size line");
  std::string rest_of_line;
  std::getline(is, rest_of_line);
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < f; ++i) {
    std::string line;
    if (!std::getline(is, line)) throw DomainError("truncated polytope file");
    std::istringstream ls(line);
    std::vector<int> face;
    int id;
    while (ls >> id) {
      if (id < 0 || id >= v) throw DomainError("vertex id out of range in face");
      face.push_back(id);
    }
    if (face.size() < 3) throw DomainError("face with fewer than 3 vertices");
    faces.push_back(std::move(face));
  }
  CombinatorialPolytope p(std::move(faces));
  if (p.vertex_count() != v) throw DomainError("declared vertex count does not match faces");
  return p;
}

std::ostream& operator<<(std::ostream& os, const CombinatorialPolytope& p) {
  return os << p.to_text();
}

CombinatorialPolytope antiprism(int n) {
  if (n < 3) throw DomainError("antiprism needs n >= 3");
  auto t = [&](int i) { return (i % n + n) % n; };
  auto b = [&](int i) { return n + (i % n + n) % n; };
  std::vector<std::vector<int>> faces;
  std::vector<int> top, bottom;
  for (int i = 0; i < n; ++i) top.push_back(t(i));
  for (int i = n - 1; i >= 0; --i) bottom.push_back(b(i));
  faces.push_back(top);
  faces.push_back(bottom);
  for (int i = 0; i < n; ++i) faces.push_back({t(i + 1), t(i), b(i)});
  for (int i = 0; i < n; ++i) faces.push_back({b(i), b(i + 1), t(i + 1)});
  return CombinatorialPolytope(std::move(faces));
}

CombinatorialPolytope tetrahedron() {
  return CombinatorialPolytope({{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}});
}

CombinatorialPolytope cube() {
  // 0..3 bottom, 4..7 top.
  return CombinatorialPolytope({{0, 1, 2, 3},
                                {7, 6, 5, 4},
                                {1, 0, 4, 5},
                                {2, 1, 5, 6},
                                {3, 2, 6, 7},
                                {0, 3, 7, 4}});
}

CombinatorialPolytope triangular_prism() {
  return CombinatorialPolytope(
      {{0, 1, 2}, {5, 4, 3}, {1, 0, 3, 4}, {2, 1, 4, 5}, {0, 2, 5, 3}});
}

CombinatorialPolytope pyramid(int n) {
  if (n < 3) throw DomainError("pyramid needs n >= 3");
  std::vector<std::vector<int>> faces;
  std::vector<int> base;
  for (int i = 0; i < n; ++i) base.push_back(i);
  faces.push_back(base);
  for (int i = 0; i < n; ++i) faces.push_back({(i + 1) % n, i, n});
  return CombinatorialPolytope(std::move(faces));
}

}  // namespace rap
