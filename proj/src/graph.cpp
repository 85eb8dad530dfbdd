#include "unbent/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace unbent {

const char* errc_name(errc c) {
  switch (c) {
    case errc::degree_exceeded: return "DegreeExceeded";
    case errc::inconsistent_rotation: return "InconsistentRotation";
    case errc::disconnected: return "Disconnected";
    case errc::parse_error: return "ParseError";
    case errc::malformed_network: return "MalformedNetwork";
    case errc::not_a_forest: return "NotAForest";
    case errc::not_a_partition: return "NotAPartition";
    case errc::density_too_high: return "DensityTooHigh";
    case errc::too_large: return "TooLarge";
    case errc::not_cubic: return "NotCubic";
    case errc::not_triconnected: return "NotTriconnected";
    case errc::strategy_inapplicable: return "StrategyInapplicable";
    case errc::placement_failed: return "PlacementFailed";
    case errc::bad_argument: return "BadArgument";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

int RotationSystem::rot_index(VertexId v, EdgeId e) const {
  const auto& r = rotation[v];
  for (int i = 0; i < static_cast<int>(r.size()); ++i)
    if (r[i] == e) return i;
  fail(errc::inconsistent_rotation,
       "edge " + std::to_string(e) + " not in rotation of vertex " + std::to_string(v));
}

// The face left of d continues along the rotation predecessor at head(d);
// with CCW rotations this walks inner faces counter-clockwise.
Dart RotationSystem::next_in_face(Dart d) const {
  VertexId v = head(d);
  int i = rot_index(v, dart_edge(d));
  int deg = degree(v);
  EdgeId e = rotation[v][(i + deg - 1) % deg];
  return dart_from(v, e);
}

Dart RotationSystem::prev_in_face(Dart d) const {
  VertexId v = tail(d);
  int i = rot_index(v, dart_edge(d));
  EdgeId e = rotation[v][(i + 1) % degree(v)];
  return dart_twin(dart_from(v, e));
}

void RotationSystem::build_faces() {
  // rotation lists must carry every incident edge-end exactly once
  std::vector<int> deg(n, 0);
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (VertexId v = 0; v < n; ++v) {
    if (static_cast<int>(rotation[v].size()) != deg[v])
      fail(errc::inconsistent_rotation,
           "vertex " + std::to_string(v) + " lists " + std::to_string(rotation[v].size()) +
               " edges, has degree " + std::to_string(deg[v]));
    std::set<EdgeId> seen;
    for (EdgeId e : rotation[v]) {
      if (e < 0 || e >= m()) fail(errc::inconsistent_rotation, "rotation references unknown edge");
      if (edges[e].u != v && edges[e].v != v)
        fail(errc::inconsistent_rotation, "edge " + std::to_string(e) + " not incident to vertex " +
                                              std::to_string(v));
      if (!seen.insert(e).second)
        fail(errc::inconsistent_rotation, "edge " + std::to_string(e) + " repeated at vertex " +
                                              std::to_string(v));
    }
  }

  faces.clear();
  dart_face.assign(2 * m(), -1);
  for (Dart d0 = 0; d0 < 2 * m(); ++d0) {
    if (dart_face[d0] != -1) continue;
    Face f;
    f.id = static_cast<FaceId>(faces.size());
    Dart d = d0;
    do {
      dart_face[d] = f.id;
      f.boundary.push_back(d);
      d = next_in_face(d);
      if (f.boundary.size() > 2 * edges.size())
        fail(errc::inconsistent_rotation, "face traversal does not close");
    } while (d != d0);
    faces.push_back(std::move(f));
  }
}

bool RotationSystem::connected() const {
  if (n == 0) return true;
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> vis(n, 0);
  std::queue<VertexId> q;
  q.push(0);
  vis[0] = 1;
  int count = 1;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (VertexId w : adj[v]) {
      if (!vis[w]) {
        vis[w] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  return count == n;
}

FaceId PlaneGraph::corner_face(VertexId v, int i) const {
  return rs.dart_face[rs.dart_from(v, rs.rotation[v][i])];
}

bool PlaneGraph::structurally_equal(const PlaneGraph& other) const {
  if (rs.n != other.rs.n || rs.m() != other.rs.m()) return false;
  for (EdgeId e = 0; e < rs.m(); ++e) {
    if (rs.edges[e].u != other.rs.edges[e].u || rs.edges[e].v != other.rs.edges[e].v) return false;
  }
  if (rs.rotation != other.rs.rotation) return false;
  // external faces must contain the same dart set
  auto key = [](const PlaneGraph& g) {
    auto b = g.faces()[g.external_face].boundary;
    std::sort(b.begin(), b.end());
    return b;
  };
  return key(*this) == key(other);
}

PlaneGraph build_plane_graph(int vertex_count, std::vector<EdgeDef> edges,
                             std::vector<std::vector<EdgeId>> rotation,
                             ExternalFaceHint external_face_hint) {
  if (vertex_count <= 0) fail(errc::bad_argument, "vertex count must be positive");
  std::set<std::pair<int, int>> seen;
  std::vector<int> deg(vertex_count, 0);
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
      fail(errc::bad_argument, "edge endpoint out of range");
    if (e.u == e.v) fail(errc::bad_argument, "self-loops are not supported");
    if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second)
      fail(errc::bad_argument, "duplicate edge");
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int v = 0; v < vertex_count; ++v)
    if (deg[v] > 4)
      fail(errc::degree_exceeded,
           "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]));

  PlaneGraph g;
  g.rs.n = vertex_count;
  g.rs.edges = std::move(edges);
  g.rs.rotation = std::move(rotation);
  if (static_cast<int>(g.rs.rotation.size()) != vertex_count)
    fail(errc::inconsistent_rotation, "rotation must list every vertex");
  if (!g.rs.connected()) fail(errc::disconnected, "graph is not connected");
  g.rs.build_faces();

  int f = static_cast<int>(g.rs.faces.size());
  if (g.rs.m() == 0) {
    if (vertex_count != 1) fail(errc::disconnected, "edgeless graph with several vertices");
    g.rs.faces.push_back(Face{0, {}, true});
    g.external_face = 0;
    return g;
  }
  if (vertex_count - g.rs.m() + f != 2)
    fail(errc::inconsistent_rotation,
         "Euler check failed: n=" + std::to_string(vertex_count) + " m=" +
             std::to_string(g.rs.m()) + " f=" + std::to_string(f));

  if (external_face_hint.edge < 0 || external_face_hint.edge >= g.rs.m())
    fail(errc::bad_argument, "external face hint references unknown edge");
  Dart d = external_face_hint.left ? dart_fwd(external_face_hint.edge)
                                   : dart_rev(external_face_hint.edge);
  g.external_face = g.rs.dart_face[d];
  g.rs.faces[g.external_face].is_external = true;
  return g;
}

PlaneGraph with_external_face(const PlaneGraph& g, FaceId f) {
  if (f < 0 || f >= static_cast<int>(g.faces().size()))
    fail(errc::bad_argument, "no such face");
  PlaneGraph out = g;
  out.rs.faces[out.external_face].is_external = false;
  out.external_face = f;
  out.rs.faces[f].is_external = true;
  return out;
}

std::string serialize(const PlaneGraph& g) {
  std::ostringstream out;
  out << "plane4 v1\n";
  out << "vertices " << g.n() << "\n";
  for (EdgeId e = 0; e < g.m(); ++e)
    out << "edge " << e << " " << g.edge(e).u << " " << g.edge(e).v << "\n";
  for (VertexId v = 0; v < g.n(); ++v) {
    out << "rot " << v;
    for (EdgeId e : g.rs.rotation[v]) out << " " << e;
    out << "\n";
  }
  if (g.m() > 0) {
    Dart d = g.face(g.external_face).boundary.front();
    out << "external " << dart_edge(d) << " " << ((d & 1) ? "right" : "left") << "\n";
  }
  return out.str();
}

PlaneGraph parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  int n = -1;
  std::vector<std::pair<int, EdgeDef>> edge_lines;
  std::vector<std::pair<int, std::vector<EdgeId>>> rot_lines;  // (vertex, edges)
  std::optional<ExternalFaceHint> ext;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto need_int = [&](const char* what) {
      long long x;
      if (!(ls >> x)) fail(errc::parse_error, std::string("expected ") + what, lineno);
      return static_cast<int>(x);
    };
    if (tok == "plane4") {
      std::string ver;
      ls >> ver;
      if (ver != "v1") fail(errc::parse_error, "unsupported version '" + ver + "'", lineno);
      header = true;
    } else if (tok == "vertices") {
      n = need_int("vertex count");
    } else if (tok == "edge") {
      int id = need_int("edge id");
      int u = need_int("endpoint");
      int v = need_int("endpoint");
      edge_lines.push_back({id, EdgeDef{u, v}});
      if (id != static_cast<int>(edge_lines.size()) - 1)
        fail(errc::parse_error, "edge ids must be consecutive from 0", lineno);
    } else if (tok == "rot") {
      int v = need_int("vertex id");
      std::vector<EdgeId> r;
      long long e;
      while (ls >> e) r.push_back(static_cast<EdgeId>(e));
      rot_lines.push_back({v, std::move(r)});
    } else if (tok == "external") {
      int e = need_int("edge id");
      std::string side;
      if (!(ls >> side) || (side != "left" && side != "right"))
        fail(errc::parse_error, "expected 'left' or 'right'", lineno);
      ext = ExternalFaceHint{e, side == "left"};
    } else {
      fail(errc::parse_error, "unknown directive '" + tok + "'", lineno);
    }
  }
  if (!header) fail(errc::parse_error, "missing 'plane4 v1' header", 1);
  if (n < 0) fail(errc::parse_error, "missing 'vertices' line", lineno);

  std::vector<EdgeDef> edges(edge_lines.size());
  for (auto& [id, e] : edge_lines) edges[id] = e;
  std::vector<std::vector<EdgeId>> rotation(n);
  std::vector<char> have(n, 0);
  for (auto& [v, r] : rot_lines) {
    if (v < 0 || v >= n) fail(errc::parse_error, "rot line for unknown vertex");
    if (have[v]) fail(errc::parse_error, "duplicate rot line for vertex " + std::to_string(v));
    have[v] = 1;
    rotation[v] = std::move(r);
  }
  if (!edges.empty() && !ext) fail(errc::parse_error, "missing 'external' line", lineno);
  return build_plane_graph(n, std::move(edges), std::move(rotation),
                           ext.value_or(ExternalFaceHint{0, true}));
}

PlaneGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_argument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

namespace {

// Rotations from a straight-line drawing: incident edges sorted CCW by angle.
PlaneGraph from_coords(int n, std::vector<EdgeDef> edges,
                       const std::vector<std::pair<double, double>>& pos,
                       ExternalFaceHint hint) {
  std::vector<std::vector<EdgeId>> rot(n);
  for (EdgeId e = 0; e < static_cast<int>(edges.size()); ++e) {
    rot[edges[e].u].push_back(e);
    rot[edges[e].v].push_back(e);
  }
  for (VertexId v = 0; v < n; ++v) {
    std::sort(rot[v].begin(), rot[v].end(), [&](EdgeId a, EdgeId b) {
      auto angle = [&](EdgeId e) {
        VertexId w = edges[e].u == v ? edges[e].v : edges[e].u;
        return std::atan2(pos[w].second - pos[v].second, pos[w].first - pos[v].first);
      };
      return angle(a) < angle(b);
    });
  }
  return build_plane_graph(n, std::move(edges), std::move(rot), hint);
}

PlaneGraph delete_edge(const PlaneGraph& g, EdgeId victim) {
  std::vector<EdgeDef> edges;
  std::vector<int> remap(g.m(), -1);
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (e == victim) continue;
    remap[e] = static_cast<int>(edges.size());
    edges.push_back(g.edge(e));
  }
  std::vector<std::vector<EdgeId>> rot(g.n());
  for (VertexId v = 0; v < g.n(); ++v)
    for (EdgeId e : g.rs.rotation[v])
      if (e != victim) rot[v].push_back(remap[e]);
  return build_plane_graph(g.n(), std::move(edges), std::move(rot), ExternalFaceHint{0, true});
}

PlaneGraph k4() {
  std::vector<EdgeDef> edges{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};
  std::vector<std::pair<double, double>> pos{{0, 0}, {4, 0}, {2, 4}, {2, 1.5}};
  // outer triangle (0,1,2); its face lies right of the dart 0 -> 1
  return from_coords(4, std::move(edges), pos, ExternalFaceHint{0, false});
}

PlaneGraph k5_minus_e() {
  // triangular bipyramid: equator 0,1,2; apexes 3 and 4 (the missing edge)
  std::vector<EdgeDef> edges{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3},
                             {2, 3}, {0, 4}, {1, 4}, {2, 4}};
  std::vector<std::vector<EdgeId>> rot{
      {0, 3, 2, 6},  // 0: east 1, north 3, west 2, south 4
      {1, 4, 0, 7},  // 1: east 2, north 3, west 0, south 4
      {2, 5, 1, 8},  // 2: east 0, north 3, west 1, south 4
      {3, 4, 5},     // 3 sees the equator CCW
      {6, 8, 7},     // 4 sees it CW
  };
  // external face (0,1,4), right of dart 0 -> 1
  return build_plane_graph(5, std::move(edges), std::move(rot), ExternalFaceHint{0, false});
}

PlaneGraph prism() {
  std::vector<EdgeDef> edges{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5},
                             {5, 3}, {0, 3}, {1, 4}, {2, 5}};
  std::vector<std::pair<double, double>> pos{{0, 1},      {-0.87, -0.5}, {0.87, -0.5},
                                             {0, 2},      {-1.73, -1},   {1.73, -1}};
  // quadrilateral face (0,1,4,3) external, per the cubic-module fixtures
  return from_coords(6, std::move(edges), pos, ExternalFaceHint{0, false});
}

PlaneGraph cube() {
  std::vector<EdgeDef> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                             {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  std::vector<std::pair<double, double>> pos{{-1, -1}, {1, -1}, {1, 1}, {-1, 1},
                                             {-2, -2}, {2, -2}, {2, 2}, {-2, 2}};
  return from_coords(8, std::move(edges), pos, ExternalFaceHint{4, false});
}

}  // namespace

PlaneGraph flower(int k) {
  if (k < 3) fail(errc::bad_argument, "flower needs k >= 3");
  int n = 2 * k;
  std::vector<EdgeDef> edges;
  edges.reserve(4 * k);
  for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});          // inner cycle C
  for (int i = 0; i < k; ++i) edges.push_back({k + i, k + (i + 1) % k});  // outer cycle C'
  for (int i = 0; i < k; ++i) edges.push_back({i, k + i});                // {v_i, v'_i}
  for (int i = 0; i < k; ++i) edges.push_back({i, k + (i + 1) % k});      // {v_i, v'_{i+1}}

  std::vector<std::pair<double, double>> pos(n);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < k; ++i) {
    double t = 2 * pi * i / k;
    pos[i] = {std::cos(t), std::sin(t)};
    double s = 2 * pi * (i - 0.5) / k;
    pos[k + i] = {3 * std::cos(s), 3 * std::sin(s)};
  }
  // the face bounded by C' alone is external: left of dart v'_1 -> v'_0?
  PlaneGraph g = from_coords(n, std::move(edges), pos, ExternalFaceHint{0, true});
  for (const Face& f : g.faces()) {
    if (f.degree() != k) continue;
    bool all_outer = true;
    for (Dart d : f.boundary) {
      EdgeId e = dart_edge(d);
      if (e < k || e >= 2 * k) {
        all_outer = false;
        break;
      }
    }
    if (all_outer) return with_external_face(g, f.id);
  }
  fail(errc::internal, "flower: external face not found");
}

namespace {

PlaneGraph octahedron_minus_edge_quad_external() {
  // drop a C' edge of F_3; the external triangle and one petal merge into the
  // "large" quadrilateral face, which stays external
  PlaneGraph g = delete_edge(flower(3), 3);
  for (const Face& f : g.faces())
    if (f.degree() == 4) return with_external_face(g, f.id);
  fail(errc::internal, "octahedron-e: quad face not found");
}

PlaneGraph gadget_h() {
  // same graph, but a triangle incident to a degree-3 vertex is external; the
  // degree-3 vertex on it is the attachment point (see collections module)
  PlaneGraph g = delete_edge(flower(3), 3);
  for (const Face& f : g.faces()) {
    if (f.degree() != 3) continue;
    for (Dart d : f.boundary)
      if (g.tail(d) == 3) return with_external_face(g, f.id);
  }
  fail(errc::internal, "gadget H: no triangle at the attachment vertex");
}

}  // namespace

// Attachment vertex of the gadget H fixture (degree 3, on its external face).
VertexId gadget_h_attachment() { return 3; }

std::map<std::string, PlaneGraph> fixtures() {
  std::map<std::string, PlaneGraph> out;
  out.emplace("p3", from_coords(3, {{0, 1}, {1, 2}}, {{0, 0}, {1, 0}, {2, 0}},
                                ExternalFaceHint{0, true}));
  out.emplace("k3", from_coords(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 0}, {1, 0}, {0.5, 1}},
                                ExternalFaceHint{0, false}));
  out.emplace("c4", from_coords(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
                                {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, ExternalFaceHint{0, false}));
  out.emplace("k4", k4());
  out.emplace("k5-e", k5_minus_e());
  out.emplace("octahedron-e", octahedron_minus_edge_quad_external());
  out.emplace("gadget-h", gadget_h());
  out.emplace("prism", prism());
  out.emplace("cube", cube());
  for (int k = 3; k <= 8; ++k) out.emplace("f" + std::to_string(k), flower(k));
  return out;
}

PlaneGraph fixture(const std::string& name) {
  auto all = fixtures();
  auto it = all.find(name);
  if (it == all.end()) fail(errc::bad_argument, "unknown fixture '" + name + "'");
  return it->second;
}

namespace {

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  std::uint64_t next(std::uint64_t bound) { return g() % bound; }  // bound > 0
};

// Random stacked plane triangulation on n vertices, returned as rotations.
struct Stacked {
  std::vector<EdgeDef> edges;
  std::vector<std::vector<EdgeId>> rot;
  std::vector<std::array<VertexId, 3>> faces;  // inner faces as oriented triangles

  EdgeId add_edge(VertexId u, VertexId v) {
    edges.push_back({u, v});
    return static_cast<EdgeId>(edges.size()) - 1;
  }

  void insert_after(VertexId v, EdgeId after, EdgeId e) {
    auto& r = rot[v];
    auto it = std::find(r.begin(), r.end(), after);
    r.insert(it + 1, e);
  }

  EdgeId find_edge(VertexId u, VertexId v) const {
    for (EdgeId e : rot[u]) {
      if ((edges[e].u == u && edges[e].v == v) || (edges[e].u == v && edges[e].v == u)) return e;
    }
    fail(errc::internal, "stacked: edge not found");
  }
};

Stacked stacked_triangulation(Rng& rng, int n) {
  Stacked s;
  s.rot.resize(n);
  EdgeId e01 = s.add_edge(0, 1), e12 = s.add_edge(1, 2), e02 = s.add_edge(2, 0);
  s.rot[0] = {e01, e02};
  s.rot[1] = {e12, e01};
  s.rot[2] = {e02, e12};
  s.faces.push_back({0, 1, 2});
  for (VertexId w = 3; w < n; ++w) {
    auto idx = rng.next(s.faces.size());
    auto [a, b, c] = s.faces[idx];
    EdgeId ab = s.find_edge(a, b), bc = s.find_edge(b, c), ca = s.find_edge(c, a);
    EdgeId wa = s.add_edge(w, a), wb = s.add_edge(w, b), wc = s.add_edge(w, c);
    s.insert_after(a, ab, wa);
    s.insert_after(b, bc, wb);
    s.insert_after(c, ca, wc);
    s.rot[w] = {wa, wb, wc};
    s.faces[idx] = {a, b, w};
    s.faces.push_back({b, c, w});
    s.faces.push_back({c, a, w});
  }
  return s;
}

}  // namespace

PlaneGraph random_plane_4graph(std::uint64_t seed, int n) {
  if (n < 3) fail(errc::bad_argument, "random_plane_4graph needs n >= 3");
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + attempt + 1);
    Stacked s = stacked_triangulation(rng, n);
    int m = static_cast<int>(s.edges.size());
    std::vector<char> alive(m, 1);
    std::vector<int> deg(n, 0);
    for (EdgeId e = 0; e < m; ++e) {
      ++deg[s.edges[e].u];
      ++deg[s.edges[e].v];
    }
    auto is_bridge = [&](EdgeId cut) {
      std::vector<char> vis(n, 0);
      std::queue<VertexId> q;
      q.push(s.edges[cut].u);
      vis[s.edges[cut].u] = 1;
      while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (EdgeId e : s.rot[v]) {
          if (!alive[e] || e == cut) continue;
          VertexId w = s.edges[e].u == v ? s.edges[e].v : s.edges[e].u;
          if (!vis[w]) {
            vis[w] = 1;
            q.push(w);
          }
        }
      }
      return !vis[s.edges[cut].v];
    };
    auto drop = [&](EdgeId e) {
      alive[e] = 0;
      --deg[s.edges[e].u];
      --deg[s.edges[e].v];
    };

    bool ok = true;
    while (ok) {
      std::vector<EdgeId> cand;
      for (EdgeId e = 0; e < m; ++e)
        if (alive[e] && (deg[s.edges[e].u] > 4 || deg[s.edges[e].v] > 4)) cand.push_back(e);
      if (cand.empty()) break;
      // prefer ends with the highest degree, break ties randomly
      std::vector<EdgeId> best;
      int best_score = -1;
      for (EdgeId e : cand) {
        int score = std::max(deg[s.edges[e].u], deg[s.edges[e].v]);
        if (score > best_score) {
          best_score = score;
          best.clear();
        }
        if (score == best_score) best.push_back(e);
      }
      bool dropped = false;
      for (std::uint64_t t = 0; t < best.size() * 2 + 4 && !dropped; ++t) {
        EdgeId e = best[rng.next(best.size())];
        if (!is_bridge(e)) {
          drop(e);
          dropped = true;
        }
      }
      if (!dropped) {
        for (EdgeId e : cand)
          if (!is_bridge(e)) {
            drop(e);
            dropped = true;
            break;
          }
      }
      if (!dropped) ok = false;  // stuck; retry with fresh randomness
    }
    if (!ok) continue;

    // a few extra deletions for corpus variety, never below a spanning tree
    std::uint64_t extra = rng.next(std::max(1, m / 5) + 1);
    for (std::uint64_t t = 0; t < extra; ++t) {
      EdgeId e = static_cast<EdgeId>(rng.next(m));
      if (alive[e] && !is_bridge(e)) drop(e);
    }

    std::vector<EdgeDef> edges;
    std::vector<int> remap(m, -1);
    for (EdgeId e = 0; e < m; ++e)
      if (alive[e]) {
        remap[e] = static_cast<int>(edges.size());
        edges.push_back(s.edges[e]);
      }
    std::vector<std::vector<EdgeId>> rot(n);
    for (VertexId v = 0; v < n; ++v)
      for (EdgeId e : s.rot[v])
        if (alive[e]) rot[v].push_back(remap[e]);
    return build_plane_graph(n, std::move(edges), std::move(rot), ExternalFaceHint{0, true});
  }
}

namespace {

bool has_small_edge_cut(const PlaneGraph& g) {
  int m = g.m();
  auto splits = [&](EdgeId a, EdgeId b) {
    std::vector<char> vis(g.n(), 0);
    std::queue<VertexId> q;
    q.push(0);
    vis[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (EdgeId e : g.rs.rotation[v]) {
        if (e == a || e == b) continue;
        VertexId w = g.edge(e).u == v ? g.edge(e).v : g.edge(e).u;
        if (!vis[w]) {
          vis[w] = 1;
          ++cnt;
          q.push(w);
        }
      }
    }
    return cnt != g.n();
  };
  for (EdgeId a = 0; a < m; ++a)
    if (splits(a, a)) return true;
  for (EdgeId a = 0; a < m; ++a)
    for (EdgeId b = a + 1; b < m; ++b)
      if (splits(a, b)) return true;
  return false;
}

}  // namespace

PlaneGraph random_triconnected_cubic(std::uint64_t seed, int target_n) {
  if (target_n < 4) fail(errc::bad_argument, "cubic generator needs n >= 4");
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0xc0ffee);
  PlaneGraph g = k4();
  while (g.n() < target_n) {
    // split two distinct edges of one face and join the split points
    bool grown = false;
    for (int tries = 0; tries < 64 && !grown; ++tries) {
      const Face& f = g.face(static_cast<FaceId>(rng.next(g.faces().size())));
      if (f.degree() < 2) continue;
      int i = static_cast<int>(rng.next(f.boundary.size()));
      int j = static_cast<int>(rng.next(f.boundary.size()));
      Dart d1 = f.boundary[i], d2 = f.boundary[j];
      if (dart_edge(d1) == dart_edge(d2)) continue;

      int n = g.n();
      VertexId x = n, y = n + 1;
      std::vector<EdgeDef> edges = g.rs.edges;
      std::vector<std::vector<EdgeId>> rot = g.rs.rotation;
      rot.resize(n + 2);
      // subdivide the edge under d (tail t, head h): the old id keeps the tail
      // half (t, mid), a fresh id takes (mid, h)
      auto subdivide = [&](Dart d, VertexId mid) {
        EdgeId e = dart_edge(d);
        VertexId t = g.tail(d), h = g.head(d);
        edges[e] = {t, mid};
        EdgeId e2 = static_cast<EdgeId>(edges.size());
        edges.push_back({mid, h});
        for (EdgeId& re : rot[h])
          if (re == e) re = e2;
        return std::pair<EdgeId, EdgeId>{e, e2};
      };
      auto [a1, a2] = subdivide(d1, x);
      auto [b1, b2] = subdivide(d2, y);
      EdgeId chord = static_cast<EdgeId>(edges.size());
      edges.push_back({x, y});
      // f lies left of d1 and d2, so the chord leaves each split vertex 90°
      // CCW from the head direction: CCW order (to-head, chord, to-tail)
      rot[x] = {a2, chord, a1};
      rot[y] = {b2, chord, b1};
      try {
        PlaneGraph cand = build_plane_graph(n + 2, std::move(edges), std::move(rot),
                                            ExternalFaceHint{0, true});
        if (has_small_edge_cut(cand)) continue;
        g = cand;
        grown = true;
      } catch (const error&) {
        continue;
      }
    }
    if (!grown) fail(errc::internal, "cubic generator failed to grow");
  }
  // seed-dependent external face for corpus variety
  FaceId ext = static_cast<FaceId>(rng.next(g.faces().size()));
  return with_external_face(g, ext);
}

std::pair<int, std::vector<EdgeDef>> random_degree4_graph(std::uint64_t seed, int n) {
  if (n < 2) fail(errc::bad_argument, "need n >= 2");
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + 7);
  std::vector<EdgeDef> edges;
  std::vector<int> deg(n, 0);
  std::set<std::pair<int, int>> have;
  for (int v = 1; v < n; ++v) {
    // random earlier vertex with spare degree
    VertexId u = static_cast<VertexId>(rng.next(v));
    for (int t = 0; deg[u] >= 4 && t < 4 * n; ++t) u = static_cast<VertexId>(rng.next(v));
    if (deg[u] >= 4) {
      for (VertexId w = 0; w < v; ++w)
        if (deg[w] < 4) {
          u = w;
          break;
        }
    }
    edges.push_back({u, v});
    have.insert({std::min(u, v), std::max(u, v)});
    ++deg[u];
    ++deg[v];
  }
  std::uint64_t extra = rng.next(n + 1);
  for (std::uint64_t t = 0; t < 4 * extra; ++t) {
    VertexId u = static_cast<VertexId>(rng.next(n));
    VertexId v = static_cast<VertexId>(rng.next(n));
    if (u == v || deg[u] >= 4 || deg[v] >= 4) continue;
    if (!have.insert({std::min(u, v), std::max(u, v)}).second) continue;
    edges.push_back({u, v});
    ++deg[u];
    ++deg[v];
  }
  return {n, edges};
}

}  // namespace unbent
