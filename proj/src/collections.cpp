#include "unbent/collections.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace unbent {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

bool acyclic(int n, const std::vector<EdgeDef>& edges, const std::vector<EdgeId>& subset) {
  Dsu d(n);
  for (EdgeId e : subset)
    if (!d.unite(edges[e].u, edges[e].v)) return false;
  return true;
}

}  // namespace

void verify_collection(const PlaneGraph& g, const UnbentCollection& c) {
  if (c.reps.empty()) fail(errc::internal, "collection is empty");
  if (static_cast<int>(c.coverage.size()) != g.m())
    fail(errc::internal, "coverage is not total");
  if (c.drawings.size() != c.reps.size() || c.straight_sets.size() != c.reps.size())
    fail(errc::internal, "collection size mismatch");
  int bends = 0;
  for (int i = 0; i < c.size(); ++i) {
    check_representation(g, c.reps[i]);
    validate_drawing(g, c.reps[i], c.drawings[i]);
    bends += c.reps[i].total_bends();
    for (EdgeId e : c.straight_sets[i])
      if (!c.reps[i].bends[e].empty())
        fail(errc::internal, "edge " + std::to_string(e) + " bent in its straight drawing");
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    int i = c.coverage[e];
    if (i < 0 || i >= c.size()) fail(errc::internal, "coverage index out of range");
    if (!c.reps[i].bends[e].empty())
      fail(errc::internal, "coverage witness for edge " + std::to_string(e) + " is bent");
  }
  if (bends != c.total_bends) fail(errc::internal, "total_bends is stale");
}

UnbentCollection collection_from_forests(const PlaneGraph& g,
                                         const std::vector<std::vector<EdgeId>>& forests) {
  std::vector<int> owner(g.m(), -1);
  for (std::size_t i = 0; i < forests.size(); ++i) {
    for (EdgeId e : forests[i]) {
      if (e < 0 || e >= g.m()) fail(errc::not_a_partition, "unknown edge in forest");
      if (owner[e] != -1)
        fail(errc::not_a_partition, "edge " + std::to_string(e) + " in two classes");
      owner[e] = static_cast<int>(i);
    }
    if (!acyclic(g.n(), g.rs.edges, forests[i]))
      fail(errc::not_a_forest, "class " + std::to_string(i) + " contains a cycle");
  }
  for (EdgeId e = 0; e < g.m(); ++e)
    if (owner[e] == -1) fail(errc::not_a_partition, "edge " + std::to_string(e) + " uncovered");

  UnbentCollection c;
  std::vector<int> dense_index(std::max<std::size_t>(forests.size(), 1), -1);
  for (std::size_t i = 0; i < forests.size(); ++i) {
    if (forests[i].empty()) continue;
    auto rep = representation_with_straight(g, forests[i]);
    if (!rep) fail(errc::internal, "forest class unexpectedly unstraightenable");
    dense_index[i] = c.size();
    c.straight_sets.push_back(forests[i]);
    c.drawings.push_back(compact(g, *rep));
    c.reps.push_back(std::move(*rep));
  }
  if (c.reps.empty()) {  // edgeless graph: one trivial drawing
    auto rep = representation_with_straight(g, {});
    c.reps.push_back(*rep);
    c.drawings.push_back(compact(g, c.reps[0]));
    c.straight_sets.push_back({});
  }
  c.coverage.resize(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) c.coverage[e] = dense_index[owner[e]];
  for (const auto& rep : c.reps) c.total_bends += rep.total_bends();
  verify_collection(g, c);
  return c;
}

// ---------------------------------------------------------------------------
// forest partitions via matroid-union augmentation

std::optional<std::vector<int>> forest_partition(int n, const std::vector<EdgeDef>& edges, int k) {
  int m = static_cast<int>(edges.size());
  std::vector<int> color(m, -1);
  std::vector<std::set<EdgeId>> forest(k);

  // path between a and b in forest f, as edge ids; empty when disconnected
  auto forest_path = [&](int f, VertexId a, VertexId b) {
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
    for (EdgeId e : forest[f]) {
      adj[edges[e].u].push_back({edges[e].v, e});
      adj[edges[e].v].push_back({edges[e].u, e});
    }
    std::vector<EdgeId> via(n, -1);
    std::vector<VertexId> from(n, -1);
    std::queue<VertexId> q;
    q.push(a);
    from[a] = a;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (auto [w, e] : adj[v])
        if (from[w] == -1) {
          from[w] = v;
          via[w] = e;
          q.push(w);
        }
    }
    std::vector<EdgeId> path;
    if (from[b] == -1) return path;
    for (VertexId v = b; v != a; v = from[v]) path.push_back(via[v]);
    return path;
  };

  for (EdgeId e0 = 0; e0 < m; ++e0) {
    // BFS in the exchange graph: an edge enters a forest by evicting an edge
    // of the cycle it would close; the evicted edge is re-homed in turn
    std::vector<EdgeId> parent(m, -2);
    std::vector<int> parent_forest(m, -1);
    std::queue<EdgeId> q;
    q.push(e0);
    parent[e0] = -1;
    int done_edge = -1, done_forest = -1;
    while (!q.empty() && done_edge == -1) {
      EdgeId x = q.front();
      q.pop();
      for (int f = 0; f < k && done_edge == -1; ++f) {
        if (color[x] == f) continue;
        auto path = forest_path(f, edges[x].u, edges[x].v);
        if (path.empty()) {
          done_edge = x;
          done_forest = f;
          break;
        }
        for (EdgeId y : path)
          if (parent[y] == -2) {
            parent[y] = x;
            parent_forest[y] = f;
            q.push(y);
          }
      }
    }
    if (done_edge == -1) return std::nullopt;
    // unwind: the terminal edge moves into its free forest, each predecessor
    // takes the slot its successor vacated
    EdgeId x = done_edge;
    int f = done_forest;
    while (true) {
      if (color[x] >= 0) forest[color[x]].erase(x);
      color[x] = f;
      forest[f].insert(x);
      if (parent[x] == -1) break;
      f = parent_forest[x];
      x = parent[x];
    }
  }
  return color;
}

std::optional<std::array<std::vector<EdgeId>, 2>> two_forest_partition(const PlaneGraph& g) {
  auto color = forest_partition(g.n(), g.rs.edges, 2);
  if (!color) return std::nullopt;
  std::array<std::vector<EdgeId>, 2> out;
  for (EdgeId e = 0; e < g.m(); ++e) out[(*color)[e]].push_back(e);
  return out;
}

// ---------------------------------------------------------------------------
// triangulation, canonical ordering, Schnyder realizer

namespace {

int repeated_position(const RotationSystem& rs, const Face& f) {
  std::map<VertexId, int> seen;
  for (std::size_t i = 0; i < f.boundary.size(); ++i) {
    VertexId v = rs.head(f.boundary[i]);
    if (seen.count(v)) return static_cast<int>(i);
    seen[v] = static_cast<int>(i);
  }
  return -1;
}

bool has_edge(const RotationSystem& rs, VertexId a, VertexId b) {
  for (EdgeId e : rs.rotation[a])
    if (rs.edges[e].u == b || rs.edges[e].v == b) return true;
  return false;
}

void insert_at(std::vector<EdgeId>& rot, EdgeId where, EdgeId what, bool after) {
  auto it = std::find(rot.begin(), rot.end(), where);
  rot.insert(after ? it + 1 : it, what);
}

// chord (w_{i-1}, w_{i+1}) cutting off the ear at walk position i
void add_ear(RotationSystem& rs, const Face& f, int i) {
  int len = static_cast<int>(f.boundary.size());
  Dart di = f.boundary[i];                    // w_i -> w_{i+1}
  Dart dm = f.boundary[(i - 1 + len) % len];  // w_{i-1} -> w_i
  VertexId a = rs.tail(dm), b = rs.head(di);
  EdgeId chord = static_cast<EdgeId>(rs.edges.size());
  rs.edges.push_back({a, b});
  insert_at(rs.rotation[b], dart_edge(di), chord, false);
  insert_at(rs.rotation[a], dart_edge(dm), chord, true);
}

// star vertex inside face f with spokes to the first occurrence of each vertex
void add_star(RotationSystem& rs, const Face& f) {
  VertexId c = rs.n++;
  rs.rotation.push_back({});
  std::set<VertexId> done;
  for (Dart d : f.boundary) {
    VertexId w = rs.tail(d);  // the walk departs w along d
    if (!done.insert(w).second) continue;
    EdgeId spoke = static_cast<EdgeId>(rs.edges.size());
    rs.edges.push_back({c, w});
    insert_at(rs.rotation[w], dart_edge(d), spoke, true);
    rs.rotation[c].push_back(spoke);
  }
}

// every face a triangle on three distinct vertices (the outer one included)
void triangulate(RotationSystem& rs) {
  for (int guard = 0; guard < 64 * (rs.m() + rs.n) + 64; ++guard) {
    rs.build_faces();
    const Face* todo = nullptr;
    bool starred = false;
    for (const Face& f : rs.faces) {
      if (repeated_position(rs, f) >= 0) {
        add_star(rs, f);
        starred = true;
        break;
      }
      if (f.degree() > 3 && !todo) todo = &f;
    }
    if (starred) continue;
    if (!todo) return;
    const Face& f = *todo;
    int len = f.degree();
    bool done = false;
    for (int i = 0; i < len && !done; ++i) {
      Dart dm = f.boundary[(i - 1 + len) % len];
      Dart di = f.boundary[i];
      VertexId a = rs.tail(dm), b = rs.head(di);
      if (a != b && !has_edge(rs, a, b)) {
        add_ear(rs, f, i);
        done = true;
      }
    }
    if (!done) add_star(rs, f);  // every candidate chord already exists
  }
  fail(errc::internal, "triangulation did not terminate");
}

struct Realizer {
  std::vector<int> color;  // per triangulation edge: 0, 1, 2 or -1 (outer)
};

Realizer schnyder_realizer(RotationSystem& rs) {
  rs.build_faces();
  const Face& outer = rs.faces.front();
  if (outer.degree() != 3) fail(errc::internal, "triangulation has a non-triangle face");
  VertexId r1 = rs.tail(outer.boundary[0]);
  VertexId r3 = rs.tail(outer.boundary[1]);
  VertexId r2 = rs.tail(outer.boundary[2]);

  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(rs.n);
  for (EdgeId e = 0; e < rs.m(); ++e) {
    adj[rs.edges[e].u].push_back({rs.edges[e].v, e});
    adj[rs.edges[e].v].push_back({rs.edges[e].u, e});
  }
  auto edge_between = [&](VertexId a, VertexId b) -> EdgeId {
    for (auto [w, e] : adj[a])
      if (w == b) return e;
    fail(errc::internal, "realizer: missing edge");
  };

  std::vector<char> alive(rs.n, 1), on_bd(rs.n, 0);
  std::vector<VertexId> bd{r1, r3, r2};  // path; its ends share the edge (r1, r2)
  for (VertexId v : bd) on_bd[v] = 1;

  struct Peel {
    VertexId v, left, right;
    std::vector<VertexId> covered;
  };
  std::vector<Peel> peels;

  auto boundary_neighbors = [&](VertexId v) {
    int c = 0;
    for (auto [w, e] : adj[v]) {
      (void)e;
      if (alive[w] && on_bd[w]) ++c;
    }
    return c;
  };

  while (bd.size() > 2) {
    int pick = -1;
    for (std::size_t i = 1; i + 1 < bd.size(); ++i) {
      VertexId v = bd[i];
      if (peels.empty() && v != r3) continue;  // r3 leaves first
      if (boundary_neighbors(v) == 2) {
        pick = static_cast<int>(i);
        break;
      }
    }
    if (pick == -1) fail(errc::internal, "canonical ordering stuck");
    VertexId v = bd[pick];
    VertexId left = bd[pick - 1], right = bd[pick + 1];
    // v's interior neighbors sit in one of the two rotation arcs between
    // left and right; the other arc holds only peeled vertices
    const auto& rot = rs.rotation[v];
    int deg = static_cast<int>(rot.size());
    int li = -1;
    auto other = [&](EdgeId e) { return rs.edges[e].u == v ? rs.edges[e].v : rs.edges[e].u; };
    for (int i = 0; i < deg; ++i)
      if (other(rot[i]) == left) li = i;
    std::vector<VertexId> arc_a, arc_b;
    bool past_right = false;
    for (int s = 1; s < deg; ++s) {
      VertexId w = other(rot[(li + s) % deg]);
      if (w == right) {
        past_right = true;
        continue;
      }
      if (!alive[w] || on_bd[w]) continue;
      (past_right ? arc_b : arc_a).push_back(w);
    }
    if (!arc_a.empty() && !arc_b.empty())
      fail(errc::internal, "canonical ordering: interior neighbors not contiguous");
    std::vector<VertexId> keep = arc_a.empty() ? arc_b : arc_a;
    if (!keep.empty() && !has_edge(rs, left, keep.front())) std::reverse(keep.begin(), keep.end());
    if (!keep.empty() &&
        (!has_edge(rs, left, keep.front()) || !has_edge(rs, right, keep.back())))
      fail(errc::internal, "canonical ordering: replacement path broken");

    alive[v] = 0;
    on_bd[v] = 0;
    for (VertexId w : keep) on_bd[w] = 1;
    std::vector<VertexId> nbd(bd.begin(), bd.begin() + pick);
    nbd.insert(nbd.end(), keep.begin(), keep.end());
    nbd.insert(nbd.end(), bd.begin() + pick + 1, bd.end());
    bd = std::move(nbd);
    peels.push_back({v, left, right, keep});
  }

  Realizer rz;
  rz.color.assign(rs.m(), -1);
  std::set<std::pair<VertexId, VertexId>> outer_edges{{std::min(r1, r2), std::max(r1, r2)},
                                                      {std::min(r1, r3), std::max(r1, r3)},
                                                      {std::min(r2, r3), std::max(r2, r3)}};
  auto is_outer = [&](VertexId a, VertexId b) {
    return outer_edges.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
    if (!is_outer(it->v, it->left)) rz.color[edge_between(it->v, it->left)] = 0;
    if (!is_outer(it->v, it->right)) rz.color[edge_between(it->v, it->right)] = 1;
    for (VertexId w : it->covered) rz.color[edge_between(it->v, w)] = 2;
  }
  return rz;
}

}  // namespace

UnbentCollection schnyder_collection(const PlaneGraph& g) {
  if (g.m() == 0) return collection_from_forests(g, {});
  if (g.m() <= 2 || g.n() < 3) {  // tiny trees: one forest suffices
    std::vector<EdgeId> all(g.m());
    std::iota(all.begin(), all.end(), 0);
    return collection_from_forests(g, {all});
  }

  RotationSystem rs = g.rs;
  int m0 = g.m();
  triangulate(rs);
  Realizer rz = schnyder_realizer(rs);

  std::vector<std::vector<EdgeId>> classes(3);
  std::vector<EdgeId> leftover;
  for (EdgeId e = 0; e < m0; ++e) {
    if (rz.color[e] >= 0)
      classes[rz.color[e]].push_back(e);
    else
      leftover.push_back(e);  // lies on the outer triangle of G+
  }
  for (EdgeId e : leftover) {
    bool placed = false;
    for (int i = 0; i < 3 && !placed; ++i) {
      classes[i].push_back(e);
      if (acyclic(g.n(), g.rs.edges, classes[i]))
        placed = true;
      else
        classes[i].pop_back();
    }
    if (!placed) {
      // no class keeps its forest property; fall back to an exact partition
      auto part = forest_partition(g.n(), g.rs.edges, 3);
      if (!part) fail(errc::internal, "no 3-forest partition of a planar graph");
      for (auto& cl : classes) cl.clear();
      for (EdgeId e2 = 0; e2 < m0; ++e2) classes[(*part)[e2]].push_back(e2);
      break;
    }
  }
  return collection_from_forests(g, classes);
}

// ---------------------------------------------------------------------------
// dense decomposition

namespace {

// three edge-disjoint s-t paths? (unit-capacity max flow, three rounds)
bool three_edge_connected_pair(const PlaneGraph& g, VertexId s, VertexId t) {
  std::vector<std::array<int, 2>> res(g.m(), {1, 1});
  auto augment = [&]() {
    std::vector<EdgeId> via(g.n(), -1);
    std::vector<int> dirv(g.n(), -1);
    std::vector<char> vis(g.n(), 0);
    std::queue<VertexId> q;
    q.push(s);
    vis[s] = 1;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (EdgeId e : g.rs.rotation[v]) {
        int dir = g.edge(e).u == v ? 0 : 1;
        if (res[e][dir] == 0) continue;
        VertexId w = g.edge(e).u == v ? g.edge(e).v : g.edge(e).u;
        if (!vis[w]) {
          vis[w] = 1;
          via[w] = e;
          dirv[w] = dir;
          q.push(w);
        }
      }
    }
    if (!vis[t]) return false;
    for (VertexId v = t; v != s;) {
      EdgeId e = via[v];
      int dir = dirv[v];
      res[e][dir] -= 1;
      res[e][1 - dir] += 1;
      v = dir == 0 ? g.edge(e).u : g.edge(e).v;
    }
    return true;
  };
  for (int i = 0; i < 3; ++i)
    if (!augment()) return false;
  return true;
}

}  // namespace

std::vector<PlaneGraph> decompose_dense(const PlaneGraph& g) {
  if (g.m() > 2 * g.n() - 2)
    fail(errc::density_too_high, "decompose_dense requires m <= 2n-2");

  // 3-edge-connected classes; lambda >= 3 is an equivalence relation
  Dsu cls(g.n());
  for (VertexId u = 0; u < g.n(); ++u)
    for (VertexId v = u + 1; v < g.n(); ++v)
      if (three_edge_connected_pair(g, u, v)) cls.unite(u, v);

  std::map<int, std::vector<VertexId>> groups;
  for (VertexId v = 0; v < g.n(); ++v) groups[cls.find(v)].push_back(v);

  const PlaneGraph h = fixture("gadget-h");
  const VertexId h_attach = gadget_h_attachment();
  int h_slot = -1;  // corner of the attachment vertex on H's external face
  for (int i = 0; i < h.corner_count(h_attach); ++i)
    if (h.corner_face(h_attach, i) == h.external_face) h_slot = i;
  if (h_slot < 0) fail(errc::internal, "gadget H attachment corner not found");

  std::vector<PlaneGraph> members;
  for (auto& [root, verts] : groups) {
    (void)root;
    std::vector<char> in(g.n(), 0);
    for (VertexId v : verts) in[v] = 1;
    int core_edges = 0;
    std::vector<EdgeId> leaving;
    for (EdgeId e = 0; e < g.m(); ++e) {
      bool a = in[g.edge(e).u], b = in[g.edge(e).v];
      if (a && b)
        ++core_edges;
      else if (a || b)
        leaving.push_back(e);
    }
    if (core_edges < 2 * static_cast<int>(verts.size()) - 1) continue;

    std::vector<int> vmap(g.n(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) vmap[verts[i]] = static_cast<int>(i);

    std::vector<EdgeDef> edges;
    std::vector<std::vector<EdgeId>> rot(verts.size());
    std::vector<int> emap(g.m(), -1);
    for (EdgeId e = 0; e < g.m(); ++e)
      if (in[g.edge(e).u] && in[g.edge(e).v]) {
        emap[e] = static_cast<int>(edges.size());
        edges.push_back({vmap[g.edge(e).u], vmap[g.edge(e).v]});
      }
    // one stub + gadget copy per leaving edge
    for (EdgeId e : leaving) {
      VertexId inside = in[g.edge(e).u] ? g.edge(e).u : g.edge(e).v;
      int base = static_cast<int>(rot.size());
      for (int i = 0; i < h.n(); ++i) rot.push_back({});
      int attach_new = base + h_attach;
      emap[e] = static_cast<int>(edges.size());
      edges.push_back({vmap[inside], attach_new});
      int h_edge_base = static_cast<int>(edges.size());
      for (EdgeId he = 0; he < h.m(); ++he)
        edges.push_back({base + h.edge(he).u, base + h.edge(he).v});
      for (VertexId hv = 0; hv < h.n(); ++hv)
        for (EdgeId he : h.rs.rotation[hv]) rot[base + hv].push_back(h_edge_base + he);
      // the stub enters the attachment corner on H's external face
      insert_at(rot[attach_new], h_edge_base + h.rs.rotation[h_attach][h_slot], emap[e], true);
    }
    for (VertexId v : verts)
      for (EdgeId e : g.rs.rotation[v])
        if (emap[e] >= 0) rot[vmap[v]].push_back(emap[e]);

    // external face: follow the merge of g's faces across dropped edges
    Dsu fm(static_cast<int>(g.faces().size()));
    for (EdgeId e = 0; e < g.m(); ++e)
      if (emap[e] < 0) fm.unite(g.face_left(dart_fwd(e)), g.face_left(dart_rev(e)));
    ExternalFaceHint hint{0, true};
    bool found = false;
    for (EdgeId e = 0; e < g.m() && !found; ++e) {
      if (emap[e] < 0 || !(in[g.edge(e).u] && in[g.edge(e).v])) continue;
      for (bool left : {true, false}) {
        FaceId f = g.face_of_edge_side(e, left);
        if (fm.find(f) == fm.find(g.external_face)) {
          hint = {emap[e], left};
          found = true;
          break;
        }
      }
    }
    if (!found) fail(errc::internal, "member external face not recovered");
    int member_n = static_cast<int>(rot.size());
    members.push_back(build_plane_graph(member_n, std::move(edges), std::move(rot), hint));
  }
  return members;
}

// ---------------------------------------------------------------------------
// balanced colorings

AngleAssignment AngleAssignment::zeros(const PlaneGraph& g) {
  AngleAssignment a;
  a.extra.resize(g.n());
  for (VertexId v = 0; v < g.n(); ++v) a.extra[v].assign(g.corner_count(v), 0);
  return a;
}

std::map<FaceId, long long> face_demands(const PlaneGraph& g, const AngleAssignment& a) {
  std::map<FaceId, long long> demand;
  for (const Face& f : g.faces())
    demand[f.id] = f.id == g.external_face ? -4 - f.degree() : 4 - f.degree();
  for (VertexId v = 0; v < g.n(); ++v) {
    if (static_cast<int>(a.extra[v].size()) != g.corner_count(v))
      fail(errc::bad_argument, "assignment shape mismatch");
    int total = 0;
    for (int i = 0; i < g.corner_count(v); ++i) {
      demand[g.corner_face(v, i)] += a.extra[v][i];
      total += a.extra[v][i];
    }
    if (g.degree(v) > 0 && total != 4 - g.degree(v))
      fail(errc::bad_argument, "vertex " + std::to_string(v) + " assigns " +
                                   std::to_string(total) + " angles, has " +
                                   std::to_string(4 - g.degree(v)));
  }
  return demand;
}

std::vector<FaceId> enclosed_faces(const PlaneGraph& g, const std::vector<EdgeId>& cycle_edges) {
  std::vector<char> on_cycle(g.m(), 0);
  for (EdgeId e : cycle_edges) on_cycle[e] = 1;
  Dsu d(static_cast<int>(g.faces().size()));
  for (EdgeId e = 0; e < g.m(); ++e)
    if (!on_cycle[e]) d.unite(g.face_left(dart_fwd(e)), g.face_left(dart_rev(e)));
  std::vector<FaceId> inside;
  for (const Face& f : g.faces())
    if (d.find(f.id) != d.find(g.external_face)) inside.push_back(f.id);
  return inside;
}

std::vector<std::vector<EdgeId>> simple_cycles_of_subgraph(const PlaneGraph& g,
                                                           const std::vector<EdgeId>& edges,
                                                           std::size_t limit) {
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(g.n());
  for (EdgeId e : edges) {
    adj[g.edge(e).u].push_back({g.edge(e).v, e});
    adj[g.edge(e).v].push_back({g.edge(e).u, e});
  }
  std::vector<std::vector<EdgeId>> cycles;
  std::vector<EdgeId> path;
  std::vector<char> used_vertex(g.n(), 0);

  // each cycle found once: from its smallest vertex, second vertex < last
  std::function<void(VertexId, VertexId, VertexId)> dfs = [&](VertexId start, VertexId v,
                                                              VertexId second) {
    for (auto [w, e] : adj[v]) {
      if (cycles.size() >= limit) fail(errc::too_large, "cycle enumeration limit");
      if (w == start && path.size() >= 2 && second < v) {
        auto cyc = path;
        cyc.push_back(e);
        cycles.push_back(cyc);
        continue;
      }
      if (w <= start || used_vertex[w]) continue;
      used_vertex[w] = 1;
      path.push_back(e);
      dfs(start, w, second == -1 ? w : second);
      path.pop_back();
      used_vertex[w] = 0;
    }
  };
  for (VertexId s = 0; s < g.n(); ++s) {
    used_vertex[s] = 1;
    dfs(s, s, -1);
    used_vertex[s] = 0;
  }
  return cycles;
}

namespace {

bool balanced_for_color(const PlaneGraph& g, const std::vector<EdgeId>& class_edges,
                        AngleAssignment* witness) {
  auto cycles = simple_cycles_of_subgraph(g, class_edges);
  if (witness) *witness = AngleAssignment::zeros(g);
  std::vector<char> relevant_fill(g.n(), 0);
  if (cycles.empty()) {
    if (witness)
      for (VertexId v = 0; v < g.n(); ++v)
        if (g.corner_count(v) > 0) witness->extra[v][0] = 4 - g.degree(v);
    return true;
  }

  int nf = static_cast<int>(g.faces().size());
  std::vector<std::vector<int>> cycles_of_face(nf);
  std::vector<long long> target(cycles.size(), 0);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (FaceId f : enclosed_faces(g, cycles[c])) {
      cycles_of_face[f].push_back(static_cast<int>(c));
      target[c] -= 4 - g.face(f).degree();  // assigned angles must add up to this
    }
    if (target[c] < 0) return false;  // enclosure already over-demands
  }

  std::vector<VertexId> relevant;
  std::vector<char> is_relevant(g.n(), 0);
  for (VertexId v = 0; v < g.n(); ++v) {
    if (g.degree(v) >= 4 || g.degree(v) == 0) continue;
    for (int i = 0; i < g.corner_count(v); ++i)
      if (!cycles_of_face[g.corner_face(v, i)].empty()) {
        is_relevant[v] = 1;
        break;
      }
  }
  for (VertexId v = 0; v < g.n(); ++v)
    if (is_relevant[v]) relevant.push_back(v);

  std::vector<long long> assigned(cycles.size(), 0);
  std::vector<std::vector<int>> extra(g.n());
  for (VertexId v : relevant) extra[v].assign(g.corner_count(v), 0);

  std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
    if (idx == relevant.size()) {
      for (std::size_t c = 0; c < cycles.size(); ++c)
        if (assigned[c] != target[c]) return false;
      return true;
    }
    VertexId v = relevant[idx];
    int k = g.corner_count(v);
    int free = 4 - g.degree(v);
    std::function<bool(int, int)> corner = [&](int i, int left) -> bool {
      if (i == k) return left == 0 && place(idx + 1);
      for (int take = left; take >= 0; --take) {
        extra[v][i] = take;
        bool over = false;
        if (take > 0)
          for (int c : cycles_of_face[g.corner_face(v, i)]) {
            assigned[c] += take;
            if (assigned[c] > target[c]) over = true;
          }
        if (!over && corner(i + 1, left - take)) return true;
        if (take > 0)
          for (int c : cycles_of_face[g.corner_face(v, i)]) assigned[c] -= take;
        extra[v][i] = 0;
      }
      return false;
    };
    return corner(0, free);
  };

  if (!place(0)) return false;
  if (witness) {
    for (VertexId v = 0; v < g.n(); ++v) {
      if (is_relevant[v])
        witness->extra[v] = extra[v];
      else if (g.corner_count(v) > 0)
        witness->extra[v][0] = 4 - g.degree(v);  // spare angles parked anywhere
    }
  }
  return true;
}

}  // namespace

bool is_balanced(const PlaneGraph& g, const EdgeColoring2& coloring,
                 std::array<AngleAssignment, 2>* witness) {
  if (static_cast<int>(coloring.size()) != g.m())
    fail(errc::bad_argument, "coloring must cover every edge");
  for (int c : coloring)
    if (c != 1 && c != 2) fail(errc::bad_argument, "colors must be 1 or 2");
  for (int c = 1; c <= 2; ++c) {
    std::vector<EdgeId> cls;
    for (EdgeId e = 0; e < g.m(); ++e)
      if (coloring[e] == c) cls.push_back(e);
    if (!balanced_for_color(g, cls, witness ? &(*witness)[c - 1] : nullptr)) return false;
  }
  return true;
}

std::optional<EdgeColoring2> find_straightenable_2coloring(const PlaneGraph& g, int guard_m) {
  if (g.m() == 0) return EdgeColoring2{};
  if (auto forests = two_forest_partition(g)) {
    EdgeColoring2 col(g.m(), 1);
    for (EdgeId e : (*forests)[1]) col[e] = 2;
    return col;
  }
  if (g.m() > guard_m) fail(errc::too_large, "2-coloring search beyond the guard");

  TamassiaNetwork tn = build_tamassia(g);
  std::vector<char> cls1(g.m(), 0), cls2(g.m(), 0);
  EdgeColoring2 col(g.m(), 0);
  // assign edges in id order; prune as soon as one class is unstraightenable
  std::function<bool(EdgeId)> go = [&](EdgeId e) -> bool {
    if (e == g.m()) return true;
    for (int c : {1, 2}) {
      if (e == 0 && c == 2) continue;  // drawing order symmetry
      auto& mask = c == 1 ? cls1 : cls2;
      mask[e] = 1;
      col[e] = c;
      if (bends_with_straight(tn, mask).has_value() && go(e + 1)) return true;
      mask[e] = 0;
    }
    return false;
  };
  if (go(0)) return col;
  return std::nullopt;
}

int unbent_number_small(const PlaneGraph& g, int guard_m) {
  if (g.m() == 0) return 1;
  std::vector<EdgeId> all(g.m());
  std::iota(all.begin(), all.end(), 0);
  if (representation_with_straight(g, all)) return 1;
  if (find_straightenable_2coloring(g, guard_m)) return 2;
  return 3;
}

bool counterexample_conditions(const PlaneGraph& g) {
  int n = g.n(), m = g.m();
  std::vector<FaceId> fat_inner;
  for (const Face& f : g.faces())
    if (f.id != g.external_face && f.degree() != 3) fat_inner.push_back(f.id);

  if (m == 2 * n - 1) return fat_inner.empty();
  if (m == 2 * n && fat_inner.size() == 1) {
    const Face& f = g.face(fat_inner[0]);
    if (f.degree() <= 7) return true;
    for (Dart d : f.boundary)
      if (g.face_left(dart_twin(d)) == g.external_face) return true;
  }
  return false;
}

}  // namespace unbent
