#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <vector>

#include "unbent/ortho.hpp"

namespace unbent {

namespace {

// Mutable dart structure used only during compaction. Vertices are original
// graph vertices, bend points, or helpers (refinement, box, connector);
// helpers are discarded before coordinates are emitted. angle_[d] is the
// corner at head(d) between d and nxt_[d]; dir_ in quarter turns, 0 = east.
struct Shape {
  std::vector<int> vkind;  // 0 original, 1 bend, 2 helper
  std::vector<int> head_, twin_, nxt_, prv_;
  std::vector<int> angle_;
  std::vector<int> dir_;
  std::vector<char> outer_;

  int add_vertex(int kind) {
    vkind.push_back(kind);
    return static_cast<int>(vkind.size()) - 1;
  }
  // new dart pair a -> b, b -> a; returns the a -> b dart
  int add_darts(int a, int b) {
    int d = static_cast<int>(head_.size());
    head_.push_back(b);
    head_.push_back(a);
    twin_.push_back(d + 1);
    twin_.push_back(d);
    nxt_.resize(head_.size(), -1);
    prv_.resize(head_.size(), -1);
    angle_.resize(head_.size(), 0);
    dir_.resize(head_.size(), -1);
    outer_.resize(head_.size(), 0);
    return d;
  }
  int tail(int d) const { return head_[twin_[d]]; }
  void link(int d, int next, int angle) {
    nxt_[d] = next;
    prv_[next] = d;
    angle_[d] = angle;
  }
  int dart_count() const { return static_cast<int>(head_.size()); }
};

struct Builder {
  const PlaneGraph& g;
  const OrthogonalRepresentation& rep;
  Shape s;
  std::vector<std::vector<int>> bend_vert;   // per edge, bend vertices u -> v
  std::vector<std::vector<int>> seg_fwd;     // per edge, segment darts toward v

  Builder(const PlaneGraph& gg, const OrthogonalRepresentation& r) : g(gg), rep(r) {}

  int arrive_dart(VertexId v, EdgeId e) const {
    return g.edge(e).v == v ? seg_fwd[e].back() : s.twin_[seg_fwd[e].front()];
  }
  int depart_dart(VertexId v, EdgeId e) const { return s.twin_[arrive_dart(v, e)]; }

  void build() {
    for (VertexId v = 0; v < g.n(); ++v) s.add_vertex(0);
    bend_vert.resize(g.m());
    seg_fwd.resize(g.m());
    for (EdgeId e = 0; e < g.m(); ++e) {
      const std::string& b = rep.bends[e];
      for (std::size_t j = 0; j < b.size(); ++j) bend_vert[e].push_back(s.add_vertex(1));
      int prev = g.edge(e).u;
      for (std::size_t j = 0; j <= b.size(); ++j) {
        int to = j == b.size() ? g.edge(e).v : bend_vert[e][j];
        seg_fwd[e].push_back(s.add_darts(prev, to));
        prev = to;
      }
      // corners at the bend points
      for (std::size_t j = 0; j < b.size(); ++j) {
        int left = b[j] == 'L' ? 1 : 3;
        s.link(seg_fwd[e][j], seg_fwd[e][j + 1], left);
        s.link(s.twin_[seg_fwd[e][j + 1]], s.twin_[seg_fwd[e][j]], 4 - left);
      }
    }
    // corners at original vertices: arriving along rotation[i+1] departs along
    // rotation[i] with angle[v][i]
    for (VertexId v = 0; v < g.n(); ++v) {
      int deg = g.degree(v);
      for (int i = 0; i < deg; ++i) {
        EdgeId dep = g.rs.rotation[v][i];
        EdgeId arr = g.rs.rotation[v][(i + 1) % deg];
        s.link(arrive_dart(v, arr), depart_dart(v, dep), rep.angle[v][i]);
      }
    }
  }

  void assign_directions() {
    s.dir_.assign(s.dart_count(), -1);
    std::queue<int> q;
    s.dir_[0] = 0;
    q.push(0);
    auto push = [&](int d, int dir) {
      dir = ((dir % 4) + 4) % 4;
      if (s.dir_[d] == -1) {
        s.dir_[d] = dir;
        q.push(d);
      } else if (s.dir_[d] != dir) {
        fail(errc::internal, "inconsistent directions; representation invalid");
      }
    };
    while (!q.empty()) {
      int d = q.front();
      q.pop();
      push(s.twin_[d], s.dir_[d] + 2);
      push(s.nxt_[d], s.dir_[d] + 2 - s.angle_[d]);
      push(s.prv_[d], s.dir_[d] - 2 + s.angle_[s.prv_[d]]);
    }
    for (int d = 0; d < s.dart_count(); ++d)
      if (s.dir_[d] == -1) fail(errc::internal, "direction assignment did not reach all darts");
  }

  // shape dart matching graph dart gd (same tail, same left face)
  int shape_dart(Dart gd) const {
    EdgeId e = dart_edge(gd);
    return (gd & 1) ? s.twin_[seg_fwd[e].back()] : seg_fwd[e].front();
  }

  // Wrap the drawing in a rectangle joined to the old external boundary by one
  // connector edge; the region between them becomes an ordinary inner face.
  void add_box() {
    int d_in = shape_dart(g.face(g.external_face).boundary.front());
    int steps = 0;
    while (s.angle_[d_in] < 3) {
      d_in = s.nxt_[d_in];
      if (++steps > s.dart_count()) fail(errc::internal, "no attachable external corner");
    }
    int a = s.angle_[d_in];
    int w = s.head_[d_in];
    int d_out = s.nxt_[d_in];

    int p = s.add_vertex(2);
    int A = s.add_vertex(2), B = s.add_vertex(2), C = s.add_vertex(2), D = s.add_vertex(2);
    int c = s.add_darts(w, p);
    int w1 = s.add_darts(p, A);
    int w2 = s.add_darts(A, B);
    int w3 = s.add_darts(B, C);
    int w4 = s.add_darts(C, D);
    int w5 = s.add_darts(D, p);

    int x = 1;  // split the fat corner: x next to d_in, a-x next to d_out
    s.link(d_in, c, x);
    s.link(c, w1, 1);
    s.link(w1, w2, 1);
    s.link(w2, w3, 1);
    s.link(w3, w4, 1);
    s.link(w4, w5, 1);
    s.link(w5, s.twin_[c], 1);
    s.link(s.twin_[c], d_out, a - x);
    // box exterior, the one face refinement must leave alone
    s.link(s.twin_[w2], s.twin_[w1], 3);
    s.link(s.twin_[w1], s.twin_[w5], 2);
    s.link(s.twin_[w5], s.twin_[w4], 3);
    s.link(s.twin_[w4], s.twin_[w3], 3);
    s.link(s.twin_[w3], s.twin_[w2], 3);
    for (int d : {w1, w2, w3, w4, w5}) s.outer_[s.twin_[d]] = 1;

    int delta = (s.dir_[d_in] + 2 - x + 8) % 4;
    auto setdir = [&](int d, int dir) {
      s.dir_[d] = ((dir % 4) + 4) % 4;
      s.dir_[s.twin_[d]] = (s.dir_[d] + 2) % 4;
    };
    setdir(c, delta);
    setdir(w1, delta + 1);
    setdir(w2, delta + 2);
    setdir(w3, delta + 3);
    setdir(w4, delta + 4);
    setdir(w5, delta + 5);
  }

  // subdivide the edge under dart d at a fresh helper vertex; returns the
  // second half t2 (z -> old head); d itself becomes (tail -> z)
  int subdivide(int d, int z) {
    int r = s.head_[d];
    int t1p = s.twin_[d];
    int P = s.prv_[t1p];
    int X = s.nxt_[d];
    int t2 = s.add_darts(z, r);
    int t2p = s.twin_[t2];
    s.head_[d] = z;
    if (X == t1p) {
      // d heads into a leaf; one orbit wraps around the edge end
      s.link(t2, t2p, s.angle_[d]);
      s.link(d, t2, 2);
      s.link(t2p, t1p, 2);
    } else {
      s.link(t2, X, s.angle_[d]);
      s.link(d, t2, 2);
      s.link(P, t2p, s.angle_[P]);
      s.link(t2p, t1p, 2);
    }
    s.dir_[t2] = s.dir_[d];
    s.dir_[t2p] = s.dir_[t1p];
    s.outer_[t2] = s.outer_[d];
    s.outer_[t2p] = s.outer_[t1p];
    return t2;
  }

  void resolve_reflex(int d) {
    int a = s.angle_[d];
    int u = s.head_[d];
    int d1 = s.nxt_[d];
    // walk until the running turn reaches +2: the next dart there faces the
    // reflex corner. Darts of the two edges at the corner itself are skipped:
    // the projection ray is not collinear with them, so a clean +2 position
    // exists further along the orbit.
    int cur = d1, sum = 0, steps = 0;
    int d_t = -1;
    while (true) {
      sum += 2 - s.angle_[cur];
      if (sum == 2) {
        int cand = s.nxt_[cur];
        if (cand != d && cand != s.twin_[d] && cand != d1 && cand != s.twin_[d1]) {
          d_t = cand;
          break;
        }
      }
      cur = s.nxt_[cur];
      if (++steps > 2 * s.dart_count()) fail(errc::internal, "refinement walk did not close");
    }

    int z = s.add_vertex(2);
    int t2 = subdivide(d_t, z);
    int t1 = d_t;  // now tail -> z
    int nE = s.add_darts(u, z);
    // face A: nE' -> d1 ... cur -> t1 -> nE'
    s.link(s.twin_[nE], d1, 1);
    s.link(t1, s.twin_[nE], 1);
    // face B: d -> nE -> t2 -> ...
    s.link(d, nE, a - 1);
    s.link(nE, t2, 1);
    s.dir_[nE] = ((s.dir_[d] + 3 - a) % 4 + 4) % 4;
    s.dir_[s.twin_[nE]] = (s.dir_[nE] + 2) % 4;
  }

  void refine() {
    bool changed = true;
    long long budget = 16LL * s.dart_count() + 64;
    while (changed) {
      changed = false;
      for (int d = 0; d < s.dart_count(); ++d) {
        if (s.outer_[d] || s.angle_[d] < 3) continue;
        resolve_reflex(d);
        changed = true;
        if (--budget < 0) fail(errc::internal, "refinement did not terminate");
        break;
      }
    }
  }

  void check_consistency() const {
    for (int d = 0; d < s.dart_count(); ++d) {
      if (s.dir_[s.twin_[d]] != (s.dir_[d] + 2) % 4)
        fail(errc::internal, "twin direction mismatch");
      if (s.dir_[s.nxt_[d]] != ((s.dir_[d] + 2 - s.angle_[d]) % 4 + 4) % 4)
        fail(errc::internal, "corner direction mismatch");
    }
  }

  struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
  };

  std::vector<GridPoint> coordinates() {
    int nv = static_cast<int>(s.vkind.size());
    Dsu hc(nv), vc(nv);
    for (int d = 0; d < s.dart_count(); d += 2) {
      int t = s.tail(d), h = s.head_[d];
      if (s.dir_[d] % 2 == 0)
        hc.unite(t, h);  // horizontal edge: shared y
      else
        vc.unite(t, h);  // vertical edge: shared x
    }
    auto longest = [&](Dsu& dsu, int wanted_dir) {
      std::vector<std::vector<int>> out(nv);
      std::vector<int> indeg(nv, 0);
      for (int d = 0; d < s.dart_count(); ++d) {
        if (s.dir_[d] != wanted_dir) continue;
        int a = dsu.find(s.tail(d)), b = dsu.find(s.head_[d]);
        out[a].push_back(b);
        ++indeg[b];
      }
      std::vector<long long> dist(nv, 0);
      std::queue<int> q;
      for (int v = 0; v < nv; ++v)
        if (dsu.find(v) == v && indeg[v] == 0) q.push(v);
      int seen = 0;
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++seen;
        for (int w : out[v]) {
          dist[w] = std::max(dist[w], dist[v] + 1);
          if (--indeg[w] == 0) q.push(w);
        }
      }
      int roots = 0;
      for (int v = 0; v < nv; ++v)
        if (dsu.find(v) == v) ++roots;
      if (seen != roots) fail(errc::internal, "constraint graph has a cycle");
      return dist;
    };
    // y from northward darts over horizontal chains, x from eastward darts
    auto ydist = longest(hc, 1);
    auto xdist = longest(vc, 0);
    std::vector<GridPoint> pos(nv);
    for (int v = 0; v < nv; ++v) pos[v] = {xdist[vc.find(v)], ydist[hc.find(v)]};
    return pos;
  }
};

}  // namespace

Drawing compact(const PlaneGraph& g, const OrthogonalRepresentation& rep) {
  Drawing out;
  out.vertex.resize(g.n());
  out.polyline.resize(g.m());
  if (g.m() == 0) {
    out.vertex[0] = {0, 0};
    return out;
  }
  check_representation(g, rep);

  Builder b(g, rep);
  b.build();
  b.assign_directions();
  b.check_consistency();
  b.add_box();
  b.check_consistency();
  b.refine();
  b.check_consistency();
  auto pos = b.coordinates();

  // compress the grid to the coordinates actually used by the output
  std::vector<long long> xs, ys;
  auto note = [&](int v) {
    xs.push_back(pos[v].x);
    ys.push_back(pos[v].y);
  };
  for (VertexId v = 0; v < g.n(); ++v) note(v);
  for (EdgeId e = 0; e < g.m(); ++e)
    for (int bv : b.bend_vert[e]) note(bv);
  auto pack = [](std::vector<long long>& vals) {
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  };
  pack(xs);
  pack(ys);
  auto cx = [&](long long x) {
    return static_cast<long long>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
  };
  auto cy = [&](long long y) {
    return static_cast<long long>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin());
  };

  for (VertexId v = 0; v < g.n(); ++v) out.vertex[v] = {cx(pos[v].x), cy(pos[v].y)};
  for (EdgeId e = 0; e < g.m(); ++e) {
    auto& pl = out.polyline[e];
    pl.push_back(out.vertex[g.edge(e).u]);
    for (int bv : b.bend_vert[e]) pl.push_back({cx(pos[bv].x), cy(pos[bv].y)});
    pl.push_back(out.vertex[g.edge(e).v]);
  }
  return out;
}

}  // namespace unbent
