#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "unbent/ortho.hpp"

namespace unbent {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(errc::internal, "drawing invalid: " + what); }

int seg_dir(GridPoint a, GridPoint b) {
  if (a.y == b.y && b.x > a.x) return 0;
  if (a.x == b.x && b.y > a.y) return 1;
  if (a.y == b.y && b.x < a.x) return 2;
  if (a.x == b.x && b.y < a.y) return 3;
  bad("segment is not axis-parallel or has zero length");
}

struct Seg {
  GridPoint a, b;
  EdgeId edge;
  bool horizontal() const { return a.y == b.y; }
};

// points of edge e in the direction of dart d
std::vector<GridPoint> points_along(const Drawing& dr, Dart d) {
  std::vector<GridPoint> pts = dr.polyline[dart_edge(d)];
  if (d & 1) std::reverse(pts.begin(), pts.end());
  return pts;
}

}  // namespace

void validate_drawing(const PlaneGraph& g, const OrthogonalRepresentation& rep, const Drawing& d) {
  check_representation(g, rep);
  if (static_cast<int>(d.vertex.size()) != g.n() ||
      static_cast<int>(d.polyline.size()) != g.m())
    bad("size mismatch");
  if (g.m() == 0) return;

  // polylines: endpoints at their vertices, corners matching the bend strings
  std::vector<Seg> segs;
  for (EdgeId e = 0; e < g.m(); ++e) {
    const auto& pl = d.polyline[e];
    if (pl.size() != rep.bends[e].size() + 2) bad("polyline length vs bend string");
    if (!(pl.front() == d.vertex[g.edge(e).u]) || !(pl.back() == d.vertex[g.edge(e).v]))
      bad("polyline does not join its endpoints");
    for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
      seg_dir(pl[i], pl[i + 1]);  // throws unless axis-parallel, nonzero
      segs.push_back({pl[i], pl[i + 1], e});
    }
    for (std::size_t i = 0; i + 2 < pl.size(); ++i) {
      int din = seg_dir(pl[i], pl[i + 1]);
      int dout = seg_dir(pl[i + 1], pl[i + 2]);
      int turn = ((dout - din) % 4 + 4) % 4;
      char want = rep.bends[e][i];
      if (!((turn == 1 && want == 'L') || (turn == 3 && want == 'R')))
        bad("bend " + std::to_string(i) + " of edge " + std::to_string(e) +
            " does not match its bend string");
    }
  }

  // embedding faithfulness: directions around each vertex recover the rotation
  // and the corner angles
  for (VertexId v = 0; v < g.n(); ++v) {
    int deg = g.degree(v);
    std::vector<int> dir(deg);
    std::set<int> used;
    for (int i = 0; i < deg; ++i) {
      EdgeId e = g.rs.rotation[v][i];
      auto pts = points_along(d, g.rs.dart_from(v, e));  // leaving v
      dir[i] = seg_dir(pts[0], pts[1]);
      if (!used.insert(dir[i]).second) bad("two edges leave vertex " + std::to_string(v) +
                                           " in the same direction");
    }
    for (int i = 0; i < deg; ++i) {
      // corner i sweeps CCW from rotation[i] to rotation[i+1]
      int a = ((dir[(i + 1) % deg] - dir[i]) % 4 + 4) % 4;
      if (a == 0) a = 4;
      if (a != rep.angle[v][i])
        bad("angle at vertex " + std::to_string(v) + " corner " + std::to_string(i) +
            " is " + std::to_string(a) + ", representation says " +
            std::to_string(rep.angle[v][i]));
    }
  }

  // planarity: no two segments share any point other than a legal junction
  std::map<std::pair<long long, long long>, VertexId> at;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (!at.emplace(std::make_pair(d.vertex[v].x, d.vertex[v].y), v).second)
      bad("two vertices share a point");
  }
  auto joint_ok = [&](const Seg& s1, const Seg& s2, GridPoint p) {
    bool end1 = (p == s1.a || p == s1.b), end2 = (p == s2.a || p == s2.b);
    if (!end1 || !end2) return false;
    if (s1.edge == s2.edge) return true;  // consecutive segments share a bend
    auto it = at.find({p.x, p.y});
    if (it == at.end()) return false;
    VertexId v = it->second;
    auto touches = [&](EdgeId e) { return g.edge(e).u == v || g.edge(e).v == v; };
    return touches(s1.edge) && touches(s2.edge);
  };
  auto norm = [](const Seg& s) {
    Seg t = s;
    if (t.b.x < t.a.x || t.b.y < t.a.y) std::swap(t.a, t.b);
    return t;
  };
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      Seg s = norm(segs[i]), t = norm(segs[j]);
      if (s.horizontal() == t.horizontal()) {
        bool h = s.horizontal();
        long long sf = h ? s.a.y : s.a.x, tf = h ? t.a.y : t.a.x;
        if (sf != tf) continue;
        long long s1 = h ? s.a.x : s.a.y, s2 = h ? s.b.x : s.b.y;
        long long t1 = h ? t.a.x : t.a.y, t2 = h ? t.b.x : t.b.y;
        long long lo = std::max(s1, t1), hi = std::min(s2, t2);
        if (lo > hi) continue;
        if (lo < hi) bad("collinear segments overlap");
        GridPoint p = h ? GridPoint{lo, sf} : GridPoint{sf, lo};
        if (!joint_ok(segs[i], segs[j], p)) bad("segments touch at a non-junction point");
      } else {
        const Seg& hs = s.horizontal() ? s : t;
        const Seg& vs = s.horizontal() ? t : s;
        if (vs.a.x < hs.a.x || vs.a.x > hs.b.x) continue;
        if (hs.a.y < vs.a.y || hs.a.y > vs.b.y) continue;
        GridPoint p{vs.a.x, hs.a.y};
        if (!joint_ok(segs[i], segs[j], p)) bad("segments cross or T-touch");
      }
    }
  }

  // the designated external face must be the unbounded one: its boundary walk
  // is the only clockwise (non-positive signed area) orbit
  for (const Face& f : g.faces()) {
    long long area2 = 0;
    std::vector<GridPoint> poly;
    for (Dart dd : f.boundary) {
      auto pts = points_along(d, dd);
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) poly.push_back(pts[i]);
    }
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const GridPoint& p = poly[i];
      const GridPoint& q = poly[(i + 1) % poly.size()];
      area2 += p.x * q.y - q.x * p.y;
    }
    bool external = f.id == g.external_face;
    bool tree = g.m() == g.n() - 1;  // single face of zero area
    if (external && !tree && area2 >= 0) bad("external face is not the unbounded region");
    if (!external && area2 <= 0) bad("inner face " + std::to_string(f.id) + " drawn clockwise");
  }
}

}  // namespace unbent
