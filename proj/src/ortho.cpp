#include "unbent/ortho.hpp"

#include <algorithm>
#include <sstream>

namespace unbent {

FlowNetwork build_network(const PlaneGraph& g) { return build_tamassia(g).net; }

TamassiaNetwork build_tamassia(const PlaneGraph& g) {
  TamassiaNetwork tn;
  tn.inf_capacity = 4LL * g.m() + 16;
  FlowNetwork& net = tn.net;
  // nodes: vertices 0..n-1, then faces n..n+f-1
  for (VertexId v = 0; v < g.n(); ++v) net.add_node(4 - g.degree(v));
  for (const Face& f : g.faces())
    net.add_node(f.id == g.external_face ? -4 - f.degree() : 4 - f.degree());

  auto face_node = [&](FaceId f) { return g.n() + f; };

  tn.corner_arc.resize(g.n());
  for (VertexId v = 0; v < g.n(); ++v) {
    tn.corner_arc[v].assign(g.corner_count(v), -1);
    for (int i = 0; i < g.corner_count(v); ++i) {
      Arc a;
      a.tail = face_node(g.corner_face(v, i));
      a.head = v;
      a.lower = 0;
      a.capacity = 3;
      a.cost = 0;
      a.tag = {ArcTag::Kind::corner, v, i, -1, false};
      tn.corner_arc[v][i] = net.add_arc(a);
    }
  }

  tn.bend_arc.assign(g.m(), {-1, -1});
  for (EdgeId e = 0; e < g.m(); ++e) {
    FaceId fl = g.face_left(dart_fwd(e));
    FaceId fr = g.face_left(dart_rev(e));
    if (fl == fr) continue;  // bridge
    Arc a;
    a.lower = 0;
    a.capacity = tn.inf_capacity;
    a.cost = 1;
    a.tail = face_node(fl);
    a.head = face_node(fr);
    a.tag = {ArcTag::Kind::bend, -1, -1, e, true};
    tn.bend_arc[e][0] = net.add_arc(a);
    a.tail = face_node(fr);
    a.head = face_node(fl);
    a.tag = {ArcTag::Kind::bend, -1, -1, e, false};
    tn.bend_arc[e][1] = net.add_arc(a);
  }
  return tn;
}

std::optional<Flow> solve_with_straight(const TamassiaNetwork& tn,
                                        const std::vector<char>& straight) {
  FlowNetwork net = tn.net;
  for (EdgeId e = 0; e < static_cast<int>(straight.size()); ++e) {
    if (!straight[e]) continue;
    for (int side : {0, 1})
      if (tn.bend_arc[e][side] >= 0) net.arcs[tn.bend_arc[e][side]].capacity = 0;
  }
  return solve_min_cost(net);
}

std::optional<long long> bends_with_straight(const TamassiaNetwork& tn,
                                             const std::vector<char>& straight) {
  auto flow = solve_with_straight(tn, straight);
  if (!flow) return std::nullopt;
  return flow->cost;
}

OrthogonalRepresentation flow_to_representation(const PlaneGraph& g, const TamassiaNetwork& tn,
                                                const Flow& flow) {
  OrthogonalRepresentation rep;
  rep.angle.resize(g.n());
  for (VertexId v = 0; v < g.n(); ++v) {
    rep.angle[v].resize(g.corner_count(v));
    for (int i = 0; i < g.corner_count(v); ++i)
      rep.angle[v][i] = 1 + static_cast<int>(flow.value[tn.corner_arc[v][i]]);
  }
  rep.bends.resize(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (tn.bend_arc[e][0] < 0) continue;
    long long r = flow.value[tn.bend_arc[e][0]];  // bends reflex in the left face
    long long l = flow.value[tn.bend_arc[e][1]];
    long long cancel = std::min(l, r);  // antiparallel units are never optimal
    r -= cancel;
    l -= cancel;
    rep.bends[e] = std::string(static_cast<std::size_t>(r), 'R') +
                   std::string(static_cast<std::size_t>(l), 'L');
  }
  check_representation(g, rep);
  return rep;
}

OrthogonalRepresentation min_bend_representation(const PlaneGraph& g) {
  auto rep = representation_with_straight(g, {});
  if (!rep) fail(errc::internal, "Tamassia network unexpectedly infeasible");
  return *rep;
}

std::optional<OrthogonalRepresentation> representation_with_straight(
    const PlaneGraph& g, const std::vector<EdgeId>& straight) {
  if (g.m() == 0) {
    OrthogonalRepresentation rep;
    rep.angle.resize(g.n());
    return rep;
  }
  TamassiaNetwork tn = build_tamassia(g);
  std::vector<char> mask(g.m(), 0);
  for (EdgeId e : straight) {
    if (e < 0 || e >= g.m()) fail(errc::bad_argument, "straight set references unknown edge");
    mask[e] = 1;
  }
  auto flow = solve_with_straight(tn, mask);
  if (!flow) return std::nullopt;
  auto rep = flow_to_representation(g, tn, *flow);
  for (EdgeId e = 0; e < g.m(); ++e)
    if (mask[e] && !rep.bends[e].empty()) fail(errc::internal, "straight edge came back bent");
  return rep;
}

namespace {

// L/R counts of edge e as seen when traversing dart d.
std::pair<int, int> lr_along(const OrthogonalRepresentation& rep, Dart d) {
  const std::string& s = rep.bends[dart_edge(d)];
  int l = static_cast<int>(std::count(s.begin(), s.end(), 'L'));
  int r = static_cast<int>(s.size()) - l;
  if (d & 1) std::swap(l, r);  // reversed direction swaps the turn senses
  return {l, r};
}

}  // namespace

void check_representation(const PlaneGraph& g, const OrthogonalRepresentation& rep) {
  if (static_cast<int>(rep.angle.size()) != g.n() ||
      static_cast<int>(rep.bends.size()) != g.m())
    fail(errc::internal, "representation size mismatch");
  for (VertexId v = 0; v < g.n(); ++v) {
    if (static_cast<int>(rep.angle[v].size()) != g.corner_count(v))
      fail(errc::internal, "corner count mismatch at vertex " + std::to_string(v));
    int sum = 0;
    for (int a : rep.angle[v]) {
      if (a < 1 || a > 4) fail(errc::internal, "angle out of range at vertex " + std::to_string(v));
      sum += a;
    }
    if (g.degree(v) > 0 && sum != 4)
      fail(errc::internal, "angles at vertex " + std::to_string(v) + " sum to " + std::to_string(sum));
  }
  for (EdgeId e = 0; e < g.m(); ++e)
    for (char c : rep.bends[e])
      if (c != 'L' && c != 'R') fail(errc::internal, "bad bend character");

  // face turning: sum of (2 - angle) over corners plus (convex - reflex) bends
  for (const Face& f : g.faces()) {
    if (f.boundary.empty()) continue;
    int turn = 0;
    for (Dart d : f.boundary) {
      VertexId v = g.head(d);
      int deg = g.degree(v);
      int i = (g.rs.rot_index(v, dart_edge(d)) + deg - 1) % deg;  // corner between d and next
      turn += 2 - rep.angle[v][i];
      auto [l, r] = lr_along(rep, d);
      turn += l - r;
    }
    int want = (f.id == g.external_face) ? -4 : 4;
    if (turn != want)
      fail(errc::internal, "face " + std::to_string(f.id) + " turns " + std::to_string(turn) +
                               ", expected " + std::to_string(want));
  }
}

std::string dump_representation(const PlaneGraph& g, const OrthogonalRepresentation& rep) {
  std::ostringstream out;
  out << "rep v1\n";
  out << "bends " << rep.total_bends() << "\n";
  for (VertexId v = 0; v < g.n(); ++v) {
    out << "angles " << v;
    for (int a : rep.angle[v]) out << " " << a;
    out << "\n";
  }
  for (EdgeId e = 0; e < g.m(); ++e)
    out << "bend " << e << " " << (rep.bends[e].empty() ? "-" : rep.bends[e]) << "\n";
  for (const Face& f : g.faces()) {
    out << "face " << f.id << (f.id == g.external_face ? " external" : "");
    for (Dart d : f.boundary) out << " " << g.tail(d) << (d & 1 ? ">r" : ">f") << dart_edge(d);
    out << "\n";
  }
  return out.str();
}

}  // namespace unbent
