#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unbent/flow.hpp"
#include "unbent/graph.hpp"

namespace unbent {

// Angles and bends refining the embedding of a plane 4-graph.
//
// angle[v][i] is the 90-degree-unit angle of corner i at v (the corner between
// rotation[v][i] and rotation[v][i+1], swept CCW); the angles at a vertex sum
// to 4. bends[e] records the turns of edge e traversed from edge(e).u to
// edge(e).v, 'L' = left turn (convex on the left face). The opposite direction
// is the reverse string with L and R swapped.
struct OrthogonalRepresentation {
  std::vector<std::vector<int>> angle;
  std::vector<std::string> bends;

  int total_bends() const {
    int t = 0;
    for (const auto& s : bends) t += static_cast<int>(s.size());
    return t;
  }
};

struct GridPoint {
  long long x = 0;
  long long y = 0;
  bool operator==(const GridPoint&) const = default;
};

// Integer orthogonal drawing: vertex positions plus one axis-parallel polyline
// per edge (endpoints included, corners = bends).
struct Drawing {
  std::vector<GridPoint> vertex;
  std::vector<std::vector<GridPoint>> polyline;
};

// Tamassia's network for g under the paper's inverted flow direction.
//
// Normalization (the paper's vertex demand "4" includes one mandatory 90° per
// corner, which a flow with demands cannot express directly): a corner arc
// face->vertex carries angle-1 (lower 0, capacity 3, cost 0), so vertices
// demand their 4-deg(v) free angles. Face demands are the paper's: inner
// 4-deg(f), external -4-deg(f_ext). Each non-bridge edge gets two antiparallel
// face-face arcs of cost 1; flow on (left->right) of the dart u->v counts
// bends reflex in the left face ('R' turns), the reverse arc counts 'L' turns.
// Bridges never bend (both sides are one face; such bends cancel in every
// face-turning identity), so they get no bend arcs.
FlowNetwork build_network(const PlaneGraph& g);

// Network plus arc lookup tables, so straight-edge variants can be solved
// without rebuilding.
struct TamassiaNetwork {
  FlowNetwork net;
  std::vector<std::vector<int>> corner_arc;        // [v][i] -> arc index
  std::vector<std::array<int, 2>> bend_arc;        // [e] -> {left->right, right->left}, -1 for bridges
  long long inf_capacity = 0;                      // sentinel used as "unbounded"
};

TamassiaNetwork build_tamassia(const PlaneGraph& g);

// Min-cost flow of the network where every edge in `straight` has its bend
// arcs removed; nullopt when no such representation exists.
std::optional<Flow> solve_with_straight(const TamassiaNetwork& tn,
                                        const std::vector<char>& straight_edge_mask);

OrthogonalRepresentation flow_to_representation(const PlaneGraph& g, const TamassiaNetwork& tn,
                                                const Flow& flow);

// Bend-minimal representation; always exists for plane 4-graphs.
OrthogonalRepresentation min_bend_representation(const PlaneGraph& g);

// Min-cost representation with every edge of S straight, if one exists.
std::optional<OrthogonalRepresentation> representation_with_straight(
    const PlaneGraph& g, const std::vector<EdgeId>& straight);

// Cost-only variant (the oracle hot path).
std::optional<long long> bends_with_straight(const TamassiaNetwork& tn,
                                             const std::vector<char>& straight_edge_mask);

// Throws errc::internal with a description when an invariant fails.
void check_representation(const PlaneGraph& g, const OrthogonalRepresentation& rep);

// Stable text dump (per-face corner lists with angles and bend strings).
std::string dump_representation(const PlaneGraph& g, const OrthogonalRepresentation& rep);

// Grid drawing realizing the representation: bends become unit corners, all
// faces stay combinatorially intact. Rectangular refinement + longest paths.
Drawing compact(const PlaneGraph& g, const OrthogonalRepresentation& rep);

// SVG 1.1 document; edges in `straight_edges` are stroked red, the rest blue.
std::string render_svg(const PlaneGraph& g, const Drawing& d,
                       const std::vector<EdgeId>& straight_edges);

// Planarity (no two segments share interior points), axis-parallelism,
// embedding faithfulness (rotations and angles recovered from the geometry),
// bend-string fidelity and external-face orientation. Throws errc::internal.
void validate_drawing(const PlaneGraph& g, const OrthogonalRepresentation& rep, const Drawing& d);

}  // namespace unbent
