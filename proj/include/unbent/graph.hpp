#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unbent/error.hpp"

namespace unbent {

using VertexId = int;
using EdgeId = int;
using FaceId = int;
using Dart = int;  // 2*e = (u -> v), 2*e + 1 = (v -> u)

struct EdgeDef {
  VertexId u = -1;
  VertexId v = -1;
};

inline Dart dart_fwd(EdgeId e) { return 2 * e; }
inline Dart dart_rev(EdgeId e) { return 2 * e + 1; }
inline EdgeId dart_edge(Dart d) { return d / 2; }
inline Dart dart_twin(Dart d) { return d ^ 1; }

struct Face {
  FaceId id = -1;
  std::vector<Dart> boundary;  // darts in face order; the face lies left of each dart
  bool is_external = false;
  int degree() const { return static_cast<int>(boundary.size()); }
};

// Combinatorial embedding without degree restrictions. Faces are the orbits of
// d -> dart leaving head(d) along the rotation successor of edge(d); with
// counter-clockwise rotations this walks every face with its interior on the
// left (the external face is walked clockwise).
struct RotationSystem {
  int n = 0;
  std::vector<EdgeDef> edges;
  std::vector<std::vector<EdgeId>> rotation;  // CCW order of incident edges per vertex

  // derived by build_faces()
  std::vector<Face> faces;
  std::vector<FaceId> dart_face;        // face left of dart
  std::vector<std::vector<int>> edge_pos;  // edge_pos[v][i] redundant? see cpp

  int m() const { return static_cast<int>(edges.size()); }
  int degree(VertexId v) const { return static_cast<int>(rotation[v].size()); }
  VertexId tail(Dart d) const { return (d & 1) ? edges[d / 2].v : edges[d / 2].u; }
  VertexId head(Dart d) const { return (d & 1) ? edges[d / 2].u : edges[d / 2].v; }
  Dart dart_from(VertexId v, EdgeId e) const { return edges[e].u == v ? dart_fwd(e) : dart_rev(e); }

  // position of edge e in rotation[v]
  int rot_index(VertexId v, EdgeId e) const;
  // dart leaving `head(d)` along the rotation successor of edge(d); the next
  // dart of the face left of d
  Dart next_in_face(Dart d) const;
  Dart prev_in_face(Dart d) const;

  // derive the face orbits; throws errc::inconsistent_rotation when the
  // rotation lists do not match the edge set
  void build_faces();
  bool connected() const;
};

// A plane graph: connected simple graph of maximum degree 4 with a fixed
// combinatorial embedding and a designated external face.
struct PlaneGraph {
  RotationSystem rs;
  FaceId external_face = -1;

  int n() const { return rs.n; }
  int m() const { return rs.m(); }
  int degree(VertexId v) const { return rs.degree(v); }
  const std::vector<Face>& faces() const { return rs.faces; }
  const Face& face(FaceId f) const { return rs.faces[f]; }
  const EdgeDef& edge(EdgeId e) const { return rs.edges[e]; }
  VertexId tail(Dart d) const { return rs.tail(d); }
  VertexId head(Dart d) const { return rs.head(d); }
  FaceId face_left(Dart d) const { return rs.dart_face[d]; }
  FaceId face_of_edge_side(EdgeId e, bool left) const {
    return rs.dart_face[left ? dart_fwd(e) : dart_rev(e)];
  }

  // corner i at v sits between rotation[v][i] and rotation[v][i+1] (cyclic);
  // it belongs to the face orbit entered through the dart arriving at v along
  // rotation[v][i]
  FaceId corner_face(VertexId v, int i) const;
  int corner_count(VertexId v) const { return degree(v) == 0 ? 0 : degree(v); }

  bool structurally_equal(const PlaneGraph& other) const;
};

// External face designation: the face on `side` of edge `edge` directed u -> v.
struct ExternalFaceHint {
  EdgeId edge = 0;
  bool left = true;
};

PlaneGraph build_plane_graph(int vertex_count, std::vector<EdgeDef> edges,
                             std::vector<std::vector<EdgeId>> rotation,
                             ExternalFaceHint external_face_hint);

// Text format, one document per graph (see README):
//   plane4 v1
//   vertices <n>
//   edge <id> <u> <v>
//   rot <v> <edge ids CCW...>
//   external <edge-id> <left|right>
std::string serialize(const PlaneGraph& g);
PlaneGraph parse(const std::string& text);
PlaneGraph load_graph_file(const std::string& path);

// Flower graph F_k: inner k-cycle C, outer k-cycle C', petal edges {v_i,v'_i}
// and {v_i,v'_{i+1}}; 4-regular, embedded with the face bounded by C' external.
PlaneGraph flower(int k);

// Named fixture graphs used throughout the test corpus.
std::map<std::string, PlaneGraph> fixtures();
PlaneGraph fixture(const std::string& name);

// Same graph with a different designated external face.
PlaneGraph with_external_face(const PlaneGraph& g, FaceId f);

// Attachment vertex of the "gadget-h" fixture (degree 3, on its external face).
VertexId gadget_h_attachment();

// Deterministic connected plane graph with max degree <= 4: a random stacked
// triangulation pruned back below degree 5 (plus a few extra deletions for
// sparser shapes).
PlaneGraph random_plane_4graph(std::uint64_t seed, int n);

// Deterministic plane triconnected cubic graph grown from K4 by repeatedly
// inserting an edge between two distinct edges of a face. target_n is rounded
// up to the next realizable size (even, >= 4).
PlaneGraph random_triconnected_cubic(std::uint64_t seed, int target_n);

// Deterministic connected max-degree-4 graph without any embedding (for the
// star-arboricity corpus). Returns the edge list.
std::pair<int, std::vector<EdgeDef>> random_degree4_graph(std::uint64_t seed, int n);

}  // namespace unbent
