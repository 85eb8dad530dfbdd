#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "unbent/ortho.hpp"

namespace unbent {

// A set of drawings of one plane graph in which every edge is straight at
// least once. straight_sets[i] lists the edges drawing i was asked to keep
// straight; coverage picks, per edge, a drawing where it is bend-free.
struct UnbentCollection {
  std::vector<OrthogonalRepresentation> reps;
  std::vector<Drawing> drawings;
  std::vector<std::vector<EdgeId>> straight_sets;
  std::vector<int> coverage;
  int total_bends = 0;

  int size() const { return static_cast<int>(reps.size()); }
};

// Re-validates everything: coverage witnesses, representation invariants,
// drawing validity, recomputed bend totals. Throws errc::internal.
void verify_collection(const PlaneGraph& g, const UnbentCollection& c);

// One drawing per forest, each forest drawn straight (always feasible).
// Empty classes are dropped.
UnbentCollection collection_from_forests(const PlaneGraph& g,
                                         const std::vector<std::vector<EdgeId>>& forests);

// Size <= 3 collection: triangulate, partition the triangulation's inner
// edges into three trees by a Schnyder realizer, restrict to the original
// edges and draw each forest straight.
UnbentCollection schnyder_collection(const PlaneGraph& g);

// Exact partition of the edges into k forests (matroid-union augmentation);
// nullopt when none exists. Returns a forest index per edge.
std::optional<std::vector<int>> forest_partition(int n, const std::vector<EdgeDef>& edges, int k);

std::optional<std::array<std::vector<EdgeId>, 2>> two_forest_partition(const PlaneGraph& g);

// Dense cores (|E| >= 2|V|-1 after gadget attachment) obtained by splitting
// at all 1- and 2-edge cuts; cut stubs end in a copy of the gadget H.
// Requires m <= 2n-2.
std::vector<PlaneGraph> decompose_dense(const PlaneGraph& g);

// color per edge, values 1 or 2
using EdgeColoring2 = std::vector<int>;

// Distribution of every vertex's 4-deg(v) free angles over its corners.
struct AngleAssignment {
  std::vector<std::vector<int>> extra;  // extra[v][i] angles to corner i of v

  static AngleAssignment zeros(const PlaneGraph& g);
};

// assigned angles + (4 - deg f), external face -4 - deg(f_ext) + assigned
std::map<FaceId, long long> face_demands(const PlaneGraph& g, const AngleAssignment& a);

// Faces strictly inside the cycle (the external face is never enclosed).
std::vector<FaceId> enclosed_faces(const PlaneGraph& g, const std::vector<EdgeId>& cycle_edges);

// All simple cycles (as edge-id lists) of the subgraph formed by `edges`.
std::vector<std::vector<EdgeId>> simple_cycles_of_subgraph(const PlaneGraph& g,
                                                           const std::vector<EdgeId>& edges,
                                                           std::size_t limit = 200000);

// True iff for each color some angle assignment makes every monochromatic
// cycle enclose faces of total demand zero. Witness assignments optional.
bool is_balanced(const PlaneGraph& g, const EdgeColoring2& coloring,
                 std::array<AngleAssignment, 2>* witness = nullptr);

// A 2-coloring whose two classes are both straightenable (equivalently: a
// size-2 unbent collection exists), found by feasibility-pruned search.
// Shortcut: a partition into two forests, when one exists. The guard bounds
// the search (errc::too_large beyond it).
std::optional<EdgeColoring2> find_straightenable_2coloring(const PlaneGraph& g, int guard_m = 26);

// 1, 2 or 3: zero-bend test, then the size-2 search, else 3 (always
// attainable). Throws errc::too_large past the guard.
int unbent_number_small(const PlaneGraph& g, int guard_m = 26);

// Sufficient conditions for un(g) = 3: (i) m = 2n-1 and every inner face a
// triangle; (ii) m = 2n, exactly one non-triangle inner face f, and f shares
// an edge with the external face or deg(f) <= 7.
bool counterexample_conditions(const PlaneGraph& g);

}  // namespace unbent
