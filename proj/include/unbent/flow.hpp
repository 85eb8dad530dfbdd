#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unbent/graph.hpp"

namespace unbent {

// Where an arc of a Tamassia network comes from; lets callers map flow values
// back onto angles and bends.
struct ArcTag {
  enum class Kind { none, corner, bend };
  Kind kind = Kind::none;
  VertexId vertex = -1;  // corner arcs: target vertex and corner index
  int corner = -1;
  EdgeId edge = -1;       // bend arcs: crossed edge
  bool from_left = false; // bend arcs: tail is the face left of dart 2*edge
};

struct Arc {
  int tail = -1;
  int head = -1;
  long long lower = 0;
  long long capacity = 0;
  long long cost = 0;
  ArcTag tag;
};

// Node demands: positive consumes flow, negative supplies it (the paper's
// inverted convention). Demands must sum to zero.
struct FlowNetwork {
  int node_count = 0;
  std::vector<long long> demand;
  std::vector<Arc> arcs;

  void add_node(long long d) {
    demand.push_back(d);
    ++node_count;
  }
  int add_arc(Arc a) {
    arcs.push_back(a);
    return static_cast<int>(arcs.size()) - 1;
  }
};

struct Flow {
  std::vector<long long> value;  // per arc, lower <= value <= capacity
  long long cost = 0;
};

// Minimum-cost feasible flow via successive shortest augmenting paths with
// node potentials, exact integer arithmetic. Returns nullopt when infeasible.
std::optional<Flow> solve_min_cost(const FlowNetwork& net);

// Feasibility only; cost ignored.
bool check_feasible(const FlowNetwork& net);

// Recompute cost and verify balance and bounds; used by tests and validators.
bool flow_is_feasible(const FlowNetwork& net, const Flow& flow);

// Line-oriented debug dump, stable across runs.
std::string dump_network(const FlowNetwork& net);

}  // namespace unbent
