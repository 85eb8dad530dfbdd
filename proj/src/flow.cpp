#include "unbent/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

namespace unbent {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

struct ResidualArc {
  int head;
  long long cap;
  long long cost;
  int partner;  // index of the reverse residual arc
};

struct Solver {
  int n;
  std::vector<std::vector<int>> adj;  // residual arc indices per node
  std::vector<ResidualArc> res;

  explicit Solver(int nodes) : n(nodes), adj(nodes) {}

  int add(int u, int v, long long cap, long long cost) {
    int a = static_cast<int>(res.size());
    res.push_back({v, cap, cost, a + 1});
    res.push_back({u, 0, -cost, a});
    adj[u].push_back(a);
    adj[v].push_back(a + 1);
    return a;
  }

  // Dijkstra with potentials; reduced costs stay non-negative because all
  // original costs are non-negative and potentials track shortest distances.
  bool augment(int s, int t, std::vector<long long>& pot, long long& pushed,
               long long& cost_out) {
    std::vector<long long> dist(n, kInf);
    std::vector<int> pre(n, -1);
    dist[s] = 0;
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.push({0, s});
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d != dist[v]) continue;
      for (int ai : adj[v]) {
        const ResidualArc& a = res[ai];
        if (a.cap <= 0) continue;
        long long nd = d + a.cost + pot[v] - pot[a.head];
        if (nd < dist[a.head]) {
          dist[a.head] = nd;
          pre[a.head] = ai;
          pq.push({nd, a.head});
        }
      }
    }
    if (dist[t] >= kInf) return false;
    for (int v = 0; v < n; ++v)
      if (dist[v] < kInf) pot[v] += dist[v];
    long long bottleneck = kInf;
    for (int v = t; v != s;) {
      const ResidualArc& a = res[pre[v]];
      bottleneck = std::min(bottleneck, a.cap);
      v = res[a.partner].head;
    }
    for (int v = t; v != s;) {
      ResidualArc& a = res[pre[v]];
      a.cap -= bottleneck;
      res[a.partner].cap += bottleneck;
      cost_out += bottleneck * a.cost;
      v = res[a.partner].head;
    }
    pushed += bottleneck;
    return true;
  }
};

void validate_network(const FlowNetwork& net) {
  if (static_cast<int>(net.demand.size()) != net.node_count)
    fail(errc::malformed_network, "demand vector size mismatch");
  long long sum = 0;
  for (long long d : net.demand) sum += d;
  if (sum != 0) fail(errc::malformed_network, "node demands sum to " + std::to_string(sum));
  for (const Arc& a : net.arcs) {
    if (a.tail < 0 || a.tail >= net.node_count || a.head < 0 || a.head >= net.node_count)
      fail(errc::malformed_network, "arc endpoint out of range");
    if (a.lower < 0 || a.lower > a.capacity)
      fail(errc::malformed_network, "arc bounds violated (lower > capacity or negative)");
    if (a.cost < 0) fail(errc::malformed_network, "negative arc costs are not supported");
  }
}

}  // namespace

std::optional<Flow> solve_min_cost(const FlowNetwork& net) {
  validate_network(net);
  int n = net.node_count;
  // ship lower bounds, then solve the remaining zero-lower-bound problem
  std::vector<long long> excess(net.demand.begin(), net.demand.end());
  for (const Arc& a : net.arcs) {
    excess[a.head] -= a.lower;
    excess[a.tail] += a.lower;
  }

  Solver solver(n + 2);
  int src = n, sink = n + 1;
  std::vector<int> arc_res(net.arcs.size(), -1);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const Arc& a = net.arcs[i];
    if (a.capacity - a.lower > 0)
      arc_res[i] = solver.add(a.tail, a.head, a.capacity - a.lower, a.cost);
  }
  long long need = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] < 0) {
      solver.add(src, v, -excess[v], 0);
      need += -excess[v];
    } else if (excess[v] > 0) {
      solver.add(v, sink, excess[v], 0);
    }
  }

  std::vector<long long> pot(n + 2, 0);
  long long pushed = 0, cost = 0;
  while (pushed < need) {
    if (!solver.augment(src, sink, pot, pushed, cost)) break;
  }
  if (pushed < need) return std::nullopt;

  Flow flow;
  flow.value.resize(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const Arc& a = net.arcs[i];
    long long sent = 0;
    if (arc_res[i] >= 0) sent = (a.capacity - a.lower) - solver.res[arc_res[i]].cap;
    flow.value[i] = a.lower + sent;
  }
  flow.cost = 0;
  for (std::size_t i = 0; i < net.arcs.size(); ++i)
    flow.cost += flow.value[i] * net.arcs[i].cost;
  return flow;
}

bool check_feasible(const FlowNetwork& net) {
  FlowNetwork zero_cost = net;
  for (Arc& a : zero_cost.arcs) a.cost = 0;
  return solve_min_cost(zero_cost).has_value();
}

bool flow_is_feasible(const FlowNetwork& net, const Flow& flow) {
  if (flow.value.size() != net.arcs.size()) return false;
  std::vector<long long> balance(net.node_count, 0);
  long long cost = 0;
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const Arc& a = net.arcs[i];
    long long x = flow.value[i];
    if (x < a.lower || x > a.capacity) return false;
    balance[a.head] += x;
    balance[a.tail] -= x;
    cost += x * a.cost;
  }
  for (int v = 0; v < net.node_count; ++v)
    if (balance[v] != net.demand[v]) return false;
  return cost == flow.cost;
}

std::string dump_network(const FlowNetwork& net) {
  std::ostringstream out;
  out << "network nodes " << net.node_count << " arcs " << net.arcs.size() << "\n";
  for (int v = 0; v < net.node_count; ++v) out << "node " << v << " demand " << net.demand[v] << "\n";
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const Arc& a = net.arcs[i];
    out << "arc " << i << " " << a.tail << " -> " << a.head << " lower " << a.lower << " cap "
        << a.capacity << " cost " << a.cost;
    if (a.tag.kind == ArcTag::Kind::corner)
      out << " corner v" << a.tag.vertex << "#" << a.tag.corner;
    if (a.tag.kind == ArcTag::Kind::bend)
      out << " bend e" << a.tag.edge << (a.tag.from_left ? " from-left" : " from-right");
    out << "\n";
  }
  return out.str();
}

}  // namespace unbent
