#include <functional>

#include "doctest.h"
#include "unbent/flow.hpp"

using namespace unbent;

namespace {

// Exhaustive minimum over all integer flows; usable for tiny networks only.
std::optional<long long> brute_min_cost(const FlowNetwork& net) {
  std::optional<long long> best;
  std::vector<long long> val(net.arcs.size(), 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == net.arcs.size()) {
      Flow f{val, 0};
      for (std::size_t a = 0; a < net.arcs.size(); ++a) f.cost += val[a] * net.arcs[a].cost;
      if (flow_is_feasible(net, f) && (!best || f.cost < *best)) best = f.cost;
      return;
    }
    for (long long x = net.arcs[i].lower; x <= net.arcs[i].capacity; ++x) {
      val[i] = x;
      go(i + 1);
    }
  };
  go(0);
  return best;
}

}  // namespace

TEST_CASE("forced single arc") {
  FlowNetwork net;
  net.add_node(-1);
  net.add_node(1);
  net.add_arc({0, 1, 0, 1, 3, {}});
  auto f = solve_min_cost(net);
  REQUIRE(f.has_value());
  CHECK(f->value[0] == 1);
  CHECK(f->cost == 3);
  CHECK(flow_is_feasible(net, *f));
}

TEST_CASE("zero capacity makes it infeasible") {
  FlowNetwork net;
  net.add_node(-1);
  net.add_node(1);
  net.add_arc({0, 1, 0, 0, 3, {}});
  CHECK(!solve_min_cost(net).has_value());
  CHECK(!check_feasible(net));
}

TEST_CASE("isolated demand node is infeasible") {
  FlowNetwork net;
  net.add_node(-2);
  net.add_node(2);
  net.add_node(0);
  net.add_arc({0, 2, 0, 5, 1, {}});
  CHECK(!check_feasible(net));
}

TEST_CASE("demand imbalance is an input error") {
  FlowNetwork net;
  net.add_node(1);
  net.add_node(2);
  CHECK_THROWS_WITH_AS(solve_min_cost(net), doctest::Contains("MalformedNetwork"), error);
}

TEST_CASE("lower bounds are shipped and reproduced") {
  FlowNetwork net;
  net.add_node(0);
  net.add_node(0);
  net.add_node(0);
  // a forced cycle with a lower bound: 0 -> 1 -> 2 -> 0
  net.add_arc({0, 1, 2, 4, 1, {}});
  net.add_arc({1, 2, 0, 4, 1, {}});
  net.add_arc({2, 0, 0, 4, 2, {}});
  auto f = solve_min_cost(net);
  REQUIRE(f.has_value());
  CHECK(f->value[0] == 2);
  CHECK(f->value[1] == 2);
  CHECK(f->value[2] == 2);
  CHECK(flow_is_feasible(net, *f));
}

TEST_CASE("solver matches exhaustive enumeration on small networks") {
  // deterministic family of tiny networks with <= 8 arcs, capacities <= 4
  std::uint64_t state = 12345;
  auto rnd = [&](int bound) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % bound);
  };
  int checked = 0;
  for (int it = 0; it < 200; ++it) {
    FlowNetwork net;
    int nodes = 2 + rnd(3);
    std::vector<long long> demand(nodes, 0);
    for (int i = 0; i + 1 < nodes; i += 2) {
      int d = rnd(3);
      demand[i] -= d;
      demand[i + 1] += d;
    }
    for (int i = 0; i < nodes; ++i) net.add_node(demand[i]);
    int arcs = 2 + rnd(7);
    for (int a = 0; a < arcs; ++a) {
      int u = rnd(nodes), v = rnd(nodes);
      if (u == v) continue;
      long long lo = rnd(2);
      long long cap = lo + rnd(4 - static_cast<int>(lo) + 1);
      net.add_arc({u, v, lo, cap, static_cast<long long>(rnd(4)), {}});
    }
    auto fast = solve_min_cost(net);
    auto slow = brute_min_cost(net);
    CHECK(fast.has_value() == slow.has_value());
    if (fast && slow) {
      CHECK(fast->cost == *slow);
      CHECK(flow_is_feasible(net, *fast));
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("deterministic output") {
  FlowNetwork net;
  net.add_node(-2);
  net.add_node(0);
  net.add_node(2);
  net.add_arc({0, 1, 0, 2, 1, {}});
  net.add_arc({1, 2, 0, 2, 1, {}});
  net.add_arc({0, 2, 0, 2, 2, {}});
  auto a = solve_min_cost(net);
  auto b = solve_min_cost(net);
  REQUIRE(a.has_value());
  CHECK(a->value == b->value);
  CHECK(dump_network(net) == dump_network(net));
}
