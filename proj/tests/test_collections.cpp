#include <functional>
#include <numeric>
#include <set>

#include "doctest.h"
#include "unbent/collections.hpp"

using namespace unbent;

namespace {

std::vector<EdgeId> all_edges(const PlaneGraph& g) {
  std::vector<EdgeId> v(g.m());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// every induced subgraph has at most k(|V'|-1) edges (Nash-Williams)
bool nash_williams_ok(const PlaneGraph& g, int k) {
  int n = g.n();
  for (int mask = 1; mask < (1 << n); ++mask) {
    int nv = __builtin_popcount(mask), ne = 0;
    for (EdgeId e = 0; e < g.m(); ++e)
      if ((mask >> g.edge(e).u & 1) && (mask >> g.edge(e).v & 1)) ++ne;
    if (nv >= 1 && ne > k * (nv - 1)) return false;
  }
  return true;
}

bool is_forest_subset(const PlaneGraph& g, const std::vector<EdgeId>& f) {
  std::vector<int> p(g.n());
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  for (EdgeId e : f) {
    int a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) return false;
    p[a] = b;
  }
  return true;
}

}  // namespace

TEST_CASE("collection from forests: C4 split into two paths") {
  auto g = fixture("c4");
  auto c = collection_from_forests(g, {{0, 1}, {2, 3}});
  CHECK(c.size() == 2);
  CHECK(c.total_bends == 0);
  verify_collection(g, c);
}

TEST_CASE("collection from forests: single tree class") {
  auto g = fixture("p3");
  auto c = collection_from_forests(g, {all_edges(g)});
  CHECK(c.size() == 1);
  CHECK(c.total_bends == 0);
}

TEST_CASE("collection from forests rejects bad input") {
  auto g = fixture("c4");
  CHECK_THROWS_WITH_AS(collection_from_forests(g, {{0, 1, 2, 3}}),
                       doctest::Contains("NotAForest"), error);
  CHECK_THROWS_WITH_AS(collection_from_forests(g, {{0, 1}, {1, 2, 3}}),
                       doctest::Contains("NotAPartition"), error);
  CHECK_THROWS_WITH_AS(collection_from_forests(g, {{0, 1}, {2}}),
                       doctest::Contains("NotAPartition"), error);
}

TEST_CASE("K4: the best two-forest split has 12 bends in total") {
  auto g = fixture("k4");
  int best = -1;
  for (int mask = 0; mask < (1 << 6); ++mask) {
    std::vector<EdgeId> f0, f1;
    for (EdgeId e = 0; e < 6; ++e) ((mask >> e) & 1 ? f1 : f0).push_back(e);
    if (!is_forest_subset(g, f0) || !is_forest_subset(g, f1)) continue;
    auto r0 = representation_with_straight(g, f0);
    auto r1 = representation_with_straight(g, f1);
    REQUIRE(r0.has_value());
    REQUIRE(r1.has_value());
    int total = r0->total_bends() + r1->total_bends();
    if (best < 0 || total < best) best = total;
  }
  CHECK(best == 12);

  // and such a split yields a verified collection of total 12
  for (int mask = 0; mask < (1 << 6); ++mask) {
    std::vector<EdgeId> f0, f1;
    for (EdgeId e = 0; e < 6; ++e) ((mask >> e) & 1 ? f1 : f0).push_back(e);
    if (f0.empty() || f1.empty()) continue;
    if (!is_forest_subset(g, f0) || !is_forest_subset(g, f1)) continue;
    auto c = collection_from_forests(g, {f0, f1});
    if (c.total_bends == 12) return;
  }
  FAIL("no two-forest split of K4 with 12 bends found");
}

TEST_CASE("two-forest partition on fixtures") {
  CHECK(two_forest_partition(fixture("c4")).has_value());
  auto k4 = two_forest_partition(fixture("k4"));
  REQUIRE(k4.has_value());
  CHECK((*k4)[0].size() + (*k4)[1].size() == 6);
  CHECK(!two_forest_partition(fixture("f3")).has_value());  // m = 12 > 2n-2 = 10
}

TEST_CASE("forest partition agrees with the density criterion on random graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = random_plane_4graph(seed, 4 + static_cast<int>(seed % 8));
    CAPTURE(seed);
    auto part = two_forest_partition(g);
    CHECK(part.has_value() == nash_williams_ok(g, 2));
    if (part) {
      std::set<EdgeId> seen;
      for (int i : {0, 1}) {
        CHECK(is_forest_subset(g, (*part)[i]));
        for (EdgeId e : (*part)[i]) CHECK(seen.insert(e).second);
      }
      CHECK(static_cast<int>(seen.size()) == g.m());
    }
  }
}

TEST_CASE("schnyder collection on fixtures") {
  for (const char* name : {"k4", "c4", "p3", "k3", "prism", "cube", "f3", "f4", "k5-e"}) {
    CAPTURE(name);
    auto g = fixture(name);
    auto c = schnyder_collection(g);
    CHECK(c.size() <= 3);
    verify_collection(g, c);
  }
  CHECK(schnyder_collection(fixture("p3")).size() == 1);
  CHECK(schnyder_collection(fixture("f3")).size() == 3);
}

TEST_CASE("schnyder collection on random graphs") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    auto g = random_plane_4graph(seed, 4 + static_cast<int>(seed % 24));
    CAPTURE(seed);
    auto c = schnyder_collection(g);
    CHECK(c.size() <= 3);
    verify_collection(g, c);
  }
}

TEST_CASE("dense decomposition: sparse graphs yield nothing") {
  CHECK(decompose_dense(fixture("c4")).empty());
  CHECK(decompose_dense(fixture("p3")).empty());
  CHECK(decompose_dense(fixture("cube")).empty());  // m = 12 < 2n-1 = 15
}

TEST_CASE("dense decomposition rejects overdense input") {
  CHECK_THROWS_WITH_AS(decompose_dense(fixture("f3")), doctest::Contains("DensityTooHigh"), error);
}

TEST_CASE("dense decomposition: two dense cores over a middle vertex") {
  // K5-e cores joined through a degree-2 middle vertex by two bridges;
  // m = 9 + 9 + 2 = 20 = 2n - 2 with n = 11
  auto k5e = fixture("k5-e");
  int n = 11;
  std::vector<EdgeDef> edges;
  std::vector<std::vector<EdgeId>> rot(n);
  auto add_copy = [&](int base) {
    int ebase = static_cast<int>(edges.size());
    for (EdgeId e = 0; e < k5e.m(); ++e)
      edges.push_back({base + k5e.edge(e).u, base + k5e.edge(e).v});
    for (VertexId v = 0; v < k5e.n(); ++v)
      for (EdgeId e : k5e.rs.rotation[v]) rot[base + v].push_back(ebase + e);
  };
  add_copy(0);
  add_copy(5);
  // vertex 3 of each copy has degree 3; 10 is the middle vertex
  EdgeId b1 = static_cast<EdgeId>(edges.size());
  edges.push_back({3, 10});
  EdgeId b2 = static_cast<EdgeId>(edges.size());
  edges.push_back({8, 10});
  rot[3].push_back(b1);
  rot[8].push_back(b2);
  rot[10] = {b1, b2};
  auto g = build_plane_graph(n, edges, rot, {0, false});
  REQUIRE(g.m() == 2 * g.n() - 2);

  auto members = decompose_dense(g);
  REQUIRE(members.size() == 2);
  for (const auto& mem : members) {
    CHECK(mem.m() >= 2 * mem.n() - 1);
    CHECK(mem.n() == 5 + 6);  // core plus one gadget copy
  }
}

TEST_CASE("gadget H admits a straightenable 2-coloring") {
  auto h = fixture("gadget-h");
  auto col = find_straightenable_2coloring(h);
  REQUIRE(col.has_value());
  CHECK(is_balanced(h, *col));
}

TEST_CASE("face demands") {
  auto f8 = flower(8);
  auto demands = face_demands(f8, AngleAssignment::zeros(f8));
  int minus4 = 0, plus1 = 0, ext = 0;
  for (auto& [f, d] : demands) {
    if (f == f8.external_face) {
      CHECK(d == -12);
      ++ext;
    } else if (d == -4) {
      ++minus4;
    } else {
      CHECK(d == 1);
      ++plus1;
    }
  }
  CHECK(minus4 == 1);  // the inner 8-gon
  CHECK(plus1 == 16);
  CHECK(ext == 1);
  long long sum = 0;
  for (auto& [f, d] : demands) sum += d;
  CHECK(sum == 0);

  // assignments must cover exactly the free angles
  auto k3 = fixture("k3");
  CHECK_THROWS_AS(face_demands(k3, AngleAssignment::zeros(k3)), error);
  AngleAssignment a = AngleAssignment::zeros(k3);
  for (VertexId v = 0; v < 3; ++v) a.extra[v][0] = 2;
  auto d3 = face_demands(k3, a);
  long long s3 = 0;
  for (auto& [f, d] : d3) s3 += d;
  CHECK(s3 == 0);
}

TEST_CASE("forest colorings are balanced") {
  auto g = fixture("c4");
  EdgeColoring2 col{1, 2, 1, 2};
  CHECK(is_balanced(g, col));
}

TEST_CASE("monochromatic face boundary is balanced iff demand vanishes") {
  auto g = fixture("c4");
  EdgeColoring2 one_cycle{1, 1, 1, 1};  // encloses the inner quad, demand 0
  CHECK(is_balanced(g, one_cycle));

  auto k3 = fixture("k3");
  EdgeColoring2 tri{1, 1, 1};  // encloses a triangle of demand >= 1
  CHECK(!is_balanced(k3, tri));
}

TEST_CASE("no coloring of flower(3) is balanced (spot checks)") {
  auto g = flower(3);
  std::uint64_t state = 7;
  for (int it = 0; it < 50; ++it) {
    EdgeColoring2 col(g.m());
    for (int e = 0; e < g.m(); ++e) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      col[e] = 1 + static_cast<int>((state >> 40) & 1);
    }
    CAPTURE(it);
    CHECK(!is_balanced(g, col));
  }
}

TEST_CASE("unbent numbers of the named fixtures") {
  CHECK(unbent_number_small(fixture("c4")) == 1);
  CHECK(unbent_number_small(fixture("p3")) == 1);
  CHECK(unbent_number_small(fixture("k4")) == 2);
  CHECK(unbent_number_small(fixture("k3")) == 2);
  CHECK(unbent_number_small(fixture("f3")) == 3);
  CHECK(unbent_number_small(fixture("k5-e")) == 3);
  CHECK(unbent_number_small(fixture("octahedron-e")) == 3);
  CHECK(unbent_number_small(fixture("gadget-h")) == 2);
}

TEST_CASE("no balanced coloring of k5-e exists (512 colorings)") {
  auto g = fixture("k5-e");
  CHECK(!find_straightenable_2coloring(g).has_value());
  for (int mask = 0; mask < (1 << 9); ++mask) {
    EdgeColoring2 col(9);
    for (int e = 0; e < 9; ++e) col[e] = 1 + ((mask >> e) & 1);
    if (is_balanced(g, col)) {
      CAPTURE(mask);
      FAIL("k5-e must not admit a balanced coloring");
    }
  }
}

TEST_CASE("straightenable colorings are balanced (characterization, easy direction)") {
  for (const char* name : {"k4", "k3", "c4", "gadget-h", "cube", "prism", "f8"}) {
    CAPTURE(name);
    auto g = fixture(name);
    std::optional<EdgeColoring2> col;
    try {
      col = find_straightenable_2coloring(g, 20);
    } catch (const error&) {
      continue;  // beyond the guard
    }
    if (!col) continue;
    std::array<AngleAssignment, 2> witness;
    CHECK(is_balanced(g, *col, &witness));
    face_demands(g, witness[0]);
    face_demands(g, witness[1]);
  }
}

TEST_CASE("counterexample conditions") {
  CHECK(counterexample_conditions(fixture("k5-e")));          // (i)
  CHECK(counterexample_conditions(fixture("octahedron-e")));  // (i)
  CHECK(counterexample_conditions(flower(4)));                // (ii)
  CHECK(counterexample_conditions(flower(5)));                // (ii)
  CHECK(counterexample_conditions(flower(7)));                // (ii)
  CHECK(!counterexample_conditions(flower(8)));
  CHECK(!counterexample_conditions(fixture("c4")));
  CHECK(!counterexample_conditions(fixture("cube")));
  CHECK(!counterexample_conditions(fixture("k4")));
  CHECK(!counterexample_conditions(flower(3)));  // all faces triangles, m = 2n
}

TEST_CASE("counterexample conditions imply unbent number 3 on fixtures") {
  for (const char* name : {"k5-e", "octahedron-e", "f4"}) {
    CAPTURE(name);
    auto g = fixture(name);
    REQUIRE(counterexample_conditions(g));
    CHECK(unbent_number_small(g) == 3);
  }
}
