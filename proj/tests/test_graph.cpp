#include <set>

#include "doctest.h"
#include "unbent/graph.hpp"

using namespace unbent;

namespace {

int max_degree(const PlaneGraph& g) {
  int d = 0;
  for (VertexId v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
  return d;
}

void check_euler(const PlaneGraph& g) {
  CHECK(g.n() - g.m() + static_cast<int>(g.faces().size()) == 2);
  int degsum = 0;
  for (const Face& f : g.faces()) degsum += f.degree();
  CHECK(degsum == 2 * g.m());
}

}  // namespace

TEST_CASE("single edge has one face of degree 2") {
  auto g = build_plane_graph(2, {{0, 1}}, {{0}, {0}}, {0, true});
  REQUIRE(g.faces().size() == 1);
  CHECK(g.face(0).degree() == 2);
}

TEST_CASE("C4 has two faces of degree 4") {
  auto g = fixture("c4");
  REQUIRE(g.faces().size() == 2);
  CHECK(g.face(0).degree() == 4);
  CHECK(g.face(1).degree() == 4);
  check_euler(g);
}

TEST_CASE("K4 has four triangular faces") {
  auto g = fixture("k4");
  REQUIRE(g.faces().size() == 4);
  for (const Face& f : g.faces()) CHECK(f.degree() == 3);
  check_euler(g);
}

TEST_CASE("degree validation") {
  // a 5-star
  CHECK_THROWS_WITH_AS(
      build_plane_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}},
                        {{0, 1, 2, 3, 4}, {0}, {1}, {2}, {3}, {4}}, {0, true}),
      doctest::Contains("DegreeExceeded"), error);
}

TEST_CASE("disconnected input is rejected") {
  CHECK_THROWS_AS(build_plane_graph(4, {{0, 1}, {2, 3}}, {{0}, {0}, {1}, {1}}, {0, true}), error);
}

TEST_CASE("bad rotation is rejected") {
  // vertex 1 misses edge 1
  CHECK_THROWS_WITH_AS(
      build_plane_graph(3, {{0, 1}, {1, 2}}, {{0}, {0}, {1}}, {0, true}),
      doctest::Contains("InconsistentRotation"), error);
}

TEST_CASE("non-planar rotation fails the Euler check") {
  // K4 with one rotation flipped produces a genus-1 embedding
  auto edges = std::vector<EdgeDef>{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};
  auto rot = std::vector<std::vector<EdgeId>>{{0, 3, 2}, {1, 4, 0}, {2, 5, 1}, {5, 4, 3}};
  CHECK_THROWS_WITH_AS(build_plane_graph(4, edges, rot, {0, true}),
                       doctest::Contains("Euler"), error);
}

TEST_CASE("flower graphs") {
  auto f3 = flower(3);
  CHECK(f3.n() == 6);
  CHECK(f3.m() == 12);
  CHECK(f3.faces().size() == 8);
  for (int k = 3; k <= 8; ++k) {
    auto g = flower(k);
    CHECK(g.n() == 2 * k);
    CHECK(g.m() == 4 * k);
    for (VertexId v = 0; v < g.n(); ++v) CHECK(g.degree(v) == 4);
    check_euler(g);
    CHECK(g.face(g.external_face).degree() == k);
  }
  CHECK_THROWS_AS(flower(2), error);
}

TEST_CASE("fixture inventory") {
  auto all = fixtures();
  CHECK(all.at("k5-e").n() == 5);
  CHECK(all.at("k5-e").m() == 9);
  CHECK(max_degree(all.at("k5-e")) == 4);
  CHECK(all.at("octahedron-e").n() == 6);
  CHECK(all.at("octahedron-e").m() == 11);
  CHECK(all.at("octahedron-e").face(all.at("octahedron-e").external_face).degree() == 4);
  CHECK(all.at("gadget-h").m() == 2 * all.at("gadget-h").n() - 1);
  CHECK(all.at("gadget-h").face(all.at("gadget-h").external_face).degree() == 3);
  CHECK(all.at("gadget-h").degree(gadget_h_attachment()) == 3);
  auto cube = all.at("cube");
  CHECK(cube.n() == 8);
  CHECK(cube.m() == 12);
  for (const Face& f : cube.faces()) CHECK(f.degree() == 4);
  auto prism = all.at("prism");
  CHECK(prism.face(prism.external_face).degree() == 4);
  for (auto& [name, g] : all) {
    CAPTURE(name);
    check_euler(g);
    CHECK(max_degree(g) <= 4);
  }
}

TEST_CASE("serialize/parse round trip") {
  for (const char* name : {"c4", "k4", "prism", "cube", "octahedron-e", "f4", "p3"}) {
    CAPTURE(name);
    auto g = fixture(name);
    auto h = parse(serialize(g));
    CHECK(g.structurally_equal(h));
    CHECK(serialize(g) == serialize(h));
  }
}

TEST_CASE("parse validation errors carry line information") {
  CHECK_THROWS_WITH_AS(parse("plane4 v1\nvertices 2\nedge 0 0 1\nrot 0 0\nrot 1\nexternal 0 left\n"),
                       doctest::Contains("InconsistentRotation"), error);
  CHECK_THROWS_WITH_AS(parse("plane4 v2\n"), doctest::Contains("line 1"), error);
  CHECK_THROWS_WITH_AS(parse("plane4 v1\nvertices 1\nbogus 3\n"), doctest::Contains("line 3"),
                       error);
  // degree-5 vertex
  CHECK_THROWS_WITH_AS(
      parse("plane4 v1\nvertices 6\nedge 0 0 1\nedge 1 0 2\nedge 2 0 3\nedge 3 0 4\nedge 4 0 5\n"
            "rot 0 0 1 2 3 4\nrot 1 0\nrot 2 1\nrot 3 2\nrot 4 3\nrot 5 4\nexternal 0 left\n"),
      doctest::Contains("DegreeExceeded"), error);
}

TEST_CASE("random plane 4-graphs validate and are deterministic") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto g = random_plane_4graph(seed, 3 + static_cast<int>(seed % 25));
    auto h = random_plane_4graph(seed, 3 + static_cast<int>(seed % 25));
    CHECK(g.structurally_equal(h));
    CHECK(max_degree(g) <= 4);
    check_euler(g);
  }
}

TEST_CASE("random triconnected cubic generator") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto g = random_triconnected_cubic(seed, 4 + 2 * static_cast<int>(seed % 8));
    for (VertexId v = 0; v < g.n(); ++v) CHECK(g.degree(v) == 3);
    check_euler(g);
  }
}
