#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "vfwalk/embedding.hpp"
#include "vfwalk/errors.hpp"
#include "vfwalk/graph.hpp"

using namespace vfwalk;

TEST_CASE("square torus embedding has all quadrilateral faces") {
  for (int side : {3, 4, 5}) {
    EmbeddedGraph emb = torus_embedding(side);
    const Graph& g = emb.graph();
    CHECK(g.vertex_count() == side * side);
    CHECK(emb.face_count() == side * side);
    CHECK(emb.genus() == 1);
    for (const Face& f : emb.faces()) CHECK(f.size() == 4);

    // every arc lies on exactly one face boundary
    std::vector<int> seen(g.arc_count(), 0);
    for (const Face& f : emb.faces())
      for (int a : f.arcs) seen[a] += 1;
    CHECK(std::count(seen.begin(), seen.end(), 1) == g.arc_count());
    CHECK(is_circular(emb));
  }
}

TEST_CASE("torus faces are anchored at their lower-left vertex") {
  int side = 3;
  EmbeddedGraph emb = torus_embedding(side);
  TorusSpec spec{2, side};
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      std::vector<int> vs = emb.face_vertices(i * side + j);
      std::sort(vs.begin(), vs.end());
      std::vector<int> expect = {
          spec.vertex_index({i, j}),
          spec.vertex_index({(i + 1) % side, j}),
          spec.vertex_index({i, (j + 1) % side}),
          spec.vertex_index({(i + 1) % side, (j + 1) % side})};
      std::sort(expect.begin(), expect.end());
      CHECK(vs == expect);
    }
  }
}

TEST_CASE("square torus is self-dual under the anchor labels") {
  int side = 3;
  EmbeddedGraph emb = torus_embedding(side);
  Graph dual = dual_graph(emb);
  Graph torus = build_torus(TorusSpec{2, side});
  REQUIRE(dual.vertex_count() == torus.vertex_count());
  Matrix diff = adjacency_matrix(dual) - adjacency_matrix(torus);
  CHECK(diff.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("triangle on the sphere") {
  Graph c3 = cycle_graph(3);
  EmbeddedGraph emb = trace_faces(c3, default_rotation(c3));
  CHECK(emb.face_count() == 2);
  CHECK(emb.genus() == 0);
  for (const Face& f : emb.faces()) CHECK(f.size() == 3);
  CHECK(is_circular(emb));
  // both faces touch all three vertices, so the dual has parallel edges
  CHECK_THROWS_AS(dual_graph(emb), InvalidInput);
}

TEST_CASE("single edge folds into one bigon face") {
  Graph k2 = complete_graph(2);
  EmbeddedGraph emb = trace_faces(k2, default_rotation(k2));
  CHECK(emb.face_count() == 1);
  CHECK(emb.genus() == 0);
  CHECK(emb.faces()[0].size() == 2);
  // the lone face visits the edge from both sides: not a circular embedding
  CHECK(!is_circular(emb));
}

TEST_CASE("euler relation holds for a default K4 rotation") {
  Graph k4 = complete_graph(4);
  EmbeddedGraph emb = trace_faces(k4, default_rotation(k4));
  int n = k4.vertex_count(), m = k4.edge_count(), k = emb.face_count();
  CHECK(n - m + k == 2 - 2 * emb.genus());
  std::vector<int> seen(k4.arc_count(), 0);
  for (const Face& f : emb.faces())
    for (int a : f.arcs) seen[a] += 1;
  CHECK(std::count(seen.begin(), seen.end(), 1) == k4.arc_count());
}

TEST_CASE("face_of_arc agrees with the face lists") {
  EmbeddedGraph emb = torus_embedding(4);
  for (int f = 0; f < emb.face_count(); ++f)
    for (int a : emb.faces()[f].arcs) CHECK(emb.face_of_arc(a) == f);
}

TEST_CASE("rotation systems are validated") {
  Graph c3 = cycle_graph(3);
  CHECK_THROWS_AS(rotation_from_neighbor_lists(c3, {{1, 1}, {2, 0}, {0, 1}}),
                  InvalidInput);
  CHECK_THROWS_AS(rotation_from_neighbor_lists(c3, {{1}, {2, 0}, {0, 1}}),
                  InvalidInput);
  RotationSystem rot = rotation_from_neighbor_lists(c3, {{1, 2}, {2, 0}, {0, 1}});
  EmbeddedGraph emb = trace_faces(c3, rot);
  CHECK(emb.face_count() == 2);
}

TEST_CASE("torus embedding rejects bad sides") {
  CHECK_THROWS_AS(torus_embedding(2), InvalidInput);
  CHECK_THROWS_AS(torus_embedding(0), InvalidInput);
}
