#pragma once

#include <vector>

#include "vfwalk/graph.hpp"

namespace vfwalk {

// Cyclic order of out-arcs around every vertex; determines an orientable
// embedding of the graph.
struct RotationSystem {
  std::vector<std::vector<int>> arc_order;  // arc ids, one ring per vertex
};

// Rotation given as neighbor vertices in cyclic order (the JSON form).
RotationSystem rotation_from_neighbor_lists(
    const Graph& g, const std::vector<std::vector<int>>& neighbor_order);

// Rotation in the graph's own out-arc order.
RotationSystem default_rotation(const Graph& g);

struct Face {
  std::vector<int> arcs;  // cyclic boundary walk
  int size() const { return static_cast<int>(arcs.size()); }
};

// Graph plus rotation plus the traced face set.  Faces are the orbits of
// next(e) = rotation-successor of e's reversal at the head of e; every arc
// lies on exactly one face.  Genus comes from n - m + k = 2 - 2g.
class EmbeddedGraph {
 public:
  EmbeddedGraph(Graph g, RotationSystem rot, std::vector<Face> faces);

  const Graph& graph() const { return g_; }
  const RotationSystem& rotation() const { return rot_; }
  const std::vector<Face>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int genus() const { return genus_; }
  int face_of_arc(int a) const { return face_of_arc_[a]; }
  // Boundary vertices of face f in walk order (arc origins).
  std::vector<int> face_vertices(int f) const;

 private:
  Graph g_;
  RotationSystem rot_;
  std::vector<Face> faces_;
  std::vector<int> face_of_arc_;
  int genus_ = 0;
};

EmbeddedGraph trace_faces(const Graph& g, const RotationSystem& rot);

// The square-lattice torus with rotation (+e1, +e2, -e1, -e2) at every
// vertex: N^2 quadrilateral faces, genus 1.  Faces are renumbered so that
// face i*N+j is the unit square whose lower-left corner is vertex (i, j),
// which realizes the self-dual correspondence face k <-> vertex k.
EmbeddedGraph torus_embedding(int side);

// True iff every face is bounded by a vertex-simple cycle (at least a
// triangle, no repeated boundary vertex).
bool is_circular(const EmbeddedGraph& emb);

// Face-adjacency graph: one vertex per face, one edge per primal edge whose
// two sides are distinct faces.  Throws if the result would have loops or
// parallel edges.
Graph dual_graph(const EmbeddedGraph& emb);

}  // namespace vfwalk
