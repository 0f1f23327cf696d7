#include "vfwalk/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "vfwalk/errors.hpp"

namespace vfwalk {

RotationSystem rotation_from_neighbor_lists(
    const Graph& g, const std::vector<std::vector<int>>& neighbor_order) {
  if (static_cast<int>(neighbor_order.size()) != g.vertex_count())
    throw InvalidInput("rotation table size does not match vertex count");
  RotationSystem rot;
  rot.arc_order.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& ring = neighbor_order[v];
    if (static_cast<int>(ring.size()) != g.degree(v))
      throw InvalidInput("rotation at a vertex must list all its neighbors");
    std::set<int> seen;
    for (int w : ring) {
      if (!g.adjacent(v, w))
        throw InvalidInput("rotation lists a non-neighbor");
      if (!seen.insert(w).second)
        throw InvalidInput("rotation repeats a neighbor");
      rot.arc_order[v].push_back(g.arc_between(v, w));
    }
  }
  return rot;
}

RotationSystem default_rotation(const Graph& g) {
  RotationSystem rot;
  rot.arc_order.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) rot.arc_order[v] = g.out_arcs(v);
  return rot;
}

EmbeddedGraph::EmbeddedGraph(Graph g, RotationSystem rot, std::vector<Face> faces)
    : g_(std::move(g)), rot_(std::move(rot)), faces_(std::move(faces)) {
  face_of_arc_.assign(g_.arc_count(), -1);
  int total = 0;
  for (int f = 0; f < static_cast<int>(faces_.size()); ++f)
    for (int a : faces_[f].arcs) {
      if (face_of_arc_[a] != -1)
        throw InvalidInput("face tracing placed an arc on two faces");
      face_of_arc_[a] = f;
      ++total;
    }
  if (total != g_.arc_count())
    throw InvalidInput("face tracing did not cover every arc");

  const int euler = g_.vertex_count() - g_.edge_count() + face_count();
  if ((2 - euler) % 2 != 0 || euler > 2)
    throw InvalidInput("rotation yields an invalid Euler characteristic");
  genus_ = (2 - euler) / 2;
}

std::vector<int> EmbeddedGraph::face_vertices(int f) const {
  std::vector<int> vs;
  vs.reserve(faces_[f].size());
  for (int a : faces_[f].arcs) vs.push_back(g_.arc_origin(a));
  return vs;
}

EmbeddedGraph trace_faces(const Graph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.arc_order.size()) != g.vertex_count())
    throw InvalidInput("rotation table size does not match vertex count");
  // position of each arc inside its origin's ring
  std::vector<int> pos(g.arc_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& ring = rot.arc_order[v];
    if (static_cast<int>(ring.size()) != g.degree(v))
      throw InvalidInput("rotation at a vertex must list all its out-arcs");
    for (int i = 0; i < static_cast<int>(ring.size()); ++i) {
      const int a = ring[i];
      if (a < 0 || a >= g.arc_count() || g.arc_origin(a) != v || pos[a] != -1)
        throw InvalidInput("rotation is not a permutation of the out-arcs");
      pos[a] = i;
    }
  }

  const auto next_arc = [&](int e) {
    const int back = g.arc_inverse(e);
    const int v = g.arc_terminus(e);
    const auto& ring = rot.arc_order[v];
    return ring[(pos[back] + 1) % ring.size()];
  };

  std::vector<Face> faces;
  std::vector<char> visited(g.arc_count(), 0);
  for (int start = 0; start < g.arc_count(); ++start) {
    if (visited[start]) continue;
    Face f;
    int e = start;
    do {
      visited[e] = 1;
      f.arcs.push_back(e);
      e = next_arc(e);
    } while (e != start);
    faces.push_back(std::move(f));
  }
  return EmbeddedGraph(g, rot, std::move(faces));
}

EmbeddedGraph torus_embedding(int side) {
  const TorusSpec spec{2, side};
  Graph g = build_torus(spec);
  const int n = g.vertex_count();

  // out-arc slots are (+e1, -e1, +e2, -e2); ring order (+e1, +e2, -e1, -e2)
  RotationSystem rot;
  rot.arc_order.resize(n);
  for (int v = 0; v < n; ++v) {
    const auto& slots = g.out_arcs(v);
    rot.arc_order[v] = {slots[0], slots[2], slots[1], slots[3]};
  }
  EmbeddedGraph traced = trace_faces(g, rot);

  // Anchor each quadrilateral at the corner c with c+e1, c+e2, c+e1+e2 also
  // on the face, then renumber faces by anchor so face i*N+j sits at (i, j).
  const int k = traced.face_count();
  if (k != n) throw InvalidInput("torus tracing produced an unexpected face count");
  std::vector<Face> by_anchor(k);
  std::vector<char> used(k, 0);
  for (int f = 0; f < k; ++f) {
    const auto corners = traced.face_vertices(f);
    std::set<int> corner_set(corners.begin(), corners.end());
    int anchor = -1;
    for (int c : corner_set) {
      auto cc = spec.vertex_coords(c);
      const int right = spec.vertex_index({cc[0] + 1, cc[1]});
      const int up = spec.vertex_index({cc[0], cc[1] + 1});
      const int diag = spec.vertex_index({cc[0] + 1, cc[1] + 1});
      if (corner_set.count(right) && corner_set.count(up) &&
          corner_set.count(diag)) {
        anchor = c;
        break;
      }
    }
    if (anchor < 0 || used[anchor])
      throw InvalidInput("torus face anchoring failed");
    used[anchor] = 1;
    by_anchor[anchor] = traced.faces()[f];
  }
  return EmbeddedGraph(std::move(g), std::move(rot), std::move(by_anchor));
}

bool is_circular(const EmbeddedGraph& emb) {
  for (int f = 0; f < emb.face_count(); ++f) {
    const auto vs = emb.face_vertices(f);
    if (vs.size() < 3) return false;
    std::set<int> distinct(vs.begin(), vs.end());
    if (distinct.size() != vs.size()) return false;
  }
  return true;
}

Graph dual_graph(const EmbeddedGraph& emb) {
  const Graph& g = emb.graph();
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    // the two arcs of edge e
    const int a = g.arc_between(g.edges()[e].first, g.edges()[e].second);
    const int f1 = emb.face_of_arc(a);
    const int f2 = emb.face_of_arc(g.arc_inverse(a));
    if (f1 == f2)
      throw InvalidInput("dual graph would have a loop (edge inside one face)");
    const auto key = std::minmax(f1, f2);
    if (!seen.insert({key.first, key.second}).second)
      throw InvalidInput("dual graph would have parallel edges");
    edges.push_back({key.first, key.second});
  }
  return Graph::from_edges(emb.face_count(), edges);
}

}  // namespace vfwalk
