#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace vfwalk {

using Matrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

// Simple connected undirected graph together with its arc set: every edge
// {u, v} contributes the two oriented arcs (u,v) and (v,u).  Arcs are numbered
// vertex by vertex following each vertex's out-neighbor order, which makes the
// numbering reproducible and lets builders pin a meaningful slot layout (the
// torus builder orders out-arcs +e1, -e1, ..., +ed, -ed).
class Graph {
 public:
  // `out_neighbors[v]` lists v's neighbors in out-arc order.
  static Graph from_ordered_neighbors(int n,
                                      std::vector<std::vector<int>> out_neighbors);
  // Arc order defaults to ascending neighbor index.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int arc_count() const { return 2 * edge_count(); }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool adjacent(int u, int v) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  int arc_origin(int a) const { return arc_origin_[a]; }
  int arc_terminus(int a) const { return arc_terminus_[a]; }
  int arc_inverse(int a) const { return arc_inverse_[a]; }
  int arc_edge(int a) const { return arc_edge_[a]; }
  // Arc id of (u, v); throws if u and v are not adjacent.
  int arc_between(int u, int v) const;
  const std::vector<int>& out_arcs(int v) const { return out_arcs_[v]; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> arc_origin_, arc_terminus_, arc_inverse_, arc_edge_;
  std::vector<std::vector<int>> out_arcs_;
};

// Discrete torus: Z_N^d with u ~ v iff they differ by +-1 (mod N) in exactly
// one coordinate.  2d-regular with N^d vertices and d*N^d edges.
struct TorusSpec {
  int dimension = 2;  // d >= 1
  int side = 3;       // N >= 3 keeps the graph simple

  long long vertex_count() const;
  int coin_size() const { return 2 * dimension; }
  int vertex_index(const std::vector<int>& coords) const;
  std::vector<int> vertex_coords(long long index) const;
  void validate() const;
};

Graph build_torus(const TorusSpec& spec);
Graph cycle_graph(int n);     // n >= 3
Graph complete_graph(int n);  // n >= 2

Matrix adjacency_matrix(const Graph& g);
Matrix degree_matrix(const Graph& g);
Matrix laplacian(const Graph& g);
Matrix transition_matrix(const Graph& g);  // D^{-1} A, rows sum to 1

}  // namespace vfwalk
