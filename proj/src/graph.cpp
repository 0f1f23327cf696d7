#include "vfwalk/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "vfwalk/errors.hpp"

namespace vfwalk {

namespace {

void check_connected(int n, const std::vector<std::vector<int>>& adj) {
  if (n <= 0) throw InvalidInput("graph needs at least one vertex");
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  if (reached != n) throw InvalidInput("graph is not connected");
}

}  // namespace

Graph Graph::from_ordered_neighbors(int n,
                                    std::vector<std::vector<int>> out_neighbors) {
  if (n <= 0) throw InvalidInput("graph needs at least one vertex");
  if (static_cast<int>(out_neighbors.size()) != n)
    throw InvalidInput("neighbor table size does not match vertex count");

  Graph g;
  g.n_ = n;
  g.adj_ = out_neighbors;

  std::set<std::pair<int, int>> seen_edges;
  for (int v = 0; v < n; ++v) {
    std::set<int> local;
    for (int w : out_neighbors[v]) {
      if (w < 0 || w >= n) throw InvalidInput("neighbor index out of range");
      if (w == v) throw InvalidInput("self-loops are not allowed");
      if (!local.insert(w).second)
        throw InvalidInput("duplicate edge in neighbor table");
      seen_edges.insert({std::min(v, w), std::max(v, w)});
    }
  }
  // symmetry: w must list v back
  for (int v = 0; v < n; ++v)
    for (int w : out_neighbors[v])
      if (std::find(out_neighbors[w].begin(), out_neighbors[w].end(), v) ==
          out_neighbors[w].end())
        throw InvalidInput("neighbor table is not symmetric");

  check_connected(n, g.adj_);

  g.edges_.assign(seen_edges.begin(), seen_edges.end());
  std::map<std::pair<int, int>, int> edge_id;
  for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e)
    edge_id[g.edges_[e]] = e;

  const int arcs = 2 * static_cast<int>(g.edges_.size());
  g.arc_origin_.reserve(arcs);
  g.arc_terminus_.reserve(arcs);
  g.arc_edge_.reserve(arcs);
  g.out_arcs_.assign(n, {});
  std::map<std::pair<int, int>, int> arc_id;
  for (int v = 0; v < n; ++v)
    for (int w : out_neighbors[v]) {
      const int a = static_cast<int>(g.arc_origin_.size());
      g.arc_origin_.push_back(v);
      g.arc_terminus_.push_back(w);
      g.arc_edge_.push_back(edge_id[{std::min(v, w), std::max(v, w)}]);
      g.out_arcs_[v].push_back(a);
      arc_id[{v, w}] = a;
    }
  g.arc_inverse_.resize(arcs);
  for (int a = 0; a < arcs; ++a)
    g.arc_inverse_[a] = arc_id.at({g.arc_terminus_[a], g.arc_origin_[a]});
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> nb(std::max(n, 0));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("self-loops are not allowed");
    nb[u].push_back(v);
    nb[v].push_back(u);
  }
  for (auto& list : nb) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw InvalidInput("duplicate edge");
  }
  return from_ordered_neighbors(n, std::move(nb));
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::adjacent(int u, int v) const {
  const auto& list = adj_[u];
  return std::find(list.begin(), list.end(), v) != list.end();
}

int Graph::arc_between(int u, int v) const {
  for (int a : out_arcs_[u])
    if (arc_terminus_[a] == v) return a;
  throw InvalidInput("arc_between: vertices are not adjacent");
}

long long TorusSpec::vertex_count() const {
  long long n = 1;
  for (int i = 0; i < dimension; ++i) n *= side;
  return n;
}

void TorusSpec::validate() const {
  if (dimension < 1) throw InvalidInput("torus dimension must be >= 1");
  if (side < 3) throw InvalidInput("non-simple torus: side length must be >= 3");
  if (vertex_count() > 20'000'000) throw InvalidInput("torus too large");
}

int TorusSpec::vertex_index(const std::vector<int>& coords) const {
  int idx = 0;
  for (int i = 0; i < dimension; ++i) {
    int c = coords[i] % side;
    if (c < 0) c += side;
    idx = idx * side + c;
  }
  return idx;
}

std::vector<int> TorusSpec::vertex_coords(long long index) const {
  std::vector<int> c(dimension);
  for (int i = dimension - 1; i >= 0; --i) {
    c[i] = static_cast<int>(index % side);
    index /= side;
  }
  return c;
}

Graph build_torus(const TorusSpec& spec) {
  spec.validate();
  const int n = static_cast<int>(spec.vertex_count());
  std::vector<std::vector<int>> nb(n);
  for (int v = 0; v < n; ++v) {
    auto c = spec.vertex_coords(v);
    nb[v].reserve(2 * spec.dimension);
    for (int j = 0; j < spec.dimension; ++j)
      for (int step : {+1, -1}) {  // slot order +e_j, -e_j
        auto w = c;
        w[j] = (w[j] + step + spec.side) % spec.side;
        nb[v].push_back(spec.vertex_index(w));
      }
  }
  return Graph::from_ordered_neighbors(n, std::move(nb));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  if (n < 2) throw InvalidInput("complete graph needs at least 2 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

Matrix adjacency_matrix(const Graph& g) {
  const int n = g.vertex_count();
  Matrix a = Matrix::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

Matrix degree_matrix(const Graph& g) {
  const int n = g.vertex_count();
  Matrix d = Matrix::Zero(n, n);
  for (int v = 0; v < n; ++v) d(v, v) = g.degree(v);
  return d;
}

Matrix laplacian(const Graph& g) { return degree_matrix(g) - adjacency_matrix(g); }

Matrix transition_matrix(const Graph& g) {
  const int n = g.vertex_count();
  Matrix p = adjacency_matrix(g);
  for (int v = 0; v < n; ++v) p.row(v) /= static_cast<double>(g.degree(v));
  return p;
}

}  // namespace vfwalk
