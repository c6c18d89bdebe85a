#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dissrho/error.hpp"
#include "dissrho/vertex_set.hpp"

namespace dissrho {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..order-1.
///
/// Row i of the adjacency is the neighbor set N(i). Every constructor checks that the
/// rows are symmetric and loop-free, so any Graph value in circulation satisfies both.
/// Mutating operations return a new Graph.
class Graph {
 public:
  static constexpr int kMaxOrder = VertexSet::kCapacity;

  /// Edgeless graph of the given order (1..kMaxOrder).
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }
  static Graph from_rows(std::vector<VertexSet> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const;
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  std::span<const VertexSet> rows() const { return rows_; }
  VertexSet vertices() const { return VertexSet::prefix(order()); }

  bool has_edge(int u, int v) const { return rows_[u].contains(v); }
  int degree(int v) const { return rows_[v].size(); }
  int max_degree() const;
  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Relabels vertices: vertex v of this graph becomes vertex perm[v].
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;
  void check_vertex(int v) const;
  friend Graph add_edge(const Graph&, int, int);
  friend Graph delete_edge(const Graph&, int, int);
  friend Graph delete_vertex(const Graph&, int);
  friend Graph induced_subgraph(const Graph&, const VertexSet&);
  friend Graph disjoint_union(const Graph&, const Graph&);
  friend Graph join(const Graph&, const Graph&);

  std::vector<VertexSet> rows_;
};

Graph add_edge(const Graph& g, int u, int v);
Graph delete_edge(const Graph& g, int u, int v);
/// Removes v; vertices above v shift down by one.
Graph delete_vertex(const Graph& g, int v);
/// Subgraph induced by S, vertices renumbered in increasing order of their old index.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
/// Vertices of b follow those of a.
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// Vertices of degree at least 3.
VertexSet branch_vertices(const Graph& g);
/// Vertex set of the connected component containing v.
VertexSet component_of(const Graph& g, int v);
/// Vertices whose removal disconnects their component.
VertexSet cut_vertices(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);  // non-increasing

inline int degree(const Graph& g, int v) { return g.degree(v); }

std::string describe(const Graph& g);  // "n=4 edges=[0-1,1-2,2-3]"

}  // namespace dissrho
