#include "dissrho/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dissrho {

namespace {

void check_order(int order) {
  if (order < 1 || order > Graph::kMaxOrder) {
    throw PreconditionError("graph order " + std::to_string(order) + " outside 1.." +
                            std::to_string(Graph::kMaxOrder));
  }
}

}  // namespace

Graph::Graph(int order) {
  check_order(order);
  rows_.resize(order);
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    if (g.rows_[u].contains(v)) {
      throw PreconditionError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    g.rows_[u].insert(v);
    g.rows_[v].insert(u);
  }
  return g;
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  check_order(static_cast<int>(rows.size()));
  const int n = static_cast<int>(rows.size());
  const VertexSet all = VertexSet::prefix(n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_subset_of(all)) throw PreconditionError("adjacency row references missing vertex");
    if (rows[i].contains(i)) throw PreconditionError("loop at vertex " + std::to_string(i));
    for (int j : rows[i]) {
      if (!rows[j].contains(i)) throw PreconditionError("asymmetric adjacency rows");
    }
  }
  Graph g;
  g.rows_ = std::move(rows);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(order()));
  }
}

int Graph::size() const {
  int twice = 0;
  for (const auto& r : rows_) twice += r.size();
  return twice / 2;
}

int Graph::max_degree() const {
  int m = 0;
  for (const auto& r : rows_) m = std::max(m, r.size());
  return m;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : rows_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order()) throw PreconditionError("permutation length mismatch");
  Graph g;
  g.rows_.resize(order());
  for (int u = 0; u < order(); ++u) {
    VertexSet row;
    for (int v : rows_[u]) row.insert(perm[v]);
    g.rows_[perm[u]] = row;
  }
  return g;
}

Graph add_edge(const Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw PreconditionError("add_edge: endpoints coincide");
  if (g.has_edge(u, v)) throw PreconditionError("add_edge: edge already present");
  Graph out = g;
  out.rows_[u].insert(v);
  out.rows_[v].insert(u);
  return out;
}

Graph delete_edge(const Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v || !g.has_edge(u, v)) throw PreconditionError("delete_edge: edge not present");
  Graph out = g;
  out.rows_[u].erase(v);
  out.rows_[v].erase(u);
  return out;
}

Graph delete_vertex(const Graph& g, int v) {
  g.check_vertex(v);
  if (g.order() == 1) throw PreconditionError("delete_vertex: graph would become empty");
  VertexSet keep = g.vertices();
  keep.erase(v);
  return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (!s.is_subset_of(g.vertices())) throw PreconditionError("induced_subgraph: vertex out of range");
  if (s.empty()) throw PreconditionError("induced_subgraph: empty vertex set");
  std::vector<int> index(g.order(), -1);
  int next = 0;
  for (int v : s) index[v] = next++;
  Graph out;
  out.rows_.resize(next);
  for (int v : s) {
    VertexSet row;
    for (int w : g.neighbors(v) & s) row.insert(index[w]);
    out.rows_[index[v]] = row;
  }
  return out;
}

namespace {

Graph combine(const Graph& a, const Graph& b, bool cross) {
  const int na = a.order();
  const int nb = b.order();
  if (na + nb > Graph::kMaxOrder) throw PreconditionError("combined order exceeds capacity");
  std::vector<VertexSet> rows(na + nb);
  const VertexSet a_all = VertexSet::prefix(na);
  const VertexSet b_all = VertexSet::prefix(na + nb) - a_all;
  for (int u = 0; u < na; ++u) {
    rows[u] = a.neighbors(u);
    if (cross) rows[u] |= b_all;
  }
  for (int u = 0; u < nb; ++u) {
    VertexSet row;
    for (int v : b.neighbors(u)) row.insert(v + na);
    if (cross) row |= a_all;
    rows[u + na] = row;
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace

Graph disjoint_union(const Graph& a, const Graph& b) { return combine(a, b, false); }
Graph join(const Graph& a, const Graph& b) { return combine(a, b, true); }

VertexSet component_of(const Graph& g, int v) {
  VertexSet seen = VertexSet::single(v);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int u : frontier) next |= g.neighbors(u);
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g) { return component_of(g, 0).size() == g.order(); }

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

VertexSet branch_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 3) out.insert(v);
  }
  return out;
}

VertexSet cut_vertices(const Graph& g) {
  // Small orders only ever reach this; one restricted traversal per vertex is enough.
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) continue;
    const VertexSet comp = component_of(g, v);
    const int start = (g.neighbors(v)).first();
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (int u : frontier) next |= g.neighbors(u);
      next.erase(v);
      next -= seen;
      seen |= next;
      frontier = next;
    }
    if (seen.size() != comp.size() - 1) out.insert(v);
  }
  return out;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " edges=[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) os << ',';
    first = false;
    os << u << '-' << v;
  }
  os << ']';
  return os.str();
}

}  // namespace dissrho
