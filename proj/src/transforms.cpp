#include "dissrho/transforms.hpp"

#include <algorithm>

namespace dissrho {

namespace {

void check_vertex(const Graph& g, int v, const char* op) {
  if (v < 0 || v >= g.order()) {
    throw PreconditionError(std::string(op) + ": vertex " + std::to_string(v) + " out of range");
  }
}

void check_room(const Graph& g, int extra, const char* op) {
  if (g.order() + extra > Graph::kMaxOrder) {
    throw PreconditionError(std::string(op) + ": result would exceed order " + std::to_string(Graph::kMaxOrder));
  }
}

}  // namespace

Graph subdivide(const Graph& g, int u, int v, int k) {
  check_vertex(g, u, "subdivide");
  check_vertex(g, v, "subdivide");
  if (!g.has_edge(u, v)) throw PreconditionError("subdivide: no edge between the given vertices");
  if (k < 1) throw PreconditionError("subdivide: k must be at least 1");
  check_room(g, k, "subdivide");
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e != Edge{std::min(u, v), std::max(u, v)}) edges.push_back(e);
  }
  int prev = u;
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(prev, g.order() + i);
    prev = g.order() + i;
  }
  edges.emplace_back(prev, v);
  return Graph::from_edges(g.order() + k, edges);
}

Graph graft_paths(const Graph& g, int v, int k, int m) {
  check_vertex(g, v, "graft_paths");
  if (m < 0 || k < m) throw PreconditionError("graft_paths: need k >= m >= 0");
  check_room(g, k + m, "graft_paths");
  std::vector<Edge> edges = g.edges();
  int next = g.order();
  for (const int len : {k, m}) {
    int prev = v;
    for (int i = 0; i < len; ++i, ++next) {
      edges.emplace_back(prev, next);
      prev = next;
    }
  }
  return Graph::from_edges(next, edges);
}

Graph rewire(const Graph& g, int u, int v, const VertexSet& moved) {
  check_vertex(g, u, "rewire");
  check_vertex(g, v, "rewire");
  if (u == v) throw PreconditionError("rewire: u and v must differ");
  if (moved.contains(u)) throw PreconditionError("rewire: u cannot be moved");
  if (!moved.is_subset_of(g.neighbors(v) - g.neighbors(u))) {
    throw PreconditionError("rewire: moved vertices must be neighbors of v and not of u");
  }
  Graph out = g;
  for (int w : moved) out = add_edge(delete_edge(out, v, w), u, w);
  return out;
}

std::vector<InternalPath> internal_paths(const Graph& g) {
  std::vector<InternalPath> out;
  for (int b : branch_vertices(g)) {
    for (int first : g.neighbors(b)) {
      std::vector<int> walk{b};
      int prev = b;
      int cur = first;
      while (g.degree(cur) == 2) {
        walk.push_back(cur);
        const VertexSet nb = g.neighbors(cur);
        const int next = nb.first() == prev ? nb.last() : nb.first();
        prev = cur;
        cur = next;
      }
      if (g.degree(cur) < 3) continue;
      walk.push_back(cur);
      const bool flip = walk.front() > walk.back() ||
                        (walk.front() == walk.back() && walk[1] > walk[walk.size() - 2]);
      if (flip) std::reverse(walk.begin(), walk.end());
      out.push_back(InternalPath{std::move(walk)});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BstParams bst_reduce(const BstParams& spec) {
  const auto [n, s, t] = spec;
  if (s < 0 || t < 0 || s + 2 * t < 2 || n - s - 2 * t < 1) {
    throw PreconditionError("bst_reduce: (n,s,t) does not name a B graph with s + 2t >= 2");
  }
  if (s == 0) {
    if (t < 2) throw PreconditionError("bst_reduce: rule for s = 0 needs t >= 2");
    return BstParams{n, 1, t - 2};
  }
  if (s == 1) {
    if (t < 2) throw PreconditionError("bst_reduce: rule for s = 1 needs t >= 2");
    return BstParams{n, 0, t - 1};
  }
  return BstParams{n, s - 2, t + 1};
}

}  // namespace dissrho
