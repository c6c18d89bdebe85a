#pragma once

#include <vector>

#include "dissrho/graph.hpp"

namespace dissrho {

/// v1..vk with d(v1) >= 3, d(vk) >= 3 and every interior vertex of degree 2. v1 == vk is allowed.
struct InternalPath {
  std::vector<int> vertices;

  friend bool operator==(const InternalPath&, const InternalPath&) = default;
  friend auto operator<=>(const InternalPath&, const InternalPath&) = default;
};

/// Replaces the edge uv by a path u, f1, ..., fk, v through fresh vertices order..order+k-1.
Graph subdivide(const Graph& g, int u, int v, int k);

/// Attaches the paths v a1 ... ak and v b1 ... bm (k >= m >= 0); the a's get the lower fresh indices.
Graph graft_paths(const Graph& g, int v, int k, int m);

/// Moves the edges from v to each vertex of `moved` over to u.
/// Requires moved ⊆ N(v) \ N(u), u != v and u not in moved.
Graph rewire(const Graph& g, int u, int v, const VertexSet& moved);

/// All maximal internal paths, each once. Endpoints are oriented so that v1 <= vk; a closed path
/// starts with the neighbor of lower index. The list is sorted.
std::vector<InternalPath> internal_paths(const Graph& g);

struct BstParams {
  int n = 0;
  int s = 0;
  int t = 0;

  friend bool operator==(const BstParams&, const BstParams&) = default;
};

/// One reduction step on B(n,s,t): s = 0 gives (n, 1, t-2); s = 1 gives (n, 0, t-1);
/// s >= 2 gives (n, s-2, t+1). Throws PreconditionError when no rule applies or the result
/// would not name a B graph.
BstParams bst_reduce(const BstParams& spec);

}  // namespace dissrho
