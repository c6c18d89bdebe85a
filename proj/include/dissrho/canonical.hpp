#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "dissrho/graph.hpp"

namespace dissrho {

/// Isomorphism-invariant encoding: the graph6 string of the canonically relabeled graph
/// (so it is order-prefixed and carries the canonical upper triangle).
struct CanonicalForm {
  std::string bytes;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  std::vector<int> position;  ///< position[v] = canonical index of vertex v
  Graph graph;                ///< input relabeled by `position`
  CanonicalForm form;
  /// Index of v's cell in the equitable refinement of the initial coloring. Vertices in
  /// different cells lie in different automorphism orbits.
  std::vector<int> root_cell;
  /// orbits[v] = smallest vertex in the automorphism orbit of v.
  std::vector<int> orbits;
};

/// Canonical labeling by equitable partition refinement followed by exhaustive
/// individualization, with branches pruned through automorphisms found at equal leaves.
CanonicalLabeling canonical_labeling(const Graph& g);

/// Same, starting from the ordered partition induced by `colors` (one entry per vertex;
/// cells are ordered by color value). Color-preserving isomorphisms only.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors);

CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

/// True iff some automorphism of g maps u to v.
bool same_orbit(const Graph& g, int u, int v);

}  // namespace dissrho
