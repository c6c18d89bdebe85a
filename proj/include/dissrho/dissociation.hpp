#pragma once

#include <vector>

#include "dissrho/graph.hpp"

namespace dissrho {

/// A maximum dissociation set and its size. Every engine returns the lexicographically
/// smallest maximum set (compared as sorted vertex lists), so results are comparable.
struct DissResult {
  int value = 0;
  VertexSet witness;

  friend bool operator==(const DissResult&, const DissResult&) = default;
};

/// True iff S induces a subgraph of maximum degree at most one.
bool is_dissociation_set(const Graph& g, const VertexSet& s);

inline constexpr int kBruteForceMaxOrder = 24;

/// Tries every subset, largest sizes first. Order at most kBruteForceMaxOrder.
DissResult diss_bruteforce(const Graph& g);

/// Branch and bound: exclude-first branching on a maximum-degree undecided vertex, greedy
/// lower bound, packing upper bound.
DissResult diss_exact(const Graph& g);

/// Value only; skips the witness reconstruction. Used in enumeration sweeps.
int diss_number(const Graph& g);

/// Linear dynamic program over a rooted tree. Throws PreconditionError unless g is a tree.
DissResult diss_tree(const Graph& g);

}  // namespace dissrho
