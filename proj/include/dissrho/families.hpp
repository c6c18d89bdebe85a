#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dissrho/graph.hpp"

namespace dissrho {

enum class FamilyKind {
  kPath,
  kCycle,
  kStar,
  kSRT,
  kHn,
  kBnst,
  kWn,
  kE6,
  kE7,
  kE8,
  kWTilde,
  kE6T,
  kE7T,
  kE8T,
  kG1,
  kG2,
  kG3,
  kG4,
  kBalancedMultipartite,
  kJoinMaximizer,
};

/// A named family member, e.g. G3(1,2,0,3). Text form: NAME or NAME(p1,...,pk).
struct FamilySpec {
  FamilyKind kind = FamilyKind::kPath;
  std::vector<int> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Labelings. Path: 0..n-1 in order. Cycle: path plus edge (n-1, 0). Star: center 0.
Graph path(int n);
Graph cycle(int n);
Graph star(int n);

/// Center 0, leaves 1..r, branch edge i has inner vertex r+1+2i and outer vertex r+2+2i.
Graph s_rt(int r, int t);

/// Four-vertex path with the branch edges split as evenly as possible between its ends;
/// for odd n one extra leaf sits on the end with fewer branch edges. Built as
/// G3(0, ceil((n-4)/4), 0, floor((n-4)/4)) or G3(0, ceil((n-5)/4), 1, floor((n-5)/4)).
Graph h_n(int n);

/// Spine 0..m-1 with m = n-s-2t; at vertex m-1 hang s leaves, then t branch edges (inner, outer).
Graph b_nst(int n, int s, int t);

enum class SmithKind { kW, kE6, kE7, kE8, kWTilde, kE6T, kE7T, kE8T };

/// W(n): path 0..n-2 plus leaf n-1 at vertex 1 (n >= 5).
/// WTilde(n): path 0..n-3 plus leaves at vertices 1 and n-4 (n >= 6).
/// E6/E7/E8: path on 5/6/7 vertices with a leaf at vertex 2.
/// E6T: path 0..4 with the path 2-5-6. E7T: path 0..6 with a leaf at 3. E8T: path 0..7 with a leaf at 2.
/// `n` is ignored by the fixed-order kinds.
Graph smith_graph(SmithKind kind, int n = 0);

/// G_i(r,s,p,q). v1 = 0, v2 = 1, v3 = 2, v4 = 3 (v3, v4 only where present).
/// G1: edge v1v2. G2: path v1 v3 v2. G3: path v1 v3 v4 v2. G4: path v1 v3 v2 and leaf v4 at v3.
/// Then r leaves and s branch edges at v1, p leaves and q branch edges at v2, in that order,
/// each branch edge as (inner, outer).
Graph g_family(int i, int r, int s, int p, int q);

/// Complete multipartite graph with parts {0,1}, {2,3}, ... (last part a singleton if n odd).
Graph balanced_multipartite(int n);

/// K_{n-k} on 0..n-k-1 joined to a maximum matching on n-k..n-1 (plus an isolated vertex if k odd).
Graph join_maximizer(int n, int k);

Graph build(const FamilySpec& spec);

/// Case-insensitive. Throws ParseError on bad syntax, unknown names or wrong arity.
FamilySpec parse_family(std::string_view text);
std::string format_family(const FamilySpec& spec);

/// Every family member of the given order (n >= 1), in a fixed order.
std::vector<FamilySpec> family_catalog(int n);

}  // namespace dissrho
