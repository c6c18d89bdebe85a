#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "dissrho/graph.hpp"

namespace testsupport {

using dissrho::Edge;
using dissrho::Graph;
using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Graph random_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

/// Random recursive tree, randomly relabeled.
inline Graph random_tree(Rng& rng, int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(uniform(rng, 0, v - 1), v);
  return Graph::from_edges(n, edges).relabeled(random_permutation(rng, n));
}

/// Random tree plus each remaining pair with probability p, randomly relabeled.
inline Graph random_connected_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(uniform(rng, 0, v - 1), v);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool present = std::find(edges.begin(), edges.end(), Edge{u, v}) != edges.end();
      if (!present && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges).relabeled(random_permutation(rng, n));
}

inline std::vector<uint32_t> row_masks(const Graph& g) {
  std::vector<uint32_t> rows(g.order(), 0);
  for (const auto& [u, v] : g.edges()) {
    rows[u] |= 1U << v;
    rows[v] |= 1U << u;
  }
  return rows;
}

/// Dissociation number by scanning every subset (order <= 20).
inline int diss_oracle(const Graph& g) {
  const int n = g.order();
  const auto rows = row_masks(g);
  int best = 0;
  for (uint32_t s = 0; s < (1U << n); ++s) {
    const int size = std::popcount(s);
    if (size <= best) continue;
    bool ok = true;
    for (uint32_t rest = s; rest != 0 && ok; rest &= rest - 1) {
      ok = std::popcount(rows[std::countr_zero(rest)] & s) <= 1;
    }
    if (ok) best = size;
  }
  return best;
}

/// Largest adjacency eigenvalue from a dense symmetric eigensolver.
inline double rho_oracle(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

/// Plain graph6 decoder for orders below 63: header byte, then the upper triangle column by
/// column, six bits per byte, most significant bit first.
inline std::vector<Edge> decode_graph6_edges(const std::string& s, int& order) {
  order = s[0] - 63;
  std::vector<bool> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int x = s[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1);
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if (bits.at(k)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

/// Adjacency upper triangle of g under labeling perm packed into an integer (order <= 11).
inline uint64_t labeled_code(const std::vector<uint32_t>& rows, const std::vector<int>& perm) {
  const int n = static_cast<int>(rows.size());
  uint64_t code = 0;
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (rows[perm[u]] >> perm[v] & 1U) code |= uint64_t{1} << bit;
    }
  }
  return code;
}

/// Minimum labeled code over all n! labelings: an isomorphism invariant that separates classes.
inline uint64_t min_code(const Graph& g) {
  const auto rows = row_masks(g);
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~uint64_t{0};
  do {
    best = std::min(best, labeled_code(rows, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Minimum labeled codes of every isomorphism class of graphs on n vertices (n <= 7), by
/// scanning all labeled graphs in code order and marking each new class's images under all
/// permutations. `keep` filters classes by their representative.
template <typename Keep>
std::vector<uint64_t> class_min_codes(int n, Keep keep) {
  const int bits = n * (n - 1) / 2;
  std::vector<bool> seen(std::size_t{1} << bits, false);
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<uint64_t> out;
  for (uint64_t code = 0; code < (uint64_t{1} << bits); ++code) {
    if (seen[code]) continue;
    std::vector<uint32_t> rows(n, 0);
    std::vector<Edge> edges;
    int bit = 0;
    for (int v = 1; v < n; ++v) {
      for (int u = 0; u < v; ++u, ++bit) {
        if (code >> bit & 1) {
          rows[u] |= 1U << v;
          rows[v] |= 1U << u;
          edges.emplace_back(u, v);
        }
      }
    }
    for (const auto& p : perms) seen[labeled_code(rows, p)] = true;
    if (keep(Graph::from_edges(n, edges))) out.push_back(code);
  }
  return out;
}

}  // namespace testsupport
