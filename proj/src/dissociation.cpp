#include "dissrho/dissociation.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

namespace dissrho {

bool is_dissociation_set(const Graph& g, const VertexSet& s) {
  for (int v : s) {
    if ((g.neighbors(v) & s).size() > 1) return false;
  }
  return true;
}

DissResult diss_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceMaxOrder) {
    throw PreconditionError("diss_bruteforce: order " + std::to_string(n) + " above " +
                            std::to_string(kBruteForceMaxOrder));
  }
  // Sizes from n downwards; combinations of one size in lexicographic order, so the first
  // hit is the lexicographically smallest maximum set.
  std::vector<int> idx;
  for (int k = n; k >= 1; --k) {
    idx.resize(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      VertexSet s;
      for (int v : idx) s.insert(v);
      if (is_dissociation_set(g, s)) return DissResult{k, s};
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return DissResult{};
}

namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g) : g_(g) {}

  /// Largest dissociation set S with in ⊆ S ⊆ in ∪ free. Returns -1 if none reaches `floor`.
  int solve(const VertexSet& in, const VertexSet& free, int floor) {
    best_ = floor - 1;
    found_ = false;
    stop_at_ = -1;
    search(in, free);
    return found_ ? best_ : -1;
  }

  /// Whether some dissociation set S with in ⊆ S ⊆ in ∪ free has |S| >= target.
  bool reaches(const VertexSet& in, const VertexSet& free, int target) {
    best_ = target - 1;
    found_ = false;
    stop_at_ = target;
    search(in, free);
    return found_;
  }

  int greedy() const {
    std::vector<int> order(g_.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g_.degree(a) < g_.degree(b); });
    VertexSet s;
    for (int v : order) {
      VertexSet t = s;
      t.insert(v);
      if (is_dissociation_set(g_, t)) s = t;
    }
    return s.size();
  }

 private:
  // Drops free vertices that can no longer join `in`.
  VertexSet prune(const VertexSet& in, VertexSet free) const {
    VertexSet blocked;
    for (int w : in) {
      if (g_.neighbors(w).intersects(in)) blocked |= g_.neighbors(w);
    }
    free -= blocked;
    for (int u : free) {
      if ((g_.neighbors(u) & in).size() >= 2) free.erase(u);
    }
    return free;
  }

  // |in| + |free| minus a packing of disjoint groups of which only part can be taken:
  // free neighbors of an unmatched member of `in` (at most one), and connected triples (at most two).
  int upper_bound(const VertexSet& in, const VertexSet& free) const {
    int bound = in.size() + free.size();
    VertexSet pool = free;
    for (int w : in) {
      if (g_.neighbors(w).intersects(in)) continue;
      const VertexSet group = g_.neighbors(w) & pool;
      if (group.size() >= 2) {
        bound -= group.size() - 1;
        pool -= group;
      }
    }
    for (int x : free) {
      if (!pool.contains(x)) continue;
      VertexSet nb = g_.neighbors(x) & pool;
      if (nb.size() >= 2) {
        const int a = nb.first();
        nb.erase(a);
        pool.erase(x);
        pool.erase(a);
        pool.erase(nb.first());
        --bound;
      } else if (nb.size() == 1) {
        const int a = nb.first();
        VertexSet far = g_.neighbors(a) & pool;
        far.erase(x);
        if (!far.empty()) {
          pool.erase(x);
          pool.erase(a);
          pool.erase(far.first());
          --bound;
        }
      }
    }
    return bound;
  }

  void search(const VertexSet& in, VertexSet free) {
    if (stop_at_ >= 0 && found_) return;
    free = prune(in, free);
    if (upper_bound(in, free) <= best_) return;
    if (free.empty()) {
      best_ = in.size();
      found_ = true;
      return;
    }
    const VertexSet live = in | free;
    int pick = -1;
    int pick_degree = -1;
    for (int v : free) {
      const int d = (g_.neighbors(v) & live).size();
      if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    VertexSet rest = free;
    rest.erase(pick);
    search(in, rest);
    VertexSet with = in;
    with.insert(pick);
    search(with, rest);
  }

  const Graph& g_;
  int best_ = 0;
  bool found_ = false;
  int stop_at_ = -1;
};

// Greedy inclusion in index order, keeping the target size reachable: yields the
// lexicographically smallest maximum set.
template <typename Reachable>
VertexSet smallest_witness(const Graph& g, int value, Reachable reachable) {
  VertexSet in;
  VertexSet decided;
  for (int v = 0; v < g.order() && in.size() < value; ++v) {
    decided.insert(v);
    VertexSet trial = in;
    trial.insert(v);
    if (is_dissociation_set(g, trial) && reachable(trial, g.vertices() - decided, value)) in = trial;
  }
  return in;
}

}  // namespace

int diss_number(const Graph& g) {
  BranchAndBound bb(g);
  const int lower = bb.greedy();
  const int better = bb.solve(VertexSet{}, g.vertices(), lower + 1);
  return better < 0 ? lower : better;
}

DissResult diss_exact(const Graph& g) {
  const int value = diss_number(g);
  BranchAndBound bb(g);
  const VertexSet witness = smallest_witness(g, value, [&](const VertexSet& in, const VertexSet& free, int target) {
    return bb.reaches(in, free, target);
  });
  return DissResult{value, witness};
}

namespace {

constexpr int64_t kNeg = -(int64_t{1} << 40);

class TreeProgram {
 public:
  explicit TreeProgram(const Graph& g) : g_(g), n_(g.order()) {
    parent_.assign(n_, -1);
    order_.reserve(n_);
    order_.push_back(0);
    std::vector<bool> seen(n_, false);
    seen[0] = true;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const int v = order_[i];
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          parent_[w] = v;
          order_.push_back(w);
        }
      }
    }
  }

  /// Best size with vertices in `forced_in` included and those in `forced_out` excluded.
  int64_t value(const VertexSet& forced_in, const VertexSet& forced_out) const {
    std::vector<int64_t> out(n_), lone(n_), paired(n_);
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const int v = *it;
      int64_t sum_best = 0;
      int64_t sum_out = 0;
      int64_t gain = kNeg;
      for (int c : g_.neighbors(v)) {
        if (c == parent_[v]) continue;
        sum_best += std::max({out[c], lone[c], paired[c]});
        sum_out += out[c];
        gain = std::max(gain, lone[c] - out[c]);
      }
      out[v] = clamp(sum_best);
      lone[v] = clamp(1 + sum_out);
      paired[v] = gain <= kNeg / 2 ? kNeg : clamp(1 + sum_out + gain);
      if (forced_in.contains(v)) out[v] = kNeg;
      if (forced_out.contains(v)) lone[v] = paired[v] = kNeg;
    }
    return std::max({out[0], lone[0], paired[0]});
  }

 private:
  static int64_t clamp(int64_t x) { return x < kNeg / 2 ? kNeg : x; }

  const Graph& g_;
  int n_;
  std::vector<int> parent_;
  std::vector<int> order_;
};

}  // namespace

DissResult diss_tree(const Graph& g) {
  if (!is_tree(g)) throw PreconditionError("diss_tree: input is not a tree");
  TreeProgram dp(g);
  const int value = static_cast<int>(dp.value(VertexSet{}, VertexSet{}));
  const VertexSet witness = smallest_witness(g, value, [&](const VertexSet& in, const VertexSet& free, int target) {
    const VertexSet excluded = g.vertices() - in - free;
    return dp.value(in, excluded) >= target;
  });
  return DissResult{value, witness};
}

}  // namespace dissrho
