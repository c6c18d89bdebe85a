#include "dissrho/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

#include "dissrho/graph6.hpp"

namespace dissrho {

namespace {

constexpr int kCap = Graph::kMaxOrder;

// Ordered partition in the nauty style: `lab` lists vertices cell by cell; a cell is
// identified by the position of its first element.
struct Partition {
  std::array<uint8_t, kCap> lab;
  std::array<uint8_t, kCap> cell_end;    // valid at cell starts
  std::array<uint8_t, kCap> start_of;    // start position of each vertex's cell
  int cells = 0;
};

using Perm = std::array<uint8_t, kCap>;

class Canonizer {
 public:
  Canonizer(const Graph& g, std::span<const int> colors) : adj_(g.rows()), n_(g.order()) {
    Partition p;
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colors[a] < colors[b]; });
    std::vector<int> queue;
    for (int i = 0; i < n_; ++i) {
      p.lab[i] = static_cast<uint8_t>(order[i]);
      if (i == 0 || colors[order[i]] != colors[order[i - 1]]) {
        queue.push_back(i);
        ++p.cells;
      }
    }
    for (std::size_t c = 0; c < queue.size(); ++c) {
      const int start = queue[c];
      const int end = c + 1 < queue.size() ? queue[c + 1] : n_;
      p.cell_end[start] = static_cast<uint8_t>(end);
      for (int i = start; i < end; ++i) p.start_of[p.lab[i]] = static_cast<uint8_t>(start);
    }
    refine(p, queue);

    root_cell_.assign(n_, 0);
    int index = 0;
    for (int s = 0; s < n_; s = p.cell_end[s], ++index) {
      for (int i = s; i < p.cell_end[s]; ++i) root_cell_[p.lab[i]] = index;
    }
    std::vector<int> path;
    search(p, path);
  }

  static constexpr int kNoJump = kCap + 1;

  CanonicalLabeling result() const {
    std::vector<int> position(n_);
    for (int i = 0; i < n_; ++i) position[best_lab_[i]] = i;
    Graph cg = Graph::from_rows(best_cert_);
    CanonicalForm form{to_graph6(cg)};
    const auto parent = stabilizer_orbits({});
    std::vector<int> orbits(parent.begin(), parent.begin() + n_);
    return CanonicalLabeling{std::move(position), std::move(cg), std::move(form), root_cell_, std::move(orbits)};
  }

 private:
  void refine(Partition& p, std::vector<int> queue) const {
    std::array<bool, kCap> queued{};
    for (int s : queue) queued[s] = true;
    std::array<int, kCap> count{};
    std::size_t head = 0;
    while (head < queue.size()) {
      const int w = queue[head++];
      queued[w] = false;
      VertexSet splitter;
      for (int i = w; i < p.cell_end[w]; ++i) splitter.insert(p.lab[i]);

      for (int start = 0; start < n_;) {
        const int end = p.cell_end[start];
        if (end - start == 1) {
          start = end;
          continue;
        }
        bool uniform = true;
        for (int i = start; i < end; ++i) {
          count[p.lab[i]] = (adj_[p.lab[i]] & splitter).size();
          if (count[p.lab[i]] != count[p.lab[start]]) uniform = false;
        }
        if (uniform) {
          start = end;
          continue;
        }
        std::sort(p.lab.begin() + start, p.lab.begin() + end, [&](uint8_t a, uint8_t b) {
          return count[a] != count[b] ? count[a] < count[b] : a < b;
        });
        int frag = start;
        for (int i = start + 1; i <= end; ++i) {
          if (i == end || count[p.lab[i]] != count[p.lab[frag]]) {
            p.cell_end[frag] = static_cast<uint8_t>(i);
            for (int j = frag; j < i; ++j) p.start_of[p.lab[j]] = static_cast<uint8_t>(frag);
            if (frag != start) ++p.cells;
            if (!queued[frag]) {
              queued[frag] = true;
              queue.push_back(frag);
            }
            frag = i;
          }
        }
        start = end;
      }
    }
  }

  void individualize(Partition& p, int start, int v) const {
    const int end = p.cell_end[start];
    int at = start;
    while (p.lab[at] != v) ++at;
    std::swap(p.lab[at], p.lab[start]);
    std::sort(p.lab.begin() + start + 1, p.lab.begin() + end);
    p.cell_end[start] = static_cast<uint8_t>(start + 1);
    p.cell_end[start + 1] = static_cast<uint8_t>(end);
    for (int i = start + 1; i < end; ++i) p.start_of[p.lab[i]] = static_cast<uint8_t>(start + 1);
    ++p.cells;
  }

  // Rows of the graph relabeled so that lab[i] becomes vertex i.
  void certificate(const Partition& p, std::vector<VertexSet>& out) const {
    std::array<uint8_t, kCap> pos;
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = static_cast<uint8_t>(i);
    out.assign(n_, VertexSet{});
    for (int i = 0; i < n_; ++i) {
      for (int w : adj_[p.lab[i]]) out[i].insert(pos[w]);
    }
  }

  void record_automorphism(const Partition& leaf, const Perm& target_lab) {
    Perm gamma;
    for (int i = 0; i < n_; ++i) gamma[leaf.lab[i]] = target_lab[i];
    generators_.push_back(gamma);
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    const auto mm = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
    return static_cast<int>(mm.first - a.begin());
  }

  // Returns the tree level to resume at: an automorphism onto an explored leaf makes the
  // whole subtree below the common ancestor redundant.
  int leaf(const Partition& p, const std::vector<int>& path) {
    certificate(p, scratch_);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_cert_ = scratch_;
      best_cert_ = scratch_;
      first_lab_ = p.lab;
      best_lab_ = p.lab;
      first_path_ = path;
      best_path_ = path;
      return kNoJump;
    }
    if (scratch_ == first_cert_) {
      record_automorphism(p, first_lab_);
      return common_prefix(path, first_path_);
    }
    const auto cmp = std::lexicographical_compare_three_way(scratch_.begin(), scratch_.end(),
                                                            best_cert_.begin(), best_cert_.end());
    if (cmp == 0) {
      record_automorphism(p, best_lab_);
      return common_prefix(path, best_path_);
    }
    if (cmp < 0) {
      best_cert_ = scratch_;
      best_lab_ = p.lab;
      best_path_ = path;
    }
    return kNoJump;
  }

  int find(std::array<uint8_t, kCap>& parent, int x) const {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Orbit representatives under the generators that fix every vertex of `path`.
  std::array<uint8_t, kCap> stabilizer_orbits(const std::vector<int>& path) const {
    std::array<uint8_t, kCap> parent;
    for (int i = 0; i < n_; ++i) parent[i] = static_cast<uint8_t>(i);
    for (const auto& gamma : generators_) {
      bool fixes = true;
      for (int v : path) {
        if (gamma[v] != v) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(parent, v);
        const int b = find(parent, gamma[v]);
        if (a != b) parent[std::max(a, b)] = static_cast<uint8_t>(std::min(a, b));
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = static_cast<uint8_t>(find(parent, v));
    return parent;
  }

  int search(const Partition& p, std::vector<int>& path) {
    if (p.cells == n_) return leaf(p, path);
    const int level = static_cast<int>(path.size());
    int target = 0;
    while (p.cell_end[target] - target == 1) target = p.cell_end[target];
    std::vector<int> members(p.lab.begin() + target, p.lab.begin() + p.cell_end[target]);
    std::sort(members.begin(), members.end());

    std::vector<int> tried;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    std::array<uint8_t, kCap> orbit{};
    for (int v : members) {
      if (!tried.empty()) {
        if (gens_seen != generators_.size()) {
          orbit = stabilizer_orbits(path);
          gens_seen = generators_.size();
        }
        const bool covered = std::any_of(tried.begin(), tried.end(), [&](int t) { return orbit[t] == orbit[v]; });
        if (covered) continue;
      }
      tried.push_back(v);
      Partition child = p;
      individualize(child, target, v);
      refine(child, {target});
      path.push_back(v);
      const int jump = search(child, path);
      path.pop_back();
      if (jump < level) return jump;
    }
    return kNoJump;
  }

  std::span<const VertexSet> adj_;
  int n_;
  bool have_leaf_ = false;
  std::vector<VertexSet> scratch_, first_cert_, best_cert_;
  Perm first_lab_{}, best_lab_{};
  std::vector<int> first_path_, best_path_;
  std::vector<Perm> generators_;
  std::vector<int> root_cell_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != g.order()) throw PreconditionError("coloring length mismatch");
  Canonizer c(g, colors);
  return c.result();
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  const std::vector<int> colors(g.order(), 0);
  return canonical_labeling(g, colors);
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) { return canonical_labeling(g).graph; }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

bool same_orbit(const Graph& g, int u, int v) {
  if (u == v) return true;
  if (g.degree(u) != g.degree(v)) return false;
  std::vector<int> cu(g.order(), 1), cv(g.order(), 1);
  cu[u] = 0;
  cv[v] = 0;
  return canonical_labeling(g, cu).form == canonical_labeling(g, cv).form;
}

}  // namespace dissrho
