#include "dissrho/enumeration.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>

#include "dissrho/dissociation.hpp"
#include "dissrho/graph6.hpp"
#include "parallel.hpp"

namespace dissrho {

std::string mode_name(EnumMode mode) {
  switch (mode) {
    case EnumMode::kConnected: return "connected";
    case EnumMode::kTrees: return "trees";
    case EnumMode::kAll: return "all";
  }
  return "";
}

EnumStream::EnumStream(int order, EnumMode mode, std::vector<CanonicalForm> forms)
    : order_(order), mode_(mode), forms_(std::move(forms)) {}

Graph EnumStream::graph(std::size_t i) const { return from_graph6(forms_.at(i).bytes); }

std::vector<Graph> EnumStream::graphs() const {
  std::vector<Graph> out;
  out.reserve(forms_.size());
  for (const auto& f : forms_) out.push_back(from_graph6(f.bytes));
  return out;
}

namespace {

int max_order(EnumMode mode) {
  switch (mode) {
    case EnumMode::kConnected: return kMaxConnectedOrder;
    case EnumMode::kTrees: return kMaxTreeOrder;
    case EnumMode::kAll: return kMaxAllOrder;
  }
  return 0;
}

// Isomorphism invariant used to narrow the deletion candidates before canonical labeling.
int deletion_key(const Graph& g, int v) {
  int nbr = 0;
  for (int w : g.neighbors(v)) nbr += g.degree(w);
  return -(g.degree(v) * Graph::kMaxOrder * Graph::kMaxOrder + nbr);
}

VertexSet deletable(const Graph& g, EnumMode mode) {
  if (mode == EnumMode::kAll) return g.vertices();
  return g.vertices() - cut_vertices(g);
}

// The new vertex is order-1. Accept iff it lies in the orbit of the deletion vertex: the
// deletable vertex of maximal key, ties broken by maximal canonical position.
bool accept_child(const Graph& child, EnumMode mode, CanonicalForm& form) {
  const int fresh = child.order() - 1;
  const VertexSet cand = deletable(child, mode);
  if (!cand.contains(fresh)) return false;
  int best_key = deletion_key(child, fresh);
  for (int v : cand) {
    if (deletion_key(child, v) > best_key) return false;
  }
  const auto cl = canonical_labeling(child);
  int chosen = -1;
  for (int v : cand) {
    if (deletion_key(child, v) == best_key && (chosen < 0 || cl.position[v] > cl.position[chosen])) chosen = v;
  }
  if (cl.orbits[chosen] != cl.orbits[fresh]) return false;
  form = cl.form;
  return true;
}

template <typename Visit>
void for_each_child(const Graph& parent, EnumMode mode, Visit visit) {
  const int m = parent.order();
  std::vector<VertexSet> rows(parent.rows().begin(), parent.rows().end());
  rows.emplace_back();
  auto emit = [&](const VertexSet& mask) {
    for (int i = 0; i < m; ++i) rows[i] = parent.neighbors(i);
    rows[m] = mask;
    for (int w : mask) rows[w].insert(m);
    visit(Graph::from_rows(rows));
  };
  if (mode == EnumMode::kTrees) {
    for (int u = 0; u < m; ++u) emit(VertexSet::single(u));
    return;
  }
  const uint64_t limit = uint64_t{1} << m;
  for (uint64_t bits = mode == EnumMode::kAll ? 0 : 1; bits < limit; ++bits) {
    VertexSet mask;
    for (int i = 0; i < m; ++i) {
      if (bits >> i & 1) mask.insert(i);
    }
    emit(mask);
  }
}

EnumStream base_stream(EnumMode mode) { return EnumStream(1, mode, {canonical_form(Graph(1))}); }

}  // namespace

EnumStream extend(const EnumStream& parents, const EnumOptions& options) {
  const int n = parents.order() + 1;
  const EnumMode mode = parents.mode();
  if (n > max_order(mode)) {
    throw PreconditionError("enumeration: order " + std::to_string(n) + " above the " +
                            mode_name(mode) + " cap " + std::to_string(max_order(mode)));
  }
  const std::vector<Graph> pg = parents.graphs();
  std::vector<std::vector<CanonicalForm>> found(pg.size());
  detail::parallel_for(pg.size(), detail::resolve_workers(options.workers), [&](std::size_t i, int) {
    std::unordered_set<std::string> seen;
    for_each_child(pg[i], mode, [&](const Graph& child) {
      CanonicalForm form;
      if (options.strategy == EnumStrategy::kOrderly) {
        if (!accept_child(child, mode, form)) return;
      } else {
        form = canonical_form(child);
      }
      if (seen.insert(form.bytes).second) found[i].push_back(std::move(form));
    });
  });

  std::vector<CanonicalForm> all;
  for (auto& f : found) {
    all.insert(all.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
  }
  std::sort(all.begin(), all.end());
  const auto dup = std::unique(all.begin(), all.end());
  if (options.strategy == EnumStrategy::kOrderly && dup != all.end()) {
    throw Error("enumeration: orderly generation produced a duplicate class");
  }
  all.erase(dup, all.end());
  return EnumStream(n, mode, std::move(all));
}

EnumStream enumerate(int n, EnumMode mode, const EnumOptions& options) {
  if (n < 1 || n > max_order(mode)) {
    throw PreconditionError("enumeration: " + mode_name(mode) + " order must lie in 1.." +
                            std::to_string(max_order(mode)));
  }
  EnumStream s = base_stream(mode);
  while (s.order() < n) s = extend(s, options);
  return s;
}

EnumStream connected_graphs(int n, const EnumOptions& options) { return enumerate(n, EnumMode::kConnected, options); }
EnumStream free_trees(int n, const EnumOptions& options) { return enumerate(n, EnumMode::kTrees, options); }
EnumStream all_graphs(int n, const EnumOptions& options) { return enumerate(n, EnumMode::kAll, options); }

EnumStream free_trees_by_level_sequences(int n) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw PreconditionError("free_trees_by_level_sequences: order must lie in 1.." + std::to_string(kMaxTreeOrder));
  }
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i) level[i] = i;
  std::vector<CanonicalForm> forms;
  std::vector<int> last_at(n);
  while (true) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      if (i > 0) edges.emplace_back(last_at[level[i] - 1], i);
      last_at[level[i]] = i;
    }
    forms.push_back(canonical_form(Graph::from_edges(n, edges)));

    int p = n - 1;
    while (p > 0 && level[p] <= 1) --p;
    if (p == 0) break;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return EnumStream(n, EnumMode::kTrees, std::move(forms));
}

EnumStream filter_by_diss(const EnumStream& stream, int k, int workers) {
  std::vector<char> keep(stream.size(), 0);
  detail::parallel_for(stream.size(), detail::resolve_workers(workers), [&](std::size_t i, int) {
    const Graph g = stream.graph(i);
    const int value = stream.mode() == EnumMode::kTrees ? diss_tree(g).value : diss_number(g);
    keep[i] = value == k;
  });
  std::vector<CanonicalForm> out;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    if (keep[i]) out.push_back(stream.forms()[i]);
  }
  return EnumStream(stream.order(), stream.mode(), std::move(out));
}

void write_stream(std::ostream& out, const EnumStream& stream) {
  for (const auto& f : stream.forms()) out << f.bytes << '\n';
}

}  // namespace dissrho
