#include "dissrho/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace dissrho {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

// Grows a graph vertex by vertex; finish() validates the order cap.
class Builder {
 public:
  int add() { return order_++; }
  void edge(int u, int v) { edges_.emplace_back(u, v); }
  int pendant(int at) {
    const int v = add();
    edge(at, v);
    return v;
  }
  void branch_edge(int at) { pendant(pendant(at)); }
  int chain(int count) {
    const int first = order_;
    for (int i = 0; i < count; ++i) {
      add();
      if (i > 0) edge(first + i - 1, first + i);
    }
    return first;
  }
  Graph finish() const {
    require(order_ <= Graph::kMaxOrder, "family order " + std::to_string(order_) + " exceeds " +
                                            std::to_string(Graph::kMaxOrder));
    return Graph::from_edges(order_, edges_);
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace

Graph path(int n) {
  require(n >= 1, "path: n must be at least 1");
  Builder b;
  b.chain(n);
  return b.finish();
}

Graph cycle(int n) {
  require(n >= 3, "cycle: n must be at least 3");
  Builder b;
  b.chain(n);
  b.edge(n - 1, 0);
  return b.finish();
}

Graph star(int n) {
  require(n >= 1, "star: n must be at least 1");
  Builder b;
  const int c = b.add();
  for (int i = 1; i < n; ++i) b.pendant(c);
  return b.finish();
}

Graph s_rt(int r, int t) {
  require(r >= 0 && t >= 0 && r + t >= 1, "S(r,t): need r, t >= 0 and r + t >= 1");
  Builder b;
  const int c = b.add();
  for (int i = 0; i < r; ++i) b.pendant(c);
  for (int i = 0; i < t; ++i) b.branch_edge(c);
  return b.finish();
}

Graph h_n(int n) {
  require(n >= 8, "H(n): n must be at least 8");
  if (n % 2 == 0) return g_family(3, 0, (n - 4 + 3) / 4, 0, (n - 4) / 4);
  return g_family(3, 0, (n - 5 + 3) / 4, 1, (n - 5) / 4);
}

Graph b_nst(int n, int s, int t) {
  require(s >= 0 && t >= 0 && s + t >= 1, "B(n,s,t): need s, t >= 0 and s + t >= 1");
  const int m = n - s - 2 * t;
  require(m >= 1, "B(n,s,t): need n - s - 2t >= 1");
  Builder b;
  b.chain(m);
  for (int i = 0; i < s; ++i) b.pendant(m - 1);
  for (int i = 0; i < t; ++i) b.branch_edge(m - 1);
  return b.finish();
}

Graph smith_graph(SmithKind kind, int n) {
  Builder b;
  switch (kind) {
    case SmithKind::kW:
      require(n >= 5, "W(n): n must be at least 5");
      b.chain(n - 1);
      b.pendant(1);
      break;
    case SmithKind::kWTilde:
      require(n >= 6, "WT(n): n must be at least 6");
      b.chain(n - 2);
      b.pendant(1);
      b.pendant(n - 4);
      break;
    case SmithKind::kE6:
      b.chain(5);
      b.pendant(2);
      break;
    case SmithKind::kE7:
      b.chain(6);
      b.pendant(2);
      break;
    case SmithKind::kE8:
      b.chain(7);
      b.pendant(2);
      break;
    case SmithKind::kE6T:
      b.chain(5);
      b.branch_edge(2);
      break;
    case SmithKind::kE7T:
      b.chain(7);
      b.pendant(3);
      break;
    case SmithKind::kE8T:
      b.chain(8);
      b.pendant(2);
      break;
  }
  return b.finish();
}

Graph g_family(int i, int r, int s, int p, int q) {
  require(i >= 1 && i <= 4, "G_i: i must be 1, 2, 3 or 4");
  require(r >= 0 && s >= 0 && p >= 0 && q >= 0, "G_i(r,s,p,q): parameters must be nonnegative");
  Builder b;
  const int v1 = b.add();
  const int v2 = b.add();
  if (i == 1) {
    b.edge(v1, v2);
  } else {
    const int v3 = b.add();
    b.edge(v1, v3);
    if (i == 3) {
      const int v4 = b.add();
      b.edge(v3, v4);
      b.edge(v4, v2);
    } else {
      b.edge(v3, v2);
      if (i == 4) b.pendant(v3);
    }
  }
  for (int k = 0; k < r; ++k) b.pendant(v1);
  for (int k = 0; k < s; ++k) b.branch_edge(v1);
  for (int k = 0; k < p; ++k) b.pendant(v2);
  for (int k = 0; k < q; ++k) b.branch_edge(v2);
  return b.finish();
}

Graph balanced_multipartite(int n) {
  require(n >= 2, "balanced multipartite: n must be at least 2");
  Builder b;
  for (int v = 0; v < n; ++v) b.add();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (u / 2 != v / 2) b.edge(u, v);
    }
  }
  return b.finish();
}

Graph join_maximizer(int n, int k) {
  require(n >= 2 && k >= 2 && k <= n, "join maximizer: need n >= 2 and 2 <= k <= n");
  Builder b;
  for (int v = 0; v < n; ++v) b.add();
  const int c = n - k;
  for (int u = 0; u < c; ++u) {
    for (int v = u + 1; v < n; ++v) b.edge(u, v);
  }
  for (int v = c; v + 1 < n; v += 2) b.edge(v, v + 1);
  return b.finish();
}

namespace {

struct KindInfo {
  FamilyKind kind;
  const char* name;
  int arity;
};

constexpr KindInfo kKinds[] = {
    {FamilyKind::kPath, "P", 1},    {FamilyKind::kCycle, "C", 1},
    {FamilyKind::kStar, "Star", 1}, {FamilyKind::kSRT, "S", 2},
    {FamilyKind::kHn, "H", 1},      {FamilyKind::kBnst, "B", 3},
    {FamilyKind::kWn, "W", 1},      {FamilyKind::kE6, "E6", 0},
    {FamilyKind::kE7, "E7", 0},     {FamilyKind::kE8, "E8", 0},
    {FamilyKind::kWTilde, "WT", 1}, {FamilyKind::kE6T, "E6T", 0},
    {FamilyKind::kE7T, "E7T", 0},   {FamilyKind::kE8T, "E8T", 0},
    {FamilyKind::kG1, "G1", 4},     {FamilyKind::kG2, "G2", 4},
    {FamilyKind::kG3, "G3", 4},     {FamilyKind::kG4, "G4", 4},
    {FamilyKind::kBalancedMultipartite, "BMP", 1},
    {FamilyKind::kJoinMaximizer, "Join", 2},
};

constexpr std::pair<const char*, FamilyKind> kAliases[] = {
    {"PATH", FamilyKind::kPath},
    {"CYCLE", FamilyKind::kCycle},
    {"SRT", FamilyKind::kSRT},
    {"HN", FamilyKind::kHn},
    {"WN", FamilyKind::kWn},
    {"WTILDE", FamilyKind::kWTilde},
    {"MULTIPARTITE", FamilyKind::kBalancedMultipartite},
    {"JOINMAXIMIZER", FamilyKind::kJoinMaximizer},
};

const KindInfo& info(FamilyKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw Error("unknown family kind");
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

Graph build(const FamilySpec& spec) {
  const auto& k = info(spec.kind);
  require(static_cast<int>(spec.params.size()) == k.arity,
          std::string(k.name) + ": expected " + std::to_string(k.arity) + " parameters");
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::kPath: return path(p[0]);
    case FamilyKind::kCycle: return cycle(p[0]);
    case FamilyKind::kStar: return star(p[0]);
    case FamilyKind::kSRT: return s_rt(p[0], p[1]);
    case FamilyKind::kHn: return h_n(p[0]);
    case FamilyKind::kBnst: return b_nst(p[0], p[1], p[2]);
    case FamilyKind::kWn: return smith_graph(SmithKind::kW, p[0]);
    case FamilyKind::kE6: return smith_graph(SmithKind::kE6);
    case FamilyKind::kE7: return smith_graph(SmithKind::kE7);
    case FamilyKind::kE8: return smith_graph(SmithKind::kE8);
    case FamilyKind::kWTilde: return smith_graph(SmithKind::kWTilde, p[0]);
    case FamilyKind::kE6T: return smith_graph(SmithKind::kE6T);
    case FamilyKind::kE7T: return smith_graph(SmithKind::kE7T);
    case FamilyKind::kE8T: return smith_graph(SmithKind::kE8T);
    case FamilyKind::kG1: return g_family(1, p[0], p[1], p[2], p[3]);
    case FamilyKind::kG2: return g_family(2, p[0], p[1], p[2], p[3]);
    case FamilyKind::kG3: return g_family(3, p[0], p[1], p[2], p[3]);
    case FamilyKind::kG4: return g_family(4, p[0], p[1], p[2], p[3]);
    case FamilyKind::kBalancedMultipartite: return balanced_multipartite(p[0]);
    case FamilyKind::kJoinMaximizer: return join_maximizer(p[0], p[1]);
  }
  throw Error("unknown family kind");
}

FamilySpec parse_family(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  const std::size_t name_begin = pos;
  while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == name_begin) throw ParseError("family: expected a name", pos);
  const std::string name = upper(text.substr(name_begin, pos - name_begin));

  FamilySpec spec;
  bool known = false;
  for (const auto& k : kKinds) {
    if (upper(k.name) == name) {
      spec.kind = k.kind;
      known = true;
    }
  }
  for (const auto& [alias, kind] : kAliases) {
    if (alias == name) {
      spec.kind = kind;
      known = true;
    }
  }
  if (!known) throw ParseError("family: unknown name '" + name + "'", name_begin);

  skip_space();
  if (pos < text.size() && text[pos] == '(') {
    ++pos;
    while (true) {
      skip_space();
      int value = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc{}) throw ParseError("family: expected an integer", pos);
      spec.params.push_back(value);
      pos = static_cast<std::size_t>(ptr - text.data());
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("family: expected ',' or ')'", pos);
    }
    skip_space();
  }
  if (pos != text.size()) throw ParseError("family: trailing characters", pos);
  const auto& k = info(spec.kind);
  if (static_cast<int>(spec.params.size()) != k.arity) {
    throw ParseError(std::string("family: ") + k.name + " takes " + std::to_string(k.arity) + " parameters",
                     name_begin);
  }
  return spec;
}

std::string format_family(const FamilySpec& spec) {
  std::string out = info(spec.kind).name;
  if (spec.params.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(spec.params[i]);
  }
  out += ')';
  return out;
}

std::vector<FamilySpec> family_catalog(int n) {
  require(n >= 1, "family_catalog: n must be at least 1");
  std::vector<FamilySpec> out;
  auto add = [&](FamilyKind kind, std::vector<int> params) { out.push_back(FamilySpec{kind, std::move(params)}); };
  add(FamilyKind::kPath, {n});
  if (n >= 3) add(FamilyKind::kCycle, {n});
  add(FamilyKind::kStar, {n});
  for (int t = 0; 2 * t + 1 <= n; ++t) {
    const int r = n - 1 - 2 * t;
    if (r + t >= 1) add(FamilyKind::kSRT, {r, t});
  }
  if (n >= 8) add(FamilyKind::kHn, {n});
  for (int t = 0; 2 * t < n; ++t) {
    for (int s = 0; s + 2 * t < n; ++s) {
      if (s + t >= 1) add(FamilyKind::kBnst, {n, s, t});
    }
  }
  if (n >= 5) add(FamilyKind::kWn, {n});
  if (n >= 6) add(FamilyKind::kWTilde, {n});
  if (n == 6) add(FamilyKind::kE6, {});
  if (n == 7) add(FamilyKind::kE7, {});
  if (n == 8) add(FamilyKind::kE8, {});
  if (n == 7) add(FamilyKind::kE6T, {});
  if (n == 8) add(FamilyKind::kE7T, {});
  if (n == 9) add(FamilyKind::kE8T, {});
  const FamilyKind gs[] = {FamilyKind::kG1, FamilyKind::kG2, FamilyKind::kG3, FamilyKind::kG4};
  const int base[] = {2, 3, 4, 4};
  for (int i = 0; i < 4; ++i) {
    const int room = n - base[i];
    for (int s = 0; 2 * s <= room; ++s) {
      for (int q = 0; 2 * s + 2 * q <= room; ++q) {
        for (int r = 0; 2 * s + 2 * q + r <= room; ++r) {
          add(gs[i], {r, s, room - 2 * s - 2 * q - r, q});
        }
      }
    }
  }
  if (n >= 2) add(FamilyKind::kBalancedMultipartite, {n});
  for (int k = 2; k <= n; ++k) add(FamilyKind::kJoinMaximizer, {n, k});
  return out;
}

}  // namespace dissrho
