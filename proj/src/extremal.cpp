#include "dissrho/extremal.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "dissrho/dissociation.hpp"
#include "dissrho/graph6.hpp"
#include "parallel.hpp"

namespace dissrho {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

int ceil_two_thirds(int n) { return (2 * n + 2) / 3; }

std::string fixed(double x, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

Sweep run_sweep(const EnumStream& stream, const SearchOptions& options) {
  if (stream.mode() == EnumMode::kAll) throw PreconditionError("run_sweep: needs connected graphs or trees");
  const auto start = Clock::now();
  Sweep out;
  out.n = stream.order();
  out.mode = stream.mode();
  out.forms = stream.forms();
  out.diss.assign(stream.size(), 0);
  out.rho.assign(stream.size(), 0.0);
  detail::parallel_for(stream.size(), detail::resolve_workers(options.workers), [&](std::size_t i, int) {
    const Graph g = stream.graph(i);
    out.diss[i] = stream.mode() == EnumMode::kTrees ? diss_tree(g).value : diss_number(g);
    out.rho[i] = spectral_radius(g, options.tol).rho;
  });
  out.runtime_ms = elapsed_ms(start);
  return out;
}

const EnumStream& SweepCache::stream(int n, EnumMode mode) {
  const auto key = std::make_pair(n, mode);
  if (auto it = streams_.find(key); it != streams_.end()) return it->second;
  const EnumOptions eo{options_.strategy, options_.workers};
  EnumStream s = n > 1 ? extend(stream(n - 1, mode), eo) : enumerate(1, mode, eo);
  return streams_.emplace(key, std::move(s)).first->second;
}

const Sweep& SweepCache::sweep(int n, EnumMode mode) {
  const auto key = std::make_pair(n, mode);
  if (auto it = sweeps_.find(key); it != sweeps_.end()) return it->second;
  return sweeps_.emplace(key, run_sweep(stream(n, mode), options_)).first->second;
}

std::vector<FamilySpec> match_families(const Graph& g) {
  const CanonicalForm target = canonical_form(g);
  std::vector<FamilySpec> out;
  for (auto& spec : family_catalog(g.order())) {
    const Graph h = build(spec);
    if (h.size() == g.size() && canonical_form(h) == target) out.push_back(std::move(spec));
  }
  return out;
}

ExtremalReport extremal_report(const Sweep& sweep, int k, bool maximize, const SearchOptions& options) {
  const auto start = Clock::now();
  ExtremalReport rep;
  rep.n = sweep.n;
  rep.k = k;
  rep.mode = sweep.mode;
  rep.maximize = maximize;
  rep.tolerance = options.tol;
  rep.tie_gap = options.tie_gap;

  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < sweep.forms.size(); ++i) {
    if (sweep.diss[i] == k) members.push_back(i);
  }
  rep.class_size = members.size();
  if (!members.empty()) {
    double best = sweep.rho[members.front()];
    for (std::size_t i : members) best = maximize ? std::max(best, sweep.rho[i]) : std::min(best, sweep.rho[i]);
    rep.min_rho = best;
    std::vector<Graph> graphs;
    for (std::size_t i : members) {
      if (std::abs(sweep.rho[i] - best) > options.tie_gap) continue;
      const Graph g = from_graph6(sweep.forms[i].bytes);
      rep.minimizers.push_back(Extremizer{sweep.forms[i].bytes, sweep.rho[i], match_families(g)});
      graphs.push_back(g);
    }
    if (graphs.size() > 1) {
      if (rep.n > kCharPolyMaxOrder) {
        rep.ties = TieStatus::kUnchecked;
      } else {
        const auto first = characteristic_polynomial(graphs.front());
        const bool same = std::all_of(graphs.begin() + 1, graphs.end(),
                                      [&](const Graph& g) { return characteristic_polynomial(g) == first; });
        rep.ties = same ? TieStatus::kExact : TieStatus::kNumerical;
      }
    }
  }
  rep.runtime_ms = options.timing ? sweep.runtime_ms + elapsed_ms(start) : 0.0;
  return rep;
}

ExtremalReport min_rho_search(int n, int k, EnumMode mode, SweepCache& cache) {
  if (k < 2 || k > n) throw PreconditionError("min_rho_search: need 2 <= k <= n");
  return extremal_report(cache.sweep(n, mode), k, false, cache.options());
}

ExtremalReport min_rho_search(int n, int k, EnumMode mode, const SearchOptions& options) {
  SweepCache cache(options);
  return min_rho_search(n, k, mode, cache);
}

bool corollary1_shape(const Graph& tree) {
  if (!is_tree(tree)) throw PreconditionError("corollary1_shape: input is not a tree");
  const VertexSet branch = branch_vertices(tree);
  const Graph rest = induced_subgraph(tree, tree.vertices() - branch);
  std::vector<int> original;
  for (int v : tree.vertices() - branch) original.push_back(v);
  bool short_paths = true;
  VertexSet seen;
  for (int v = 0; v < rest.order(); ++v) {
    if (seen.contains(v)) continue;
    const VertexSet comp = component_of(rest, v);
    seen |= comp;
    bool has_leaf = false;
    for (int w : comp) has_leaf = has_leaf || tree.degree(original[w]) == 1;
    if (has_leaf && !branch.empty() && comp.size() > 2) short_paths = false;
  }
  if (short_paths) return true;
  for (const auto& spec : match_families(tree)) {
    if (spec.kind == FamilyKind::kBnst) return true;
  }
  return false;
}

namespace {

constexpr std::pair<TheoremCase, const char*> kCaseNames[] = {
    {TheoremCase::kTreeClaim, "tree_claim"}, {TheoremCase::kKn1, "k_n1"},
    {TheoremCase::kKn2, "k_n2"},             {TheoremCase::kKCeil23, "k_ceil23"},
    {TheoremCase::kKFloor23, "k_floor23"},   {TheoremCase::kK2, "k_2"},
    {TheoremCase::kMaxJoin, "max_join"},     {TheoremCase::kCorollary1, "corollary1"},
};

std::string describe_extremizers(const ExtremalReport& rep) {
  if (rep.minimizers.empty()) return "empty class";
  std::string out;
  for (const auto& m : rep.minimizers) {
    if (!out.empty()) out += ", ";
    out += m.families.empty() ? m.graph6 : format_family(m.families.front());
  }
  return out;
}

VerifyLine observed_line(int n, int k, EnumMode mode, std::string expected, const ExtremalReport& rep) {
  VerifyLine line;
  line.n = n;
  line.k = k;
  line.mode = mode;
  line.expected = std::move(expected);
  line.observed = describe_extremizers(rep);
  return line;
}

EnumMode choose_mode(int n, int k, bool force_trees, VerifyLine& line) {
  if (!force_trees && n <= kMaxConnectedOrder) return EnumMode::kConnected;
  if (n > kMaxTreeOrder) {
    throw PreconditionError("verify: n = " + std::to_string(n) + " exceeds the tree enumeration cap");
  }
  if (k > ceil_two_thirds(n)) {
    line.note = "tree mode: k > ceil(2n/3), so every minimizer is a tree";
  } else if (force_trees) {
    line.note = "tree mode forced: minimum over trees only";
  } else {
    throw PreconditionError("verify: n = " + std::to_string(n) + " needs connected enumeration for k = " +
                            std::to_string(k));
  }
  return EnumMode::kTrees;
}

// Passes iff the extremal set is exactly one class isomorphic to `expected`.
VerifyLine expect_shape(int n, int k, const FamilySpec& expected, bool force_trees, bool maximize,
                        SweepCache& cache) {
  VerifyLine line;
  line.n = n;
  line.k = k;
  line.mode = maximize ? EnumMode::kConnected : choose_mode(n, k, force_trees, line);
  line.expected = format_family(expected);
  const ExtremalReport rep = extremal_report(cache.sweep(n, line.mode), k, maximize, cache.options());
  line.observed = describe_extremizers(rep);
  const std::string want = canonical_form(build(expected)).bytes;
  line.pass = rep.minimizers.size() == 1 && rep.minimizers.front().graph6 == want;
  if (!line.pass) {
    for (const auto& m : rep.minimizers) {
      if (m.graph6 != want) {
        line.counterexample = m.graph6;
        break;
      }
    }
  }
  return line;
}

}  // namespace

TheoremCase parse_theorem_case(const std::string& name) {
  for (const auto& [c, text] : kCaseNames) {
    if (name == text) return c;
  }
  throw PreconditionError("unknown verification case '" + name + "'");
}

std::string theorem_case_name(TheoremCase c) {
  for (const auto& [value, text] : kCaseNames) {
    if (value == c) return text;
  }
  return "";
}

VerifyLine max_rho_check(int n, int k, SweepCache& cache) {
  if (n > kMaxConnectedOrder) throw PreconditionError("max_rho_check: n above the connected enumeration cap");
  if (k < 2 || k >= n) throw PreconditionError("max_rho_check: need 2 <= k <= n - 1");
  return expect_shape(n, k, FamilySpec{FamilyKind::kJoinMaximizer, {n, k}}, false, true, cache);
}

VerifyResult verify_theorem(TheoremCase which, int n_lo, int n_hi, bool force_trees, SweepCache& cache) {
  if (n_lo > n_hi) throw PreconditionError("verify: empty n range");
  VerifyResult res;
  res.which = which;
  auto spec = [](FamilyKind kind, std::vector<int> params) { return FamilySpec{kind, std::move(params)}; };

  for (int n = n_lo; n <= n_hi; ++n) {
    switch (which) {
      case TheoremCase::kTreeClaim: {
        if (n < 3 || n > kMaxConnectedOrder) {
          throw PreconditionError("verify tree_claim: n must lie in 3.." + std::to_string(kMaxConnectedOrder));
        }
        for (int k = ceil_two_thirds(n) + 1; k <= n - 1; ++k) {
          const ExtremalReport rep = extremal_report(cache.sweep(n, EnumMode::kConnected), k, false, cache.options());
          VerifyLine line = observed_line(n, k, EnumMode::kConnected, "tree", rep);
          for (const auto& m : rep.minimizers) {
            if (!is_tree(from_graph6(m.graph6))) {
              line.pass = false;
              line.counterexample = m.graph6;
            }
          }
          if (rep.minimizers.empty()) line.note = "empty class";
          res.lines.push_back(line);
        }
        break;
      }
      case TheoremCase::kKn1: {
        if (n < 3) throw PreconditionError("verify k_n1: n must be at least 3");
        const FamilySpec want = n % 2 == 1 ? spec(FamilyKind::kSRT, {0, (n - 1) / 2})
                                           : spec(FamilyKind::kSRT, {1, (n - 2) / 2});
        res.lines.push_back(expect_shape(n, n - 1, want, force_trees, false, cache));
        break;
      }
      case TheoremCase::kKn2: {
        if (n < 5) throw PreconditionError("verify k_n2: n must be at least 5");
        FamilySpec want = spec(FamilyKind::kHn, {n});
        if (n == 5) want = spec(FamilyKind::kCycle, {5});
        if (n >= 6 && n <= 8) want = spec(FamilyKind::kPath, {n});
        if (n == 9) want = spec(FamilyKind::kE8T, {});
        res.lines.push_back(expect_shape(n, n - 2, want, force_trees, false, cache));
        break;
      }
      case TheoremCase::kKCeil23: {
        if (n < 2) throw PreconditionError("verify k_ceil23: n must be at least 2");
        res.lines.push_back(expect_shape(n, ceil_two_thirds(n), spec(FamilyKind::kPath, {n}), force_trees, false, cache));
        break;
      }
      case TheoremCase::kKFloor23: {
        if (n < 3) throw PreconditionError("verify k_floor23: n must be at least 3");
        VerifyLine line = expect_shape(n, 2 * n / 3, spec(FamilyKind::kCycle, {n}), force_trees, false, cache);
        if (n % 3 == 0) {
          line.exploratory = true;
          line.pass = true;
          line.counterexample.reset();
          line.note = "n divisible by 3: outside the characterization, reported only";
        }
        res.lines.push_back(line);
        break;
      }
      case TheoremCase::kK2: {
        if (n < 3) throw PreconditionError("verify k_2: n must be at least 3");
        res.lines.push_back(
            expect_shape(n, 2, spec(FamilyKind::kBalancedMultipartite, {n}), force_trees, false, cache));
        break;
      }
      case TheoremCase::kMaxJoin: {
        if (n < 3) throw PreconditionError("verify max_join: n must be at least 3");
        for (int k = 2; k <= n - 1; ++k) res.lines.push_back(max_rho_check(n, k, cache));
        break;
      }
      case TheoremCase::kCorollary1: {
        if (n < 3 || n > kMaxTreeOrder) {
          throw PreconditionError("verify corollary1: n must lie in 3.." + std::to_string(kMaxTreeOrder));
        }
        for (int k = ceil_two_thirds(n) + 1; k <= n - 1; ++k) {
          const ExtremalReport rep = extremal_report(cache.sweep(n, EnumMode::kTrees), k, false, cache.options());
          VerifyLine line = observed_line(n, k, EnumMode::kTrees, "short branch paths or B(n,s,t)", rep);
          for (const auto& m : rep.minimizers) {
            if (!corollary1_shape(from_graph6(m.graph6))) {
              line.pass = false;
              line.counterexample = m.graph6;
            }
          }
          res.lines.push_back(line);
        }
        break;
      }
    }
  }
  res.pass = std::all_of(res.lines.begin(), res.lines.end(), [](const VerifyLine& l) { return l.pass; });
  return res;
}

std::vector<ClaimRow> verify_claims(int max_sum, double tol) {
  std::vector<ClaimRow> rows;
  auto rho = [&](const Graph& g) { return spectral_radius(g, tol).rho; };
  constexpr double kEqual = 1e-10;
  auto strict = [&](std::string claim, std::string inst, double lhs, double rhs) {
    rows.push_back(ClaimRow{std::move(claim), std::move(inst), "<", lhs, rhs, rhs - lhs > kEqual});
  };
  auto equal = [&](std::string claim, std::string inst, double lhs, double rhs) {
    rows.push_back(ClaimRow{std::move(claim), std::move(inst), "=", lhs, rhs, std::abs(lhs - rhs) <= kEqual});
  };
  auto g3 = [](int r, int s, int p, int q) { return g_family(3, r, s, p, q); };
  auto name = [](int r, int s, int p, int q) {
    return format_family(FamilySpec{FamilyKind::kG3, {r, s, p, q}});
  };

  for (int k = 1; k <= 50; ++k) {
    const double lhs = rho(s_rt(0, k));
    const double rhs = std::sqrt(k + 1.0);
    rows.push_back(ClaimRow{"claim1", "S(0," + std::to_string(k) + ")", "~", lhs, rhs, std::abs(lhs - rhs) <= 1e-9});
  }
  for (int q = 2; q <= max_sum; ++q) {
    for (int s = q - 1; s + q <= max_sum; ++s) {
      const int n = 2 * s + 2 * q + 4;
      const double h = rho(h_n(n));
      const double l = rho(g3(0, s, 0, q));
      const double r = rho(g3(1, s, 1, q - 1));
      const std::string inst = "s=" + std::to_string(s) + " q=" + std::to_string(q);
      if (std::abs(s - q) <= 1) {
        equal("claim2 H(" + std::to_string(n) + ") vs " + name(0, s, 0, q), inst, h, l);
      } else {
        strict("claim2 H(" + std::to_string(n) + ") vs " + name(0, s, 0, q), inst, h, l);
      }
      strict("claim2 " + name(0, s, 0, q) + " vs " + name(1, s, 1, q - 1), inst, l, r);
    }
  }
  for (int q = 1; 2 * q <= max_sum; ++q) {
    for (int s = q; s + q <= max_sum; ++s) {
      const std::string inst = "s=" + std::to_string(s) + " q=" + std::to_string(q);
      if (s > q) {
        const double a = rho(g3(0, s, 1, q));
        strict("claim3 " + name(0, s, 1, q) + " vs " + name(1, s, 0, q), inst, a, rho(g3(1, s, 0, q)));
        strict("claim3 " + name(0, s, 1, q) + " vs " + name(0, s + 1, 1, q - 1), inst, a, rho(g3(0, s + 1, 1, q - 1)));
      } else {
        const double a = rho(g3(1, s, 0, q));
        equal("claim3 " + name(1, s, 0, q) + " vs " + name(0, s, 1, q), inst, a, rho(g3(0, s, 1, q)));
        strict("claim3 " + name(1, s, 0, q) + " vs " + name(1, s - 1, 0, q + 1), inst, a, rho(g3(1, s - 1, 0, q + 1)));
      }
    }
  }
  return rows;
}

namespace {

const char* tie_name(TieStatus t) {
  switch (t) {
    case TieStatus::kUnique: return "unique";
    case TieStatus::kExact: return "exact";
    case TieStatus::kNumerical: return "numerical";
    case TieStatus::kUnchecked: return "unchecked";
  }
  return "";
}

}  // namespace

std::string to_json(const ExtremalReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["min_rho"] = r.min_rho ? nlohmann::ordered_json(*r.min_rho) : nlohmann::ordered_json(nullptr);
  auto& list = j["minimizers"] = nlohmann::ordered_json::array();
  for (const auto& m : r.minimizers) {
    nlohmann::ordered_json e;
    e["graph6"] = m.graph6;
    e["family"] = m.families.empty() ? nlohmann::ordered_json(nullptr)
                                     : nlohmann::ordered_json(format_family(m.families.front()));
    e["rho"] = m.rho;
    auto& all = e["matches"] = nlohmann::ordered_json::array();
    for (const auto& f : m.families) all.push_back(format_family(f));
    list.push_back(e);
  }
  j["class_size"] = r.class_size;
  j["runtime_ms"] = r.runtime_ms;
  j["mode"] = mode_name(r.mode);
  j["objective"] = r.maximize ? "max" : "min";
  j["tolerance"] = r.tolerance;
  j["tie_gap"] = r.tie_gap;
  j["ties"] = tie_name(r.ties);
  return j.dump(2);
}

std::string to_csv(const ExtremalReport& r) {
  std::ostringstream out;
  out << "n,k,mode,objective,class_size,min_rho,graph6,rho,family,ties,runtime_ms\n";
  const std::string head = std::to_string(r.n) + ',' + std::to_string(r.k) + ',' + mode_name(r.mode) + ',' +
                           (r.maximize ? "max" : "min") + ',' + std::to_string(r.class_size) + ',' +
                           (r.min_rho ? fixed(*r.min_rho) : "") + ',';
  const std::string tail = std::string(",") + tie_name(r.ties) + ',' + fixed(r.runtime_ms, 3) + '\n';
  if (r.minimizers.empty()) out << head << ",," << tail;
  for (const auto& m : r.minimizers) {
    out << head << '"' << m.graph6 << "\"," << fixed(m.rho) << ','
        << (m.families.empty() ? "" : format_family(m.families.front())) << tail;
  }
  return out.str();
}

std::string to_text(const ExtremalReport& r) {
  std::ostringstream out;
  out << "n=" << r.n << " k=" << r.k << " mode=" << mode_name(r.mode) << " objective=" << (r.maximize ? "max" : "min")
      << " class_size=" << r.class_size << '\n';
  if (!r.min_rho) {
    out << "empty class\n";
    return out.str();
  }
  out << (r.maximize ? "max_rho=" : "min_rho=") << fixed(*r.min_rho) << " ties=" << tie_name(r.ties)
      << " tol=" << sci(r.tolerance) << " runtime_ms=" << fixed(r.runtime_ms, 3) << '\n';
  auto pad = [](std::string text, std::size_t width) {
    if (text.size() < width) text.resize(width, ' ');
    return text;
  };
  out << "  " << pad("graph6", 22) << ' ' << pad("rho", 16) << " family\n";
  for (const auto& m : r.minimizers) {
    std::string fam;
    for (const auto& f : m.families) fam += (fam.empty() ? "" : " ") + format_family(f);
    out << "  " << pad(m.graph6, 22) << ' ' << pad(fixed(m.rho), 16) << ' ' << (fam.empty() ? "-" : fam) << '\n';
  }
  return out.str();
}

}  // namespace dissrho
