#include "dissrho/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dissrho/dissociation.hpp"
#include "dissrho/enumeration.hpp"
#include "dissrho/extremal.hpp"
#include "dissrho/families.hpp"
#include "dissrho/graph6.hpp"
#include "dissrho/spectral.hpp"

namespace dissrho::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  double tol = kDefaultTol;
  double tie_gap = kTieGap;
  int workers = 0;
  std::string format = "text";
  std::string out_file;
};

struct NamedGraph {
  std::string label;
  Graph graph;
};

Graph parse_graph_text(const std::string& text) {
  if (text.find('(') != std::string::npos) return build(parse_family(text));
  try {
    return from_graph6(text);
  } catch (const ParseError& g6_error) {
    try {
      return build(parse_family(text));
    } catch (const ParseError&) {
      throw g6_error;
    }
  }
}

std::vector<NamedGraph> load_graphs(const std::string& arg, const std::string& input_file, std::istream& in) {
  if (!arg.empty() && !input_file.empty()) throw UsageError("give either a graph argument or --input, not both");
  if (arg.empty() && input_file.empty()) throw UsageError("a graph argument or --input FILE is required");
  std::vector<NamedGraph> out;
  auto read_lines = [&](std::istream& s) {
    for (const Graph& g : read_graph6_lines(s)) out.push_back(NamedGraph{to_graph6(g), g});
  };
  if (!input_file.empty()) {
    std::ifstream f(input_file);
    if (!f) throw UsageError("cannot open " + input_file);
    read_lines(f);
  } else if (arg == "-") {
    read_lines(in);
  } else {
    out.push_back(NamedGraph{arg, parse_graph_text(arg)});
  }
  if (out.empty()) throw UsageError("no graphs in input");
  return out;
}

std::string fixed(double x, int digits = 12) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << x;
  return s.str();
}

std::string sci(double x) {
  std::ostringstream s;
  s.setf(std::ios::scientific);
  s.precision(3);
  s << x;
  return s.str();
}

std::string join_vertices(const VertexSet& s, char sep) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += sep;
    out += std::to_string(v);
  }
  return out;
}

std::string emit_json_list(const std::vector<Json>& items) {
  if (items.size() == 1) return items.front().dump(2) + "\n";
  Json arr = Json::array();
  for (const auto& i : items) arr.push_back(i);
  return arr.dump(2) + "\n";
}

int cmd_diss(const std::vector<NamedGraph>& graphs, const std::string& engine, const Config& cfg, std::ostream& out) {
  std::vector<Json> items;
  if (cfg.format == "csv") out << "graph,diss,witness\n";
  for (const auto& [label, g] : graphs) {
    DissResult r;
    if (engine == "brute") {
      r = diss_bruteforce(g);
    } else if (engine == "tree" || (engine == "auto" && is_tree(g))) {
      r = diss_tree(g);
    } else {
      r = diss_exact(g);
    }
    if (cfg.format == "json") {
      Json j;
      j["graph"] = label;
      j["graph6"] = to_graph6(g);
      j["diss"] = r.value;
      j["witness"] = std::vector<int>(r.witness.begin(), r.witness.end());
      items.push_back(j);
    } else if (cfg.format == "csv") {
      out << '"' << label << "\"," << r.value << ",\"" << join_vertices(r.witness, ' ') << "\"\n";
    } else {
      out << r.value << " witness=" << join_vertices(r.witness, ',') << " graph=" << label << '\n';
    }
  }
  if (cfg.format == "json") out << emit_json_list(items);
  return 0;
}

int cmd_rho(const std::vector<NamedGraph>& graphs, const Config& cfg, std::ostream& out) {
  std::vector<Json> items;
  if (cfg.format == "csv") out << "graph,rho,residual,iterations\n";
  for (const auto& [label, g] : graphs) {
    const SpectralResult r = spectral_radius(g, cfg.tol);
    if (cfg.format == "json") {
      Json j;
      j["graph"] = label;
      j["graph6"] = to_graph6(g);
      j["rho"] = r.rho;
      j["residual"] = r.residual;
      j["iterations"] = r.iterations;
      j["tolerance"] = cfg.tol;
      items.push_back(j);
    } else if (cfg.format == "csv") {
      out << '"' << label << "\"," << fixed(r.rho) << ',' << sci(r.residual) << ',' << r.iterations << '\n';
    } else {
      out << fixed(r.rho) << " residual=" << sci(r.residual) << " iterations=" << r.iterations << " graph=" << label
          << '\n';
    }
  }
  if (cfg.format == "json") out << emit_json_list(items);
  return 0;
}

int cmd_family(const std::string& text, const Config& cfg, std::ostream& out) {
  const FamilySpec spec = parse_family(text);
  const Graph g = build(spec);
  if (cfg.format == "json") {
    Json j;
    j["family"] = format_family(spec);
    j["order"] = g.order();
    j["size"] = g.size();
    j["graph6"] = to_graph6(g);
    out << j.dump(2) << '\n';
  } else {
    out << to_graph6(g) << '\n';
  }
  return 0;
}

int cmd_enumerate(int n, EnumMode mode, std::optional<int> k, EnumStrategy strategy, const Config& cfg,
                  std::ostream& out) {
  EnumStream s = enumerate(n, mode, EnumOptions{strategy, cfg.workers});
  if (k) s = filter_by_diss(s, *k, cfg.workers);
  if (cfg.format == "json") {
    Json j;
    j["n"] = n;
    j["mode"] = mode_name(mode);
    j["diss"] = k ? Json(*k) : Json(nullptr);
    j["count"] = s.size();
    auto& list = j["graphs"] = Json::array();
    for (const auto& f : s.forms()) list.push_back(f.bytes);
    out << j.dump(2) << '\n';
  } else {
    if (cfg.format == "csv") out << "graph6\n";
    write_stream(out, s);
  }
  return 0;
}

std::string format_report(const ExtremalReport& r, const std::string& format) {
  if (format == "json") return to_json(r) + "\n";
  if (format == "csv") return to_csv(r);
  return to_text(r);
}

int cmd_search(int n, int k, bool trees, bool timing, const Config& cfg, std::ostream& out) {
  SearchOptions opts{cfg.tol, cfg.tie_gap, cfg.workers, EnumStrategy::kOrderly, timing};
  out << format_report(min_rho_search(n, k, trees ? EnumMode::kTrees : EnumMode::kConnected, opts), cfg.format);
  return 0;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--n-range expects a..b, got '" + text + "'");
  }
}

int cmd_verify(const std::string& name, const std::string& range, bool trees, const Config& cfg, std::ostream& out) {
  const TheoremCase which = parse_theorem_case(name);
  const auto [lo, hi] = parse_range(range);
  SweepCache cache(SearchOptions{cfg.tol, cfg.tie_gap, cfg.workers, EnumStrategy::kOrderly, false});
  const VerifyResult res = verify_theorem(which, lo, hi, trees, cache);
  auto status = [](const VerifyLine& l) { return l.exploratory ? "INFO" : l.pass ? "PASS" : "FAIL"; };
  if (cfg.format == "json") {
    Json j;
    j["case"] = name;
    j["n_range"] = {lo, hi};
    j["pass"] = res.pass;
    auto& lines = j["lines"] = Json::array();
    for (const auto& l : res.lines) {
      Json e;
      e["n"] = l.n;
      e["k"] = l.k;
      e["mode"] = mode_name(l.mode);
      e["expected"] = l.expected;
      e["observed"] = l.observed;
      e["status"] = status(l);
      e["note"] = l.note;
      e["counterexample"] = l.counterexample ? Json(*l.counterexample) : Json(nullptr);
      lines.push_back(e);
    }
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "case,n,k,mode,expected,observed,status,counterexample,note\n";
    for (const auto& l : res.lines) {
      out << name << ',' << l.n << ',' << l.k << ',' << mode_name(l.mode) << ",\"" << l.expected << "\",\""
          << l.observed << "\"," << status(l) << ",\"" << l.counterexample.value_or("") << "\",\"" << l.note
          << "\"\n";
    }
  } else {
    out << "verify " << name << " n=" << lo << ".." << hi << '\n';
    for (const auto& l : res.lines) {
      out << "  n=" << l.n << " k=" << l.k << " mode=" << mode_name(l.mode) << " expected=" << l.expected
          << " observed=" << l.observed << ' ' << status(l);
      if (!l.note.empty()) out << " (" << l.note << ')';
      out << '\n';
      if (l.counterexample) out << "    counterexample: " << *l.counterexample << '\n';
    }
    out << "result: " << (res.pass ? "PASS" : "FAIL") << '\n';
  }
  return res.pass ? 0 : 1;
}

int cmd_claims(int max_sum, const Config& cfg, std::ostream& out) {
  const auto rows = verify_claims(max_sum, std::min(cfg.tol, kSmithTol));
  bool pass = true;
  for (const auto& r : rows) pass = pass && r.pass;
  if (cfg.format == "json") {
    Json j;
    j["max_sum"] = max_sum;
    j["pass"] = pass;
    auto& list = j["rows"] = Json::array();
    for (const auto& r : rows) {
      list.push_back(Json{{"claim", r.claim}, {"instance", r.instance}, {"lhs", r.lhs},
                          {"relation", r.relation}, {"rhs", r.rhs}, {"pass", r.pass}});
    }
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "claim,instance,lhs,relation,rhs,status\n";
    for (const auto& r : rows) {
      out << '"' << r.claim << "\",\"" << r.instance << "\"," << fixed(r.lhs) << ',' << r.relation << ','
          << fixed(r.rhs) << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
    }
  } else {
    for (const auto& r : rows) {
      out << (r.pass ? "PASS " : "FAIL ") << r.claim << " [" << r.instance << "] " << fixed(r.lhs) << ' '
          << r.relation << ' ' << fixed(r.rhs) << '\n';
    }
    out << "result: " << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? 0 : 1;
}

void apply_environment(Config& cfg) {
  if (const char* v = std::getenv("DISS_SPECTRA_TOL")) {
    try {
      cfg.tol = std::stod(v);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("DISS_SPECTRA_TOL is not a number: ") + v);
    }
  }
  if (const char* v = std::getenv("DISS_SPECTRA_WORKERS")) {
    try {
      cfg.workers = std::stoi(v);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("DISS_SPECTRA_WORKERS is not an integer: ") + v);
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Dissociation number and spectral radius toolkit", "dissrho"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", cfg.tol, "Spectral radius tolerance (env DISS_SPECTRA_TOL)");
  auto* tie_gap_opt = app.add_option("--tie-gap", cfg.tie_gap, "Gap below which two spectral radii tie");
  app.add_option("--workers", cfg.workers, "Worker threads, 0 = all cores (env DISS_SPECTRA_WORKERS)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out_file, "Write output to FILE instead of standard output");

  std::string graph_arg, input_file, engine = "auto";
  auto* diss = app.add_subcommand("diss", "Dissociation number and a maximum dissociation set");
  diss->add_option("graph", graph_arg, "graph6 string, family spec, or - for graph6 lines on stdin");
  diss->add_option("--input", input_file, "File of graph6 lines");
  diss->add_option("--engine", engine, "auto, bb, brute or tree")->check(CLI::IsMember({"auto", "bb", "brute", "tree"}));

  auto* rho = app.add_subcommand("rho", "Spectral radius");
  rho->add_option("graph", graph_arg, "graph6 string, family spec, or - for graph6 lines on stdin");
  rho->add_option("--input", input_file, "File of graph6 lines");

  std::string family_text;
  auto* family = app.add_subcommand("family", "Build a named family member and print its graph6");
  family->add_option("spec", family_text, "e.g. G3(1,2,0,3)")->required();

  int n = 0, k = 0;
  bool trees = false, all = false, no_timing = false;
  std::optional<int> diss_filter;
  std::string strategy = "orderly";
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Graphs of order n up to isomorphism, as graph6 lines");
  enumerate_cmd->add_option("n", n)->required();
  enumerate_cmd->add_flag("--trees", trees, "Free trees only");
  enumerate_cmd->add_flag("--all", all, "All graphs, connected or not");
  enumerate_cmd->add_option("--diss", diss_filter, "Keep graphs with this dissociation number");
  enumerate_cmd->add_option("--strategy", strategy, "orderly or hashset")
      ->check(CLI::IsMember({"orderly", "hashset"}));

  auto* search = app.add_subcommand("search", "Minimum spectral radius over graphs with diss = k");
  search->add_option("n", n)->required();
  search->add_option("k", k)->required();
  search->add_flag("--trees", trees, "Search trees only");
  search->add_flag("--no-timing", no_timing, "Report runtime_ms as 0");

  std::string case_name, range;
  auto* verify = app.add_subcommand("verify", "Check a characterization over a range of orders");
  verify->add_option("case", case_name,
                     "tree_claim, k_n1, k_n2, k_ceil23, k_floor23, k_2, max_join or corollary1")
      ->required();
  verify->add_option("--n-range", range, "a..b")->required();
  verify->add_flag("--trees", trees, "Use tree enumeration");

  int max_sum = 8;
  auto* claims = app.add_subcommand("claims", "Numeric table of the Perron-vector claims");
  claims->add_option("--max", max_sum, "Largest s + q");

  std::ostringstream buffer;
  try {
    apply_environment(cfg);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!(cfg.tol > 0)) throw UsageError("--tol must be positive");
    if (tie_gap_opt->count() == 0) cfg.tie_gap = std::max(cfg.tie_gap, cfg.tol);
    if (cfg.tie_gap < cfg.tol) throw UsageError("--tie-gap must be at least --tol");
    if (cfg.workers < 0) throw UsageError("--workers must be nonnegative");

    int code = 0;
    if (diss->parsed()) {
      code = cmd_diss(load_graphs(graph_arg, input_file, in), engine, cfg, buffer);
    } else if (rho->parsed()) {
      code = cmd_rho(load_graphs(graph_arg, input_file, in), cfg, buffer);
    } else if (family->parsed()) {
      code = cmd_family(family_text, cfg, buffer);
    } else if (enumerate_cmd->parsed()) {
      if (trees && all) throw UsageError("--trees and --all are exclusive");
      const EnumMode mode = trees ? EnumMode::kTrees : all ? EnumMode::kAll : EnumMode::kConnected;
      code = cmd_enumerate(n, mode, diss_filter, strategy == "hashset" ? EnumStrategy::kHashSet : EnumStrategy::kOrderly,
                           cfg, buffer);
    } else if (search->parsed()) {
      code = cmd_search(n, k, trees, !no_timing, cfg, buffer);
    } else if (verify->parsed()) {
      code = cmd_verify(case_name, range, trees, cfg, buffer);
    } else if (claims->parsed()) {
      code = cmd_claims(max_sum, cfg, buffer);
    }

    if (cfg.out_file.empty()) {
      out << buffer.str();
    } else {
      std::ofstream f(cfg.out_file);
      if (!f) throw UsageError("cannot write " + cfg.out_file);
      f << buffer.str();
    }
    return code;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace dissrho::cli
