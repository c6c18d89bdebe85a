#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dissrho/canonical.hpp"
#include "dissrho/cli.hpp"
#include "dissrho/families.hpp"
#include "dissrho/graph6.hpp"

using namespace dissrho;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(args, in, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("dissrho_cli_" + name)).string();
}

}  // namespace

TEST_CASE("family and rho compose") {
  const Outcome fam = run_cli({"family", "S(0,3)"});
  CHECK(fam.code == 0);
  CHECK(fam.out == to_graph6(s_rt(0, 3)) + "\n");
  const Outcome rho = run_cli({"rho", "-"}, fam.out);
  CHECK(rho.code == 0);
  CHECK(std::abs(std::stod(rho.out) - 2.0) <= 1e-9);
  CHECK(rho.out.rfind("2.000000000000 residual=", 0) == 0);
}

TEST_CASE("diss") {
  const Outcome h = run_cli({"diss", "H(12)"});
  CHECK(h.code == 0);
  CHECK(h.out.rfind("10 witness=", 0) == 0);
  CHECK(h.out.find("graph=H(12)") != std::string::npos);
  const std::string c5 = to_graph6(cycle(5));
  CHECK(run_cli({"diss", c5}).out.rfind("3 ", 0) == 0);
  CHECK(run_cli({"diss", c5, "--engine", "brute"}).out == run_cli({"diss", c5}).out);
  CHECK(run_cli({"diss", "P(5)"}).out.rfind("4 ", 0) == 0);
  CHECK(run_cli({"diss", c5, "--engine", "tree"}).code == 2);

  const Outcome many = run_cli({"diss", "-"}, to_graph6(path(3)) + "\n" + to_graph6(cycle(6)) + "\n");
  CHECK(count_lines(many.out) == 2);

  const auto j = nlohmann::json::parse(run_cli({"diss", "C(7)", "--format", "json"}).out);
  CHECK(j["diss"] == 4);
  CHECK(j["witness"].size() == 4);

  const std::string file = temp_path("input.g6");
  {
    std::ofstream f(file);
    f << to_graph6(path(7)) << "\n" << to_graph6(star(6)) << "\n";
  }
  const Outcome csv = run_cli({"--format", "csv", "diss", "--input", file});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("graph,diss,witness\n", 0) == 0);
  CHECK(count_lines(csv.out) == 3);
  std::remove(file.c_str());
}

TEST_CASE("enumerate") {
  CHECK(count_lines(run_cli({"enumerate", "5"}).out) == 21);
  CHECK(count_lines(run_cli({"enumerate", "7", "--trees"}).out) == 11);
  CHECK(count_lines(run_cli({"enumerate", "4", "--all"}).out) == 11);
  CHECK(run_cli({"enumerate", "6", "--strategy", "hashset"}).out == run_cli({"enumerate", "6"}).out);
  const Outcome k3 = run_cli({"enumerate", "5", "--diss", "3"});
  CHECK(k3.out.find(canonical_form(cycle(5)).bytes + "\n") != std::string::npos);
  const auto j = nlohmann::json::parse(run_cli({"enumerate", "6", "--format", "json"}).out);
  CHECK(j["count"] == 112);
  CHECK(run_cli({"enumerate", "10"}).code == 2);
  CHECK(run_cli({"enumerate", "5", "--trees", "--all"}).code == 2);
}

TEST_CASE("search reports") {
  const Outcome text = run_cli({"search", "7", "2"});
  CHECK(text.code == 0);
  CHECK(text.out.find("min_rho=5.162277660") != std::string::npos);
  CHECK(text.out.find("BMP(7)") != std::string::npos);

  const Outcome a = run_cli({"search", "9", "7", "--format", "json", "--no-timing"});
  const Outcome b = run_cli({"--format", "json", "search", "9", "7", "--no-timing"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["minimizers"].size() == 1);
  const auto& matches = j["minimizers"][0]["matches"];
  CHECK(std::find(matches.begin(), matches.end(), "E8T") != matches.end());
  CHECK(std::abs(j["min_rho"].get<double>() - 2.0) < 1e-9);

  const Outcome trees = run_cli({"search", "12", "10", "--trees", "--format", "csv"});
  CHECK(trees.code == 0);
  CHECK(trees.out.find("H(12)") != std::string::npos);
  CHECK(run_cli({"search", "10", "8"}).code == 2);
  CHECK(run_cli({"search", "6", "1"}).code == 2);
}

TEST_CASE("verify and claims") {
  const Outcome v = run_cli({"verify", "k_n2", "--n-range", "10..12", "--trees"});
  CHECK(v.code == 0);
  CHECK(v.out.find("result: PASS") != std::string::npos);
  CHECK(v.out.find("observed=H(10)") != std::string::npos);
  CHECK(v.out.find("observed=H(12)") != std::string::npos);

  const Outcome f = run_cli({"verify", "k_floor23", "--n-range", "5..6"});
  CHECK(f.code == 0);
  CHECK(f.out.find("INFO") != std::string::npos);

  // A huge tie gap merges distinct classes, which breaks uniqueness.
  const Outcome fail = run_cli({"--tie-gap", "10", "verify", "k_ceil23", "--n-range", "5..5"});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("FAIL") != std::string::npos);
  CHECK(fail.out.find("counterexample: ") != std::string::npos);

  CHECK(run_cli({"verify", "bogus", "--n-range", "5..6"}).code == 2);
  CHECK(run_cli({"verify", "k_n1", "--n-range", "5-6"}).code == 2);
  CHECK(run_cli({"verify", "k_n1"}).code == 2);

  const Outcome c = run_cli({"claims", "--max", "8"});
  CHECK(c.code == 0);
  CHECK(c.out.find("result: PASS") != std::string::npos);
  CHECK(c.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors and help") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"diss", "P(5)", "--nope"}).code == 2);
  CHECK(run_cli({"--format", "xml", "diss", "P(5)"}).code == 2);
  const Outcome help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("search") != std::string::npos);
  const Outcome bad = run_cli({"diss", "D?"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("byte") != std::string::npos);
  CHECK(run_cli({"rho", to_graph6(Graph(3))}).code == 2);
  CHECK(run_cli({"diss"}).code == 2);
  CHECK(run_cli({"family", "Q(2)"}).code == 2);
  CHECK(run_cli({"--tol", "0", "rho", "P(4)"}).code == 2);
}

TEST_CASE("environment and flags") {
  const std::string g = to_graph6(path(6));
  ::setenv("DISS_SPECTRA_TOL", "1e-6", 1);
  auto tol_of = [&](std::vector<std::string> args) {
    return nlohmann::json::parse(run_cli(args).out)["tolerance"].get<double>();
  };
  CHECK(tol_of({"--format", "json", "rho", g}) == 1e-6);
  CHECK(tol_of({"--format", "json", "--tol", "1e-11", "rho", g}) == 1e-11);
  CHECK(run_cli({"--tie-gap", "1e-9", "rho", g}).code == 2);
  ::setenv("DISS_SPECTRA_TOL", "abc", 1);
  CHECK(run_cli({"rho", g}).code == 2);
  ::unsetenv("DISS_SPECTRA_TOL");
  ::setenv("DISS_SPECTRA_WORKERS", "2", 1);
  CHECK(run_cli({"enumerate", "6"}).out == run_cli({"--workers", "1", "enumerate", "6"}).out);
  ::setenv("DISS_SPECTRA_WORKERS", "x", 1);
  CHECK(run_cli({"enumerate", "6"}).code == 2);
  ::unsetenv("DISS_SPECTRA_WORKERS");

  const std::string file = temp_path("out.txt");
  const Outcome o = run_cli({"--out", file, "family", "P(4)"});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream f(file);
  std::string line;
  std::getline(f, line);
  CHECK(line == to_graph6(path(4)));
  std::remove(file.c_str());
}
