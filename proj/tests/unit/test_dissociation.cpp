#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dissrho/dissociation.hpp"
#include "dissrho/enumeration.hpp"
#include "dissrho/families.hpp"
#include "dissrho/graph.hpp"
#include "test_support.hpp"

using namespace dissrho;
using testsupport::Rng;

namespace {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph::from_edges(n, e);
}

void check_result(const Graph& g, const DissResult& r, int expected) {
  CHECK(r.value == expected);
  CHECK(r.witness.size() == expected);
  CHECK(is_dissociation_set(g, r.witness));
}

}  // namespace

TEST_CASE("is_dissociation_set") {
  const Graph p4 = path(4);
  CHECK(is_dissociation_set(p4, VertexSet::single(0) | VertexSet::single(1) | VertexSet::single(3)));
  CHECK_FALSE(is_dissociation_set(p4, VertexSet::prefix(3)));
  CHECK(is_dissociation_set(p4, VertexSet{}));
}

TEST_CASE("small examples") {
  for (int n = 2; n <= 12; ++n) {
    check_result(complete(n), diss_bruteforce(complete(n)), 2);
    check_result(complete(n), diss_exact(complete(n)), 2);
  }
  check_result(path(7), diss_bruteforce(path(7)), 5);
  check_result(cycle(7), diss_bruteforce(cycle(7)), 4);
  const Graph wt12 = smith_graph(SmithKind::kWTilde, 12);
  check_result(wt12, diss_exact(wt12), 8);
  check_result(s_rt(1, 4), diss_exact(s_rt(1, 4)), 9);
  check_result(h_n(12), diss_tree(h_n(12)), 10);
  check_result(b_nst(11, 1, 2), diss_tree(b_nst(11, 1, 2)), 9);
  CHECK(diss_bruteforce(Graph(1)).value == 1);
  CHECK_THROWS_AS(diss_tree(cycle(5)), PreconditionError);
  CHECK_THROWS_AS(diss_bruteforce(path(kBruteForceMaxOrder + 1)), PreconditionError);
}

TEST_CASE("closed forms for paths, cycles and Smith families") {
  for (int n = 3; n <= 40; ++n) {
    CHECK(diss_exact(path(n)).value == (2 * n + 2) / 3);
    CHECK(diss_tree(path(n)).value == (2 * n + 2) / 3);
    CHECK(diss_exact(cycle(n)).value == 2 * n / 3);
  }
  for (int n = 5; n <= 40; ++n) CHECK(diss_exact(smith_graph(SmithKind::kW, n)).value == (2 * n + 2) / 3);
  for (int n = 6; n <= 40; ++n) CHECK(diss_exact(smith_graph(SmithKind::kWTilde, n)).value == (2 * n + 2) / 3);
}

TEST_CASE("engines agree with each other and the subset oracle on connected graphs n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n).graphs()) {
      const int oracle = testsupport::diss_oracle(g);
      const DissResult brute = diss_bruteforce(g);
      const DissResult exact = diss_exact(g);
      CHECK(brute.value == oracle);
      CHECK(brute == exact);
      CHECK(diss_number(g) == oracle);
      CHECK(is_dissociation_set(g, exact.witness));
      if (is_tree(g)) CHECK(diss_tree(g) == exact);
    }
  }
}

TEST_CASE("tree engine matches brute force on every free tree n <= 11") {
  for (int n = 1; n <= 11; ++n) {
    for (const Graph& t : free_trees(n).graphs()) CHECK(diss_tree(t) == diss_bruteforce(t));
  }
}

TEST_CASE("engines agree on random graphs") {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const int n = testsupport::uniform(rng, 1, 18);
    const Graph g = testsupport::random_graph(rng, n, i % 3 == 0 ? 0.7 : 0.25);
    const DissResult exact = diss_exact(g);
    CHECK(exact.value == testsupport::diss_oracle(g));
    CHECK(exact == diss_bruteforce(g));
  }
  for (int i = 0; i < 200; ++i) {
    const Graph t = testsupport::random_tree(rng, testsupport::uniform(rng, 1, 60));
    CHECK(diss_tree(t) == diss_exact(t));
  }
}

TEST_CASE("exact engine on larger graphs") {
  Rng rng(22);
  for (int i = 0; i < 10; ++i) {
    const Graph g = testsupport::random_connected_graph(rng, 40, 0.1);
    const DissResult r = diss_exact(g);
    CHECK(is_dissociation_set(g, r.witness));
    CHECK(r.witness.size() == r.value);
    CHECK(diss_number(g) == r.value);
  }
  const Graph p100 = path(100);
  CHECK(diss_exact(p100).value == 67);
}

TEST_CASE("monotonicity under vertex and edge deletion, connected graphs n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n).graphs()) {
      const int d = diss_number(g);
      for (int v = 0; v < n; ++v) {
        const int dv = diss_number(delete_vertex(g, v));
        CHECK((dv == d || dv == d - 1));
      }
      for (const auto& [u, v] : g.edges()) CHECK(diss_number(delete_edge(g, u, v)) >= d);
    }
  }
}

TEST_CASE("attaching a pendant path on three vertices adds two") {
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    const int n = testsupport::uniform(rng, 1, 12);
    const Graph g = testsupport::random_connected_graph(rng, n, 0.3);
    const int anchor = testsupport::uniform(rng, 0, n - 1);
    const int end = testsupport::uniform(rng, 0, 2);
    Graph h = disjoint_union(g, path(3));
    h = add_edge(h, anchor, n + end);
    CHECK(diss_number(h) == diss_number(g) + 2);
    CHECK(testsupport::diss_oracle(h) == testsupport::diss_oracle(g) + 2);
  }
}
