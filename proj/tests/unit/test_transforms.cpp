#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "dissrho/canonical.hpp"
#include "dissrho/dissociation.hpp"
#include "dissrho/enumeration.hpp"
#include "dissrho/families.hpp"
#include "dissrho/graph.hpp"
#include "dissrho/spectral.hpp"
#include "dissrho/transforms.hpp"
#include "test_support.hpp"

using namespace dissrho;
using testsupport::Rng;

namespace {

double rho(const Graph& g) { return spectral_radius(g, kSmithTol).rho; }

bool is_w_tilde(const Graph& g) {
  return g.order() >= 6 && is_isomorphic(g, smith_graph(SmithKind::kWTilde, g.order()));
}

}  // namespace

TEST_CASE("subdivide") {
  CHECK(is_isomorphic(subdivide(cycle(5), 0, 1, 1), cycle(6)));
  CHECK(is_isomorphic(subdivide(cycle(3), 1, 2, 2), cycle(5)));
  const Graph s = subdivide(path(2), 0, 1, 3);
  CHECK(s == Graph::from_edges(5, {{0, 2}, {2, 3}, {3, 4}, {1, 4}}));
  CHECK(subdivide(path(2), 1, 0, 3) == Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {0, 4}}));
  CHECK_THROWS_AS(subdivide(path(3), 0, 2, 1), PreconditionError);
  CHECK_THROWS_AS(subdivide(path(3), 0, 1, 0), PreconditionError);
  CHECK_THROWS_AS(subdivide(path(Graph::kMaxOrder), 0, 1, 1), PreconditionError);
}

TEST_CASE("subdividing then contracting the fresh vertex restores the graph") {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testsupport::random_connected_graph(rng, testsupport::uniform(rng, 2, 12), 0.3);
    const auto edges = g.edges();
    const auto [u, v] = edges[testsupport::uniform(rng, 0, static_cast<int>(edges.size()) - 1)];
    const Graph s = subdivide(g, u, v, 1);
    CHECK(s.order() == g.order() + 1);
    const Graph back = add_edge(delete_vertex(s, g.order()), u, v);
    CHECK(back == g);
    CHECK(is_isomorphic(back, g));
  }
}

TEST_CASE("graft_paths") {
  CHECK(is_isomorphic(graft_paths(Graph(1), 0, 2, 1), path(4)));
  CHECK(graft_paths(Graph(1), 0, 2, 1) == Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 3}}));
  CHECK(graft_paths(path(3), 1, 0, 0) == path(3));
  CHECK(is_isomorphic(graft_paths(Graph(1), 0, 3, 3), path(7)));
  CHECK(is_isomorphic(graft_paths(path(3), 1, 1, 1), star(5)));
  CHECK_THROWS_AS(graft_paths(path(3), 0, 1, 2), PreconditionError);
  CHECK_THROWS_AS(graft_paths(path(3), 0, 1, -1), PreconditionError);
  CHECK_THROWS_AS(graft_paths(path(3), 3, 1, 1), PreconditionError);
}

TEST_CASE("balancing two grafted paths lowers the spectral radius") {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    // On K1 both sides are the same path.
    const int n = testsupport::uniform(rng, 2, 8);
    const Graph g = testsupport::random_connected_graph(rng, n, 0.35);
    const int v = testsupport::uniform(rng, 0, n - 1);
    const int m = testsupport::uniform(rng, 1, 5);
    const int k = testsupport::uniform(rng, m, 7);
    CHECK(rho(graft_paths(g, v, k, m)) > rho(graft_paths(g, v, k + 1, m - 1)));
  }
}

TEST_CASE("rewire") {
  const Graph g = s_rt(0, 2);
  CHECK(rewire(g, 1, 0, VertexSet{}) == g);
  const Graph moved = rewire(path(4), 0, 2, VertexSet::single(3));
  CHECK(moved == Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 3}}));
  CHECK_THROWS_AS(rewire(path(4), 1, 1, VertexSet{}), PreconditionError);
  CHECK_THROWS_AS(rewire(path(4), 1, 2, VertexSet::single(1)), PreconditionError);
  CHECK_THROWS_AS(rewire(path(4), 0, 2, VertexSet::single(1)), PreconditionError);
}

TEST_CASE("moving edges toward the larger Perron entry raises the spectral radius") {
  Rng rng(43);
  int checked = 0;
  while (checked < 200) {
    const int n = testsupport::uniform(rng, 3, 10);
    const Graph g = testsupport::random_connected_graph(rng, n, 0.3);
    const SpectralResult r = spectral_radius(g, kSmithTol);
    const int u = testsupport::uniform(rng, 0, n - 1);
    const int v = testsupport::uniform(rng, 0, n - 1);
    if (u == v || perron_component(r, u) < perron_component(r, v)) continue;
    VertexSet candidates = g.neighbors(v) - g.neighbors(u);
    candidates.erase(u);
    VertexSet moved;
    for (int w : candidates) {
      if (testsupport::uniform(rng, 0, 1) == 1) moved.insert(w);
    }
    if (moved.empty()) continue;
    // The result can leave v isolated, so use the dense solver.
    CHECK(testsupport::rho_oracle(rewire(g, u, v, moved)) > r.rho);
    ++checked;
  }
}

TEST_CASE("internal paths") {
  for (int n = 2; n <= 10; ++n) CHECK(internal_paths(path(n)).empty());
  const auto h = internal_paths(h_n(12));
  REQUIRE(h.size() == 1);
  CHECK(h[0].vertices == std::vector<int>{0, 2, 3, 1});
  for (int n = 7; n <= 14; ++n) {
    const auto p = internal_paths(smith_graph(SmithKind::kWTilde, n));
    REQUIRE(p.size() == 1);
    std::vector<int> expected(n - 4);
    std::iota(expected.begin(), expected.end(), 1);
    CHECK(p[0].vertices == expected);
  }
  const auto w6 = internal_paths(smith_graph(SmithKind::kWTilde, 6));
  REQUIRE(w6.size() == 1);
  CHECK(w6[0].vertices == std::vector<int>{1, 2});

  // The cycle closes on its single branch vertex.
  const Graph loop = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {4, 5}, {5, 3}});
  const auto closed = internal_paths(loop);
  REQUIRE(closed.size() == 1);
  CHECK(closed[0].vertices == std::vector<int>{0, 1, 4, 5, 3, 0});

  // K4: six single-edge paths.
  CHECK(internal_paths(join(Graph(1), cycle(3))).size() == 6);
}

TEST_CASE("subdividing an internal path edge lowers the spectral radius, connected graphs n <= 8") {
  long checked = 0;
  for (int n = 4; n <= 8; ++n) {
    for (const Graph& g : connected_graphs(n).graphs()) {
      const auto paths = internal_paths(g);
      if (paths.empty() || is_w_tilde(g)) continue;
      const double base = rho(g);
      for (const InternalPath& p : paths) {
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
          CHECK(rho(subdivide(g, p.vertices[i], p.vertices[i + 1], 1)) < base);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("subdivision changes the dissociation number of a tree by bounded amounts") {
  for (int n = 2; n <= 9; ++n) {
    for (const Graph& t : free_trees(n).graphs()) {
      const int d = diss_tree(t).value;
      for (const auto& [u, v] : t.edges()) {
        const int d1 = diss_tree(subdivide(t, u, v, 1)).value - d;
        const int d2 = diss_tree(subdivide(t, u, v, 2)).value - d;
        const int d3 = diss_tree(subdivide(t, u, v, 3)).value - d;
        CHECK((d1 == 0 || d1 == 1));
        CHECK((d2 == 1 || d2 == 2));
        CHECK(d3 == 2);
      }
    }
  }
}

TEST_CASE("B(n,s,t) reduction steps") {
  CHECK(bst_reduce({12, 0, 3}) == BstParams{12, 1, 1});
  CHECK(bst_reduce({12, 1, 2}) == BstParams{12, 0, 1});
  CHECK(bst_reduce({12, 3, 1}) == BstParams{12, 1, 2});
  CHECK_THROWS_AS(bst_reduce({12, 1, 1}), PreconditionError);
  CHECK_THROWS_AS(bst_reduce({12, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(bst_reduce({5, 0, 3}), PreconditionError);
}

TEST_CASE("reduction chains terminate with strictly decreasing spectral radius") {
  int chains = 0;
  for (int n = 7; n <= 24; ++n) {
    for (int s = 0; s < n; ++s) {
      for (int t = 0; s + 2 * t <= n - 1; ++t) {
        if (s + 2 * t < 6) continue;
        BstParams cur{n, s, t};
        double prev = rho(b_nst(n, s, t));
        int steps = 0;
        while (cur.s + 2 * cur.t >= 6) {
          const BstParams next = bst_reduce(cur);
          const double r = rho(b_nst(next.n, next.s, next.t));
          CHECK(r < prev);
          prev = r;
          cur = next;
          REQUIRE(++steps < 100);
        }
        ++chains;
      }
    }
  }
  CHECK(chains > 100);
}
