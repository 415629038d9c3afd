#include <doctest.h>

#include <algorithm>

#include "ldpclab/builtin_codes.hpp"
#include "ldpclab/ensemble.hpp"
#include "ldpclab/rng.hpp"
#include "ldpclab/tanner_graph.hpp"

using namespace ldpclab;

namespace {

TannerGraph ring_code(int n) {
  // Plain ring: n variables, n degree-2 checks joining neighbors.
  std::vector<std::vector<int>> checks(n);
  for (int v = 0; v < n; ++v) checks[v] = {v, (v + 1) % n};
  return graph_from_checks(n, std::move(checks));
}

}  // namespace

TEST_CASE("single check graph shape") {
  auto g = build_graph({{1, 1, 1}});
  CHECK(g.n == 3);
  CHECK(g.m == 1);
  CHECK(g.dr_max == 3);
  CHECK(g.dl_max == 1);
}

TEST_CASE("repetition chain degrees") {
  auto g = build_graph({{1, 1, 0}, {0, 1, 1}});
  CHECK(g.dl_max == 2);  // middle bit
  CHECK(g.dr_max == 2);
}

TEST_CASE("adjacency lists are mutually consistent") {
  CounterRng rng(5, 0);
  auto g = sample_ensemble(CodeEnsembleSpec::regular(3, 6), 30, rng);
  for (int c = 0; c < g.m; ++c)
    for (int v : g.check_to_vars[c]) {
      const auto& cs = g.var_to_checks[v];
      CHECK(std::find(cs.begin(), cs.end(), c) != cs.end());
    }
  for (int v = 0; v < g.n; ++v)
    for (int c : g.var_to_checks[v]) {
      const auto& vs = g.check_to_vars[c];
      CHECK(std::find(vs.begin(), vs.end(), v) != vs.end());
    }
}

TEST_CASE("repeated edges are rejected") {
  CHECK_THROWS_AS(build_graph({{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_checks(3, {{0, 0, 1}}), std::invalid_argument);
}

TEST_CASE("distance basics") {
  auto g = build_graph({{1, 1, 1}});
  CHECK(graph_distance(g, 0, 2) == 2);  // shared check

  auto two = build_graph({{1, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK_FALSE(graph_distance(two, 0, 3).has_value());  // disjoint components
}

TEST_CASE("ring of 10: antipodal pair at distance 10") {
  auto g = ring_code(10);
  CHECK(graph_distance(g, 0, 5) == 10);
  CHECK(graph_distance(g, 0, 1) == 2);
}

TEST_CASE("graph distance is a metric on sampled triples") {
  CounterRng rng(17, 0);
  auto g = sample_ensemble(CodeEnsembleSpec::regular(3, 6), 24, rng);
  for (int trial = 0; trial < 200; ++trial) {
    int a = static_cast<int>(rng.below(g.n));
    int b = static_cast<int>(rng.below(g.n));
    int c = static_cast<int>(rng.below(g.n));
    auto dab = graph_distance(g, a, b);
    auto dba = graph_distance(g, b, a);
    REQUIRE(dab.has_value() == dba.has_value());
    if (dab) CHECK(*dab == *dba);
    auto dac = graph_distance(g, a, c);
    auto dcb = graph_distance(g, c, b);
    if (dab && dac && dcb) CHECK(*dab <= *dac + *dcb);
  }
}

TEST_CASE("neighborhood covering the whole connected graph") {
  auto g = build_graph({{1, 1, 1}});
  auto nb = neighborhood(g, 0, 4);
  CHECK(nb.variables.size() == 3);
  CHECK(nb.checks.size() == 1);
  CHECK(nb.boundary.empty());
  CHECK(nb.is_tree);
}

TEST_CASE("(3,6) depth-2 tree neighborhood has 16 variables") {
  CounterRng rng(23, 4);
  for (int attempt = 0; attempt < 50; ++attempt) {
    auto g = sample_ensemble(CodeEnsembleSpec::regular(3, 6), 120, rng);
    int o = static_cast<int>(rng.below(g.n));
    if (static_cast<int>(g.var_to_checks[o].size()) != 3) continue;
    auto nb = neighborhood(g, o, 2);
    if (!nb.is_tree) continue;
    CHECK(nb.variables.size() == 16);  // 1 + 3*5
    CHECK(nb.checks.size() == 3);
    CHECK(nb.boundary.size() == 15);
    return;
  }
  FAIL("no tree-like depth-2 neighborhood found in 50 attempts");
}

TEST_CASE("ring neighborhood stops being a tree once the arms meet") {
  auto g = ring_code(10);
  auto nb_small = neighborhood(g, 0, 4);
  CHECK(nb_small.is_tree);
  auto nb_half = neighborhood(g, 0, 10);  // arms meet at the antipode
  CHECK_FALSE(nb_half.is_tree);
  CHECK(nb_half.variables.size() == 10);
}

TEST_CASE("every contained check has all its variables contained") {
  CounterRng rng(29, 0);
  auto g = sample_ensemble(CodeEnsembleSpec::regular(3, 6), 60, rng);
  auto nb = neighborhood(g, 3, 4);
  std::vector<uint8_t> in_vars(g.n, 0);
  for (int v : nb.variables) in_vars[v] = 1;
  for (int c : nb.checks)
    for (int v : g.check_to_vars[c]) CHECK(in_vars[v] == 1);
}

TEST_CASE("builtin ring30 is a degree-(2,4) cycle code") {
  auto g = builtin_code("ring30");
  CHECK(g.n == 30);
  CHECK(g.m == 15);
  for (const auto& cs : g.var_to_checks) CHECK(cs.size() == 2);
  for (const auto& vs : g.check_to_vars) CHECK(vs.size() == 4);
  // Distances span several even values, enough for a decay fit.
  auto d = variable_distances(g, 0);
  CHECK(*std::max_element(d.begin(), d.end()) >= 6);
}

TEST_CASE("builtin fixed instances are deterministic") {
  auto a = builtin_code("reg36_30");
  auto b = builtin_code("reg36_30");
  CHECK(a.check_to_vars == b.check_to_vars);
  auto p = builtin_code("poisson2_24");
  CHECK(p.n == 24);
  bool deg0 = false, deg1 = false;
  for (const auto& cs : p.var_to_checks) {
    if (cs.empty()) deg0 = true;
    if (cs.size() == 1) deg1 = true;
  }
  CHECK(deg0);
  CHECK(deg1);
}
