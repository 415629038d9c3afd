#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "ldpclab/gf2.hpp"

namespace ldpclab {

// Bipartite factor graph of a binary parity check code. Immutable once built;
// safe to share across threads.
struct TannerGraph {
  int n = 0;  // variable nodes
  int m = 0;  // check nodes
  std::vector<std::vector<int>> check_to_vars;  // sorted, no repeats
  std::vector<std::vector<int>> var_to_checks;  // sorted, no repeats
  int dl_max = 0;  // max variable degree
  int dr_max = 0;  // max check degree

  double k() const { return std::sqrt(double(dl_max) * double(dr_max)); }
  Gf2Matrix parity_matrix() const;
};

// From a dense 0/1 matrix (m rows = checks, n cols = variables). Entries
// outside {0,1} are rejected: a 2 would be a repeated edge.
TannerGraph build_graph(const std::vector<std::vector<int>>& h);

// From adjacency lists. Repeated variable indices within a check are rejected.
TannerGraph graph_from_checks(int n, std::vector<std::vector<int>> checks);

// Shortest path length in edges over the bipartite graph; variable-variable
// distances are even. nullopt when i and j live in different components.
std::optional<int> graph_distance(const TannerGraph& g, int i, int j);

// Distance in edges from `origin` to every variable node; -1 = unreachable.
std::vector<int> variable_distances(const TannerGraph& g, int origin);

// Depth-d neighborhood of a variable node, d even. Contains every variable at
// distance <= d and every check at (odd) distance <= d-1; such checks have all
// their variables inside, so the restricted Gibbs measure is well defined.
struct Neighborhood {
  int root = 0;
  int depth = 0;
  std::vector<int> variables;  // distance <= d, sorted
  std::vector<int> checks;     // distance <= d-1, sorted
  std::vector<int> boundary;   // variables at distance exactly d
  bool is_tree = false;
};

Neighborhood neighborhood(const TannerGraph& g, int o, int d);

// The induced subgraph on a neighborhood, variables and checks reindexed
// contiguously in the order of Neighborhood::variables / checks.
struct Subgraph {
  TannerGraph graph;
  std::vector<int> var_of;    // subgraph variable -> original variable
  std::vector<int> check_of;  // subgraph check -> original check
  std::vector<int> sub_var_of;  // original variable -> subgraph index or -1
};

Subgraph induced_subgraph(const TannerGraph& g,
                          const std::vector<int>& variables,
                          const std::vector<int>& checks);

}  // namespace ldpclab
