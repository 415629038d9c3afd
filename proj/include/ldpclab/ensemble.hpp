#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ldpclab/rng.hpp"
#include "ldpclab/tanner_graph.hpp"

namespace ldpclab {

// Node-perspective degree distributions for an irregular ensemble. The
// variable side may instead be a Poisson profile with the given mean, in
// which case the pmf is materialized truncated where the CDF passes
// 1 - 1e-12 and renormalized.
struct CodeEnsembleSpec {
  std::vector<std::pair<int, double>> var_degree;
  std::vector<std::pair<int, double>> chk_degree;
  bool poisson_var = false;
  double poisson_mean = 0.0;

  void validate() const;  // probabilities sum to 1 within 1e-12

  std::vector<std::pair<int, double>> realized_var_degree() const;
  std::vector<std::pair<int, double>> var_edge_perspective() const;
  std::vector<std::pair<int, double>> chk_edge_perspective() const;
  double var_mean_degree() const;
  double chk_mean_degree() const;

  static CodeEnsembleSpec regular(int dv, int dc);
  // Poisson(lambda) variable profile with fixed check degree (default 4).
  static CodeEnsembleSpec poisson(double lambda, int check_degree = 4);
  // "regular:3,6" | "poisson:2" | "poisson:2,4" | "file:<path>"
  static CodeEnsembleSpec parse(const std::string& text);
  // File format: lines "var <degree> <fraction>" / "chk <degree> <fraction>",
  // or "var poisson <lambda>"; '#' comments allowed.
  static CodeEnsembleSpec load_file(const std::string& path);

  std::string describe() const;
};

// Configuration-model sample with n variable nodes. Degrees are drawn from
// the node-perspective distributions, stubs are matched uniformly at random,
// and repeated edges between the same pair collapse in pairs (kept iff the
// multiplicity is odd). Throws std::invalid_argument when no integer edge
// assignment exists.
TannerGraph sample_ensemble(const CodeEnsembleSpec& spec, int n, CounterRng& rng);

}  // namespace ldpclab
