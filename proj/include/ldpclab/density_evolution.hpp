#pragma once

#include <cstdint>
#include <optional>

#include "ldpclab/ensemble.hpp"
#include "ldpclab/inference.hpp"

namespace ldpclab {

// Sample representation of the depth-d extrinsic half-LLR at a node drawn
// from the node-perspective degree distribution. Generation 0 is the
// all-zero message start: channel outputs are the initial conditions.
struct DePopulation {
  std::vector<double> delta;
  int depth = 0;
};

struct DeResult {
  DePopulation population;
  double mean_soft = 0.0;  // E tanh(l + Delta^{(d)})
  double std_error = 0.0;
};

// Population dynamics for the BIAWGN density evolution recursion at graph
// depth d (even; d/2 check layers). Rejects ensembles with no variable edges.
DeResult density_evolution(const CodeEnsembleSpec& spec, double eps, int depth,
                           size_t population, CounterRng& rng,
                           double clamp = 30.0);

struct ValueWithError {
  double value = 0.0;
  double std_error = 0.0;
};

// 0.5 * (E tanh(l + Delta^{(d)}) - 1) with propagated error.
ValueWithError de_gexit(const CodeEnsembleSpec& spec, double eps, int depth,
                        size_t population, CounterRng& rng);

// Compares the sampled-graph estimate E<sigma_o>_{N_d(o)} on tree-conditioned
// neighborhoods against the population-dynamics mean at the same depth.
struct TreeEquivalence {
  double graph_mean = 0.0;
  double graph_se = 0.0;
  double de_mean = 0.0;
  double de_se = 0.0;
  double difference = 0.0;
  double combined_se = 0.0;
  double rejection_rate = 0.0;  // non-tree neighborhoods, O(gamma^d/n) proxy
  uint64_t tree_trials = 0;
  uint64_t capacity_skips = 0;
  bool aborted = false;  // tree instances rarer than 1 in 100
};

TreeEquivalence tree_equivalence_check(const CodeEnsembleSpec& spec, int n,
                                       int depth, double eps, uint64_t trials,
                                       size_t population, uint64_t seed,
                                       std::optional<int> root = std::nullopt,
                                       const EnumBudget& budget = {});

}  // namespace ldpclab
