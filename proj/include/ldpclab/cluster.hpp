#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ldpclab/inference.hpp"
#include "ldpclab/tanner_graph.hpp"

namespace ldpclab {

// A cluster is a check set of the form boundary(X) for some connected
// variable set X ("connected" = every pair of variables in X joined by a path
// whose variable nodes stay in X), containing both boundary(i) and
// boundary(j). `witness` is one generating X; distinct X may induce the same
// check set, and the expansion sums each check set once.
struct Cluster {
  std::vector<int> checks;   // sorted
  std::vector<int> witness;  // sorted
};

struct CompatibleSet {
  std::vector<int> vars;  // sorted, possibly empty under the relaxed policy
};

struct ClusterOptions {
  // Nothing in the definition excludes i or j from Gamma; a toggle is kept
  // for investigating the identity.
  bool allow_ij_in_gamma = true;
  // Literal reading: Gamma must intersect both boundary(i) and boundary(j),
  // which rules out the empty set. When i and j share a check the trivial
  // walk exists and admitting the empty Gamma is the alternative convention.
  bool empty_gamma_when_adjacent = false;
  int max_cluster_checks = 16;  // clusters larger than this are dropped
  int max_graph_vars = 20;      // subset scan feasibility bound
  int max_pool = 22;            // Gamma candidate pool bound
};

struct ClusterList {
  std::vector<Cluster> clusters;
  bool truncated = false;  // some qualifying cluster exceeded the size cap
};

ClusterList enumerate_clusters(const TannerGraph& g, int i, int j,
                               const ClusterOptions& opts = {});

std::vector<CompatibleSet> enumerate_compatible(const TannerGraph& g,
                                                const std::vector<int>& xhat,
                                                int i, int j,
                                                const ClusterOptions& opts = {});

// Re-validation predicates kept separate from the enumerators so the reading
// of the definitions can be swapped without touching them.
bool validate_cluster(const TannerGraph& g, const std::vector<int>& xhat,
                      int i, int j);
bool validate_compatible(const TannerGraph& g, const std::vector<int>& xhat,
                         const std::vector<int>& gamma, int i, int j,
                         const ClusterOptions& opts = {});

// Two-replica kernel K_{i,j}(xhat): signed sum over both replica
// configurations of the checks in xhat and over all compatible Gamma of
// (tau_i^1 - tau_i^2)(tau_j^1 - tau_j^2) prod_{k in Gamma} E_k with
// E_k = (tau_k^1 + tau_k^2) e^{-2 l_k} + tau_k^1 tau_k^2 e^{-4 l_k}.
double cluster_kernel(const TannerGraph& g, const std::vector<int>& xhat,
                      const LlrVector& llr, int i, int j,
                      const ClusterOptions& opts = {});

// Same sum broken down per Gamma (aligned with enumerate_compatible).
std::vector<double> cluster_kernel_per_gamma(const TannerGraph& g,
                                             const std::vector<int>& xhat,
                                             const LlrVector& llr, int i, int j,
                                             const ClusterOptions& opts = {});

struct ClusterTerm {
  Cluster cluster;
  double kernel = 0.0;
  double zg_ratio = 0.0;        // Z_G(xhat^c) / Z_G
  double contribution = 0.0;    // 0.5 * kernel * ratio^2
  size_t compatible_count = 0;
};

struct IdentityReport {
  int i = 0, j = 0;
  double lhs = 0.0;       // <tau_i tau_j>_G - <tau_i>_G <tau_j>_G
  double rhs = 0.0;       // sum of cluster contributions
  double residual = 0.0;  // |lhs - rhs|
  bool truncated = false;
  std::vector<ClusterTerm> terms;
};

IdentityReport identity_check(const TannerGraph& g, const LlrVector& llr, int i,
                              int j, const ClusterOptions& opts = {},
                              const EnumBudget& budget = {});

// Full diagnostic dump: per-cluster terms plus the per-Gamma kernel
// decomposition, for offline analysis of which convention fails.
nlohmann::json identity_dump_json(const TannerGraph& g, const LlrVector& llr,
                                  const IdentityReport& report,
                                  const ClusterOptions& opts = {});

struct T1T2Estimate {
  double t1_sq_mean = 0.0;
  double t1_sq_se = 0.0;
  double t2_sq_mean = 0.0;
  double t2_sq_se = 0.0;
  uint64_t samples = 0;
};

// Monte Carlo estimates of T1(xhat)^2 = E |K_{i,j}(xhat)|^{4s} and
// T2(xhat)^2 = E (Z_G(xhat^c)/Z_G)^{8s} over the noise.
T1T2Estimate t1_t2_diagnostics(const TannerGraph& g,
                               const std::vector<int>& xhat, int i, int j,
                               double eps, double s, uint64_t samples,
                               uint64_t seed,
                               const ClusterOptions& opts = {},
                               const EnumBudget& budget = {});

}  // namespace ldpclab
