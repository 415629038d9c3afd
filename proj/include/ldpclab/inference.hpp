#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ldpclab/channel.hpp"
#include "ldpclab/tanner_graph.hpp"

namespace ldpclab {

// Enumeration would exceed the state budget; callers may switch routes
// (primal <-> dual) or skip the instance.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// |Z_G| fell below the representable floor, so dual brackets are meaningless.
struct DegenerateRatioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnumBudget {
  int max_log2_states = 26;
};

// Exact posterior quantities for one channel realization. Everything is
// conditional on the clamped (perfectly received) bits, which are removed
// from the state space before enumeration rather than given huge LLRs.
struct GibbsResult {
  double log_z = 0.0;              // natural log of the codeword sum
  std::vector<double> marginal;    // <sigma_i>; exactly +1 for clamped bits
  std::vector<double> pair_mean;   // <sigma_i sigma_j>, aligned with `pairs`
  double entropy = 0.0;            // nats
  int dimension = 0;               // log2 of the number of codewords
};

GibbsResult gibbs_exact(const TannerGraph& g, const LlrVector& llr,
                        const std::vector<std::pair<int, int>>& pairs = {},
                        const EnumBudget& budget = {});

// Signed dual sum over the u-configurations. The bracket is linear but not a
// probability: weights may be negative, so sums are compensated and a
// magnitude-sorted second pass kicks in when cancellation is severe.
struct DualResult {
  double z = 0.0;                      // Z_G
  double abs_sum = 0.0;                // sum of |term|, cancellation gauge
  std::vector<double> tau_mean;        // <tau_v>_G for requested variables
  std::vector<double> tau_pair_mean;   // <tau_i tau_j>_G for requested pairs
  bool resummed = false;

  double condition() const;
};

DualResult dual_exact(const TannerGraph& g, const LlrVector& llr,
                      const std::vector<int>& vars = {},
                      const std::vector<std::pair<int, int>>& pairs = {},
                      const EnumBudget& budget = {});

// Both sides of the extended MacWilliams identity. Z_G here sums over all
// 2^m information-bit configurations, so the matching normalizer is m*ln2;
// for independent checks this is the same as rank*ln2 (dual size 2^rank).
struct DualityCheck {
  double log_zp = 0.0;
  double log_zg = 0.0;   // log of the u-configuration sum
  double sum_l = 0.0;
  int rank = 0;
  int m = 0;
  double residual = 0.0;  // relative
};

DualityCheck check_duality(const TannerGraph& g, const LlrVector& llr,
                           const EnumBudget& budget = {});

// Residuals of the first- and second-derivative duality identities. A
// residual is absent when the corresponding l sits closer to the (removable)
// pole at 0 than pole_floor.
struct DerivativeCheck {
  std::optional<double> first_i;
  std::optional<double> first_j;
  std::optional<double> second;
  bool near_pole = false;
};

DerivativeCheck check_derivative_identities(const TannerGraph& g,
                                            const LlrVector& llr, int i, int j,
                                            double pole_floor = 1e-3,
                                            const EnumBudget& budget = {});

enum class BoundaryCondition { free_boundary, plus_one };

// Exact magnetization of o in the Gibbs measure restricted to N_d(o).
// plus_one pins the boundary circle to +1; free uses channel factors only.
double neighborhood_gibbs(const TannerGraph& g, int o, int d,
                          const LlrVector& llr, BoundaryCondition bc,
                          const EnumBudget& budget = {});

// Partition functions of the subgraph left after deleting the checks in
// xhat and every variable touching them. Conventions: a sum over an empty
// index set has a single empty term, and the empty product is 1, so both
// partition functions equal 1 when nothing is left.
struct RestrictedPartitions {
  double z_g = 0.0;     // Z_G(xhat^c), u-sum over the kept checks
  double log_z_p = 0.0; // log Z_P(xhat^c)
  int rank = 0;         // rank of the restricted parity matrix
  int kept_checks = 0;
  std::vector<int> kept_vars;
};

RestrictedPartitions restricted_partitions(const TannerGraph& g,
                                           const std::vector<int>& xhat,
                                           const LlrVector& llr,
                                           const EnumBudget& budget = {});

}  // namespace ldpclab
