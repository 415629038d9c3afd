#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ldpclab/channel.hpp"
#include "ldpclab/density_evolution.hpp"
#include "ldpclab/ensemble.hpp"
#include "ldpclab/inference.hpp"
#include "ldpclab/stats.hpp"
#include "ldpclab/tanner_graph.hpp"

namespace ldpclab {

inline constexpr const char* kVersion = "0.1.0";

// Everything needed to regenerate a report byte-for-byte at a fixed worker
// count. wall_seconds is informational and excluded from the config hash.
struct RunManifest {
  uint64_t master_seed = 0;
  int workers = 1;
  std::string version = kVersion;
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;  // sorted by key
  std::string config_hash;
  double wall_seconds = 0.0;
};

RunManifest make_manifest(const std::string& command, uint64_t seed,
                          int workers,
                          std::vector<std::pair<std::string, std::string>> params);

// ---------------------------------------------------------------------------
// Correlation decay

struct PairSelection {
  int max_pairs_per_distance = 5;
  int min_pairs_per_distance = 3;  // distances with fewer pairs are excluded
  int max_distance = 1 << 30;
};

struct PairRecord {
  int i = 0, j = 0, dist = 0;
  double mean = 0.0;  // E |<s_i s_j> - <s_i><s_j>|
  double se = 0.0;
  uint64_t samples = 0;
};

struct DistanceRow {
  int dist = 0;
  int n_pairs = 0;
  double mean = 0.0;
  double se = 0.0;
  bool above_floor = false;
  bool in_fit = false;
};

struct DecayReport {
  std::string code_id;
  double eps2 = 0.0;
  uint64_t samples = 0;
  double noise_floor = 1e-14;
  std::vector<PairRecord> pairs;
  std::vector<DistanceRow> distances;
  WlsFit fit;                 // ln(mean) vs distance, weighted least squares
  bool fit_fallback = false;  // relative-error filter left < 2 points
  bool fully_decayed = false; // every distance mean sits under the floor
  RunManifest manifest;
};

// For each noise draw one exact-inference call evaluates every selected pair
// covariance; the absolute value is taken per draw, then averaged.
DecayReport correlation_decay(const TannerGraph& g, const NoiseSpec& noise,
                              const PairSelection& sel, uint64_t samples,
                              uint64_t seed, int workers,
                              const std::string& code_id,
                              const EnumBudget& budget = {});

// ---------------------------------------------------------------------------
// GEXIT measurements

struct MapGexitResult {
  ValueWithError estimate;  // 0.5 (E<sigma_o> - 1)
  uint64_t graphs_used = 0;
  uint64_t noise_per_graph = 0;
  uint64_t capacity_skips = 0;
};

// Double Monte Carlo (graphs x noise) of the exact posterior magnetization,
// averaged over the uniformly random bit by taking the mean over all bits.
MapGexitResult map_gexit_mc(const CodeEnsembleSpec& spec, int n, double eps,
                            uint64_t graphs, uint64_t noise_per_graph,
                            uint64_t seed, int workers,
                            const EnumBudget& budget = {});

struct FdCheck {
  ValueWithError fd;      // central finite difference of E[h_n] in eps^-2
  ValueWithError gexit;   // 0.5 (E<sigma_o> - 1) at the center point
  double residual = 0.0;  // |mean paired difference|
  double combined_se = 0.0;
};

// Common random numbers: the same standard normals feed both eps points and
// the center, so the paired difference carries the error.
FdCheck gexit_fd_check(const TannerGraph& g, double eps, double delta_frac,
                       uint64_t samples, uint64_t seed, int workers,
                       const EnumBudget& budget = {});

// ---------------------------------------------------------------------------
// Boundary-condition gaps

struct BoundaryGaps {
  int depth = 0;
  ValueWithError lemma1;  // |E<s_o>_P - E<s_o>^+_{N_d}|
  ValueWithError lemma2;  // |E<s_o>_{N_d} - E<s_o>^+_{N_d}|
  bool boundary_empty = false;
  bool capacity = false;
};

std::vector<BoundaryGaps> boundary_checks(const TannerGraph& g, int o,
                                          const std::vector<int>& depths,
                                          double eps, uint64_t samples,
                                          uint64_t seed, int workers,
                                          const EnumBudget& budget = {});

}  // namespace ldpclab
