#pragma once

// Test-only oracles. These loop over raw spin / information-bit
// configurations with explicit parity tests and plain accumulation, so they
// share nothing with the library's Gray-code and log-sum-exp machinery.

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "ldpclab/channel.hpp"
#include "ldpclab/tanner_graph.hpp"

namespace naive {

inline std::vector<uint32_t> check_masks(const ldpclab::TannerGraph& g) {
  std::vector<uint32_t> masks(g.m, 0);
  for (int c = 0; c < g.m; ++c)
    for (int v : g.check_to_vars[c]) masks[c] |= uint32_t(1) << v;
  return masks;
}

inline bool in_code(const std::vector<uint32_t>& masks, uint32_t x) {
  for (uint32_t m : masks)
    if (std::popcount(x & m) & 1) return false;
  return true;
}

struct Gibbs {
  double z = 0;
  double log_z = 0;
  std::vector<double> marginal;
  std::vector<std::vector<double>> pair;  // <s_i s_j>
  double entropy = 0;
};

// x bit = 1 means sigma = -1. Clamped bits only admit sigma = +1.
inline Gibbs gibbs(const ldpclab::TannerGraph& g, const ldpclab::LlrVector& llr) {
  auto masks = check_masks(g);
  int n = g.n;
  uint32_t clamp_mask = 0;
  for (int v = 0; v < n; ++v)
    if (llr.clamped[v]) clamp_mask |= uint32_t(1) << v;
  Gibbs out;
  out.marginal.assign(n, 0.0);
  out.pair.assign(n, std::vector<double>(n, 0.0));
  double field_sum = 0;
  for (uint32_t x = 0; x < (uint32_t(1) << n); ++x) {
    if (x & clamp_mask) continue;
    if (!in_code(masks, x)) continue;
    double s = 0;
    for (int v = 0; v < n; ++v) {
      double sigma = (x >> v) & 1 ? -1.0 : 1.0;
      if (!llr.clamped[v]) s += llr.value[v] * sigma;
    }
    double w = std::exp(s);
    out.z += w;
    for (int v = 0; v < n; ++v) {
      double sv = (x >> v) & 1 ? -1.0 : 1.0;
      out.marginal[v] += w * sv;
      for (int u = 0; u < n; ++u) {
        double su = (x >> u) & 1 ? -1.0 : 1.0;
        out.pair[v][u] += w * sv * su;
      }
    }
  }
  for (int v = 0; v < n; ++v) out.marginal[v] /= out.z;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) out.pair[v][u] /= out.z;
  out.log_z = std::log(out.z);
  for (int v = 0; v < n; ++v)
    if (!llr.clamped[v]) field_sum += llr.value[v] * out.marginal[v];
  out.entropy = out.log_z - field_sum;
  return out;
}

struct Dual {
  double z = 0;
  std::vector<double> tau;
  std::vector<std::vector<double>> tau_pair;
};

inline Dual dual(const ldpclab::TannerGraph& g, const ldpclab::LlrVector& llr) {
  int n = g.n, m = g.m;
  std::vector<uint32_t> var_masks(n, 0);
  for (int v = 0; v < n; ++v)
    for (int c : g.var_to_checks[v]) var_masks[v] |= uint32_t(1) << c;
  Dual out;
  out.tau.assign(n, 0.0);
  out.tau_pair.assign(n, std::vector<double>(n, 0.0));
  for (uint32_t u = 0; u < (uint32_t(1) << m); ++u) {
    double term = 1.0;
    for (int v = 0; v < n; ++v) {
      double tau = std::popcount(u & var_masks[v]) & 1 ? -1.0 : 1.0;
      term *= 1.0 + std::exp(-2.0 * llr.value[v]) * tau;
    }
    out.z += term;
    for (int v = 0; v < n; ++v) {
      double tv = std::popcount(u & var_masks[v]) & 1 ? -1.0 : 1.0;
      out.tau[v] += term * tv;
      for (int w = 0; w < n; ++w) {
        double tw = std::popcount(u & var_masks[w]) & 1 ? -1.0 : 1.0;
        out.tau_pair[v][w] += term * tv * tw;
      }
    }
  }
  for (int v = 0; v < n; ++v) out.tau[v] /= out.z;
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) out.tau_pair[v][w] /= out.z;
  return out;
}

// Plain integer Gaussian elimination, independent of the bitset code.
inline int rank_dense(std::vector<std::vector<int>> a) {
  if (a.empty()) return 0;
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] == 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = 0; r < rows; ++r)
      if (r != rank && a[r][c] == 1)
        for (int k = 0; k < cols; ++k) a[r][k] = (a[r][k] + a[rank][k]) % 2;
    ++rank;
  }
  return rank;
}

}  // namespace naive
