#pragma once

#include <cstdint>
#include <vector>

#include "ldpclab/rng.hpp"

namespace ldpclab {

// Per-bit noise standard deviations for the BIAWGN channel. A value of 0 is
// the "perfect" sentinel: that bit is received noiselessly and is handled
// downstream by conditioning the spin to +1, never by an infinite LLR.
struct NoiseSpec {
  std::vector<double> eps;

  static NoiseSpec uniform(int n, double eps_value);

  int size() const { return static_cast<int>(eps.size()); }
  bool perfect(int i) const { return eps[i] == 0.0; }
  // Global noise level: max over bits.
  double max_eps() const;
  void validate() const;
};

// One channel realization of half-log-likelihood ratios, natural-log units.
// Under all-zero transmission l_i ~ N(eps_i^-2, eps_i^-2). Perfect bits carry
// clamped=1 and value 0.
struct LlrVector {
  std::vector<double> value;
  std::vector<uint8_t> clamped;
  uint64_t stream = 0;
  uint64_t counter0 = 0;  // rng counter before the first draw

  int size() const { return static_cast<int>(value.size()); }
  static LlrVector constant(int n, double l);
};

LlrVector sample_llr(const NoiseSpec& noise, CounterRng& rng);

// Density c(l) of the half-LLR at noise eps > 0.
double llr_density(double l, double eps);

// E[|sinh 2l|^{-2s}] over c(l), 0 < s < 1/2 (the moment may diverge outside
// that range and the call is rejected). The integrand has an integrable
// singularity at l = 0 which the quadrature removes by substitution.
double sinh_moment_quadrature(double eps, double s, double tol = 1e-10);

struct McEstimate {
  double mean = 0;
  double std_error = 0;
  uint64_t samples = 0;
};

McEstimate sinh_moment_mc(double eps, double s, uint64_t samples, CounterRng& rng);

enum class SinhMethod { quadrature, monte_carlo };

double sinh_moment(double eps, double s, SinhMethod method,
                   uint64_t mc_samples = 1u << 20, uint64_t seed = 1);

}  // namespace ldpclab
