#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ldpclab {

// Welford accumulator. merge() is exact for any split of the sample, which is
// what lets per-block partial statistics combine in a fixed order.
struct RunningStat {
  size_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x);
  void merge(const RunningStat& other);
  double variance() const;  // sample variance (n-1 in the denominator)
  double std_error() const;
};

// Weighted least squares line y = slope*x + intercept, weights = 1/variance.
struct WlsFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
  double intercept_se = 0.0;
  int points = 0;
  bool ok = false;
};

WlsFit wls_line(const std::vector<double>& x, const std::vector<double>& y,
                const std::vector<double>& weight);

// FNV-1a over a string; stable across platforms, used for config hashes.
uint64_t fnv1a64(const std::string& s);

}  // namespace ldpclab
