#include "ldpclab/stats.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace ldpclab {

void RunningStat::add(double x) {
  ++n;
  double d = x - mean;
  mean += d / static_cast<double>(n);
  m2 += d * (x - mean);
}

void RunningStat::merge(const RunningStat& other) {
  if (other.n == 0) return;
  if (n == 0) {
    *this = other;
    return;
  }
  double total = static_cast<double>(n + other.n);
  double d = other.mean - mean;
  m2 += other.m2 + d * d * (static_cast<double>(n) * other.n) / total;
  mean += d * other.n / total;
  n += other.n;
}

double RunningStat::variance() const {
  if (n < 2) return 0.0;
  return m2 / static_cast<double>(n - 1);
}

double RunningStat::std_error() const {
  if (n < 2) return 0.0;
  return std::sqrt(variance() / static_cast<double>(n));
}

WlsFit wls_line(const std::vector<double>& x, const std::vector<double>& y,
                const std::vector<double>& weight) {
  WlsFit fit;
  fit.points = static_cast<int>(x.size());
  if (x.size() != y.size() || x.size() != weight.size() || x.size() < 2)
    return fit;
  double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
  for (size_t k = 0; k < x.size(); ++k) {
    double w = weight[k];
    sw += w;
    swx += w * x[k];
    swy += w * y[k];
    swxx += w * x[k] * x[k];
    swxy += w * x[k] * y[k];
  }
  double det = sw * swxx - swx * swx;
  if (det <= 0) return fit;
  fit.slope = (sw * swxy - swx * swy) / det;
  fit.intercept = (swxx * swy - swx * swxy) / det;
  fit.slope_se = std::sqrt(sw / det);
  fit.intercept_se = std::sqrt(swxx / det);
  fit.ok = true;
  return fit;
}

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace ldpclab
