#pragma once

#include <cmath>
#include <functional>

namespace ldpclab {

// Adaptive Simpson quadrature. Meant for smooth integrands; callers are
// responsible for transforming away singularities first.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12, int max_depth = 48);

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace ldpclab
