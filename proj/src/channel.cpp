#include "ldpclab/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "ldpclab/numerics.hpp"

namespace ldpclab {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa,
             double b, double fb, double m, double fm, double whole,
             double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(f, a, fa, m, fm, lm, flm);
  double right = simpson(f, m, fm, b, fb, rm, frm);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, int max_depth) {
  if (a == b) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fb = f(b), fm = f(m);
  double whole = simpson(f, a, fa, b, fb, m, fm);
  return adapt(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

NoiseSpec NoiseSpec::uniform(int n, double eps_value) {
  NoiseSpec s;
  s.eps.assign(n, eps_value);
  s.validate();
  return s;
}

double NoiseSpec::max_eps() const {
  double mx = 0;
  for (double e : eps) mx = std::max(mx, e);
  return mx;
}

void NoiseSpec::validate() const {
  for (double e : eps)
    if (!(e >= 0.0) || !std::isfinite(e))
      throw std::invalid_argument("noise level must be finite and >= 0");
}

LlrVector LlrVector::constant(int n, double l) {
  LlrVector v;
  v.value.assign(n, l);
  v.clamped.assign(n, 0);
  return v;
}

LlrVector sample_llr(const NoiseSpec& noise, CounterRng& rng) {
  noise.validate();
  LlrVector out;
  out.stream = rng.stream();
  out.counter0 = rng.counter();
  int n = noise.size();
  out.value.resize(n);
  out.clamped.resize(n);
  for (int i = 0; i < n; ++i) {
    if (noise.perfect(i)) {
      out.value[i] = 0.0;
      out.clamped[i] = 1;
      continue;
    }
    double r = 1.0 / (noise.eps[i] * noise.eps[i]);  // mean and variance
    out.value[i] = r + std::sqrt(r) * rng.normal();
    out.clamped[i] = 0;
  }
  return out;
}

double llr_density(double l, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("llr_density needs eps > 0");
  double r = 1.0 / (eps * eps);
  double d = l - r;
  return std::exp(-d * d / (2.0 * r)) / std::sqrt(2.0 * M_PI * r);
}

double sinh_moment_quadrature(double eps, double s, double tol) {
  if (!(s > 0.0 && s < 0.5))
    throw std::invalid_argument("sinh moment needs 0 < s < 1/2");
  if (!(eps > 0)) throw std::invalid_argument("sinh moment needs eps > 0");
  double r = 1.0 / (eps * eps);
  double sd = std::sqrt(r);
  double lo = r - 12.0 * sd, hi = r + 12.0 * sd;
  double q = 1.0 - 2.0 * s;

  // |sinh 2l|^{-2s} = (2|l|)^{-2s} * (sinh(2|l|)/(2|l|))^{-2s}; substituting
  // |l| = v^{1/q} makes the first factor v^{-2s/q} cancel against the
  // Jacobian, leaving a smooth integrand near 0.
  auto smooth_part = [&](double l) {
    double a = std::abs(2.0 * l);
    double ratio = a < 1e-8 ? 1.0 + a * a / 6.0 : std::sinh(a) / a;
    return std::pow(ratio, -2.0 * s) * llr_density(l, eps);
  };
  auto near_zero = [&](double sign, double b) {
    if (b <= 0) return 0.0;
    auto f = [&](double v) {
      double l = sign * std::pow(v, 1.0 / q);
      return std::pow(2.0, -2.0 * s) / q * smooth_part(l);
    };
    return integrate(f, 0.0, std::pow(b, q), tol);
  };
  auto far = [&](double a, double b) {
    if (a >= b) return 0.0;
    auto f = [&](double l) {
      return std::pow(std::abs(std::sinh(2.0 * l)), -2.0 * s) *
             llr_density(l, eps);
    };
    return integrate(f, a, b, tol);
  };

  const double cut = 0.5;
  double total = 0;
  if (lo < -cut) total += far(lo, -cut);
  if (lo < 0) total += near_zero(-1.0, std::min(cut, -lo));
  total += near_zero(+1.0, std::min(hi, cut));
  if (hi > cut) total += far(std::max(cut, lo), hi);
  return total;
}

McEstimate sinh_moment_mc(double eps, double s, uint64_t samples, CounterRng& rng) {
  if (!(s > 0.0 && s < 0.5))
    throw std::invalid_argument("sinh moment needs 0 < s < 1/2");
  double r = 1.0 / (eps * eps);
  double sd = std::sqrt(r);
  double sum = 0, sumsq = 0;
  for (uint64_t k = 0; k < samples; ++k) {
    double l = r + sd * rng.normal();
    double x = std::pow(std::abs(std::sinh(2.0 * l)), -2.0 * s);
    sum += x;
    sumsq += x * x;
  }
  McEstimate e;
  e.samples = samples;
  e.mean = sum / samples;
  double var = std::max(0.0, sumsq / samples - e.mean * e.mean);
  e.std_error = std::sqrt(var / samples);
  return e;
}

double sinh_moment(double eps, double s, SinhMethod method, uint64_t mc_samples,
                   uint64_t seed) {
  if (method == SinhMethod::quadrature) return sinh_moment_quadrature(eps, s);
  CounterRng rng(seed, 0);
  return sinh_moment_mc(eps, s, mc_samples, rng).mean;
}

}  // namespace ldpclab
