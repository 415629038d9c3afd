#include "ldpclab/inference.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace ldpclab {

namespace {

constexpr double kLn2 = 0.6931471805599453;

struct Kahan {
  long double sum = 0.0L;
  long double c = 0.0L;
  void add(long double x) {
    long double y = x - c;
    long double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

// Zeroes the stored value of clamped bits so enumeration code can ignore the
// flags when summing l*sigma.
std::vector<double> effective_llr(const LlrVector& llr) {
  std::vector<double> l = llr.value;
  for (size_t i = 0; i < l.size(); ++i)
    if (llr.clamped[i]) l[i] = 0.0;
  return l;
}

// Gray-code walk over the affine span of `basis`. visit(S) sees the current
// value of sum_i l_i sigma_i; s holds the spins and must start all +1.
template <typename Visit>
void gray_sweep(const std::vector<std::vector<int>>& basis,
                const std::vector<double>& l, std::vector<int8_t>& s,
                Visit&& visit) {
  int k = static_cast<int>(basis.size());
  long double acc = 0.0L;
  for (size_t i = 0; i < l.size(); ++i) acc += l[i];
  visit(acc);
  if (k == 0) return;
  uint64_t states = uint64_t(1) << k;
  for (uint64_t t = 1; t < states; ++t) {
    int j = std::countr_zero(t);
    for (int i : basis[j]) {
      acc -= 2.0L * l[i] * s[i];
      s[i] = static_cast<int8_t>(-s[i]);
    }
    if ((t & 0xFFFFu) == 0) {
      // Periodic exact refresh keeps incremental drift out of log Z.
      acc = 0.0L;
      for (size_t i = 0; i < l.size(); ++i) acc += l[i] * s[i];
    }
    visit(acc);
  }
}

std::vector<std::vector<int>> conditioned_basis(const TannerGraph& g,
                                                const LlrVector& llr,
                                                const EnumBudget& budget,
                                                const char* who) {
  Gf2Matrix h = g.parity_matrix();
  for (int i = 0; i < g.n; ++i)
    if (llr.clamped[i]) h.append_unit_row(i);
  auto basis = codeword_basis(h);
  if (static_cast<int>(basis.size()) > budget.max_log2_states) {
    std::ostringstream os;
    os << who << ": 2^" << basis.size() << " codewords exceed budget 2^"
       << budget.max_log2_states;
    throw CapacityError(os.str());
  }
  return basis;
}

}  // namespace

GibbsResult gibbs_exact(const TannerGraph& g, const LlrVector& llr,
                        const std::vector<std::pair<int, int>>& pairs,
                        const EnumBudget& budget) {
  if (llr.size() != g.n) throw std::invalid_argument("llr size mismatch");
  auto basis = conditioned_basis(g, llr, budget, "gibbs_exact");
  auto l = effective_llr(llr);

  std::vector<int8_t> s(g.n, 1);
  long double max_s = -std::numeric_limits<long double>::infinity();
  gray_sweep(basis, l, s, [&](long double acc) { max_s = std::max(max_s, acc); });

  std::fill(s.begin(), s.end(), int8_t(1));
  Kahan z;
  std::vector<double> mag(g.n, 0.0);
  std::vector<double> pair_acc(pairs.size(), 0.0);
  gray_sweep(basis, l, s, [&](long double acc) {
    double w = static_cast<double>(expl(acc - max_s));
    z.add(w);
    for (int i = 0; i < g.n; ++i) mag[i] += w * s[i];
    for (size_t q = 0; q < pairs.size(); ++q)
      pair_acc[q] += w * s[pairs[q].first] * s[pairs[q].second];
  });

  GibbsResult r;
  double zv = static_cast<double>(z.sum);
  r.dimension = static_cast<int>(basis.size());
  r.log_z = static_cast<double>(max_s + logl(z.sum));
  r.marginal.resize(g.n);
  for (int i = 0; i < g.n; ++i)
    r.marginal[i] = llr.clamped[i] ? 1.0 : mag[i] / zv;
  r.pair_mean.resize(pairs.size());
  for (size_t q = 0; q < pairs.size(); ++q) r.pair_mean[q] = pair_acc[q] / zv;
  double field = 0;
  for (int i = 0; i < g.n; ++i) field += l[i] * r.marginal[i];
  r.entropy = r.log_z - field;
  return r;
}

namespace {

// One full pass over the 2^m information-bit configurations.
// visit(term, parity) gets the current weight and per-variable parities.
template <typename Visit>
void dual_sweep(const TannerGraph& g, const std::vector<double>& x,
                Visit&& visit) {
  int n = g.n, m = g.m;
  std::vector<uint8_t> parity(n, 0);     // 1 <=> tau_i = -1
  std::vector<long double> f(n);
  for (int i = 0; i < n; ++i) f[i] = 1.0L + x[i];
  auto term = [&]() {
    long double t = 1.0L;
    for (int i = 0; i < n; ++i) t *= f[i];
    return t;
  };
  visit(term(), parity);
  if (m == 0) return;
  uint64_t states = uint64_t(1) << m;
  for (uint64_t t = 1; t < states; ++t) {
    int c = std::countr_zero(t);
    for (int i : g.check_to_vars[c]) {
      parity[i] ^= 1;
      f[i] = parity[i] ? 1.0L - x[i] : 1.0L + x[i];
    }
    visit(term(), parity);
  }
}

}  // namespace

double DualResult::condition() const {
  if (z == 0.0) return std::numeric_limits<double>::infinity();
  return abs_sum / std::abs(z);
}

DualResult dual_exact(const TannerGraph& g, const LlrVector& llr,
                      const std::vector<int>& vars,
                      const std::vector<std::pair<int, int>>& pairs,
                      const EnumBudget& budget) {
  if (llr.size() != g.n) throw std::invalid_argument("llr size mismatch");
  for (int i = 0; i < g.n; ++i)
    if (llr.clamped[i])
      throw std::invalid_argument("dual_exact needs finite llr on every bit");
  if (g.m > budget.max_log2_states) {
    std::ostringstream os;
    os << "dual_exact: 2^" << g.m << " states exceed budget 2^"
       << budget.max_log2_states;
    throw CapacityError(os.str());
  }

  std::vector<double> x(g.n);
  for (int i = 0; i < g.n; ++i) x[i] = std::exp(-2.0 * llr.value[i]);

  Kahan z, abs_z;
  std::vector<Kahan> num_var(vars.size()), num_pair(pairs.size());
  dual_sweep(g, x, [&](long double term, const std::vector<uint8_t>& parity) {
    z.add(term);
    abs_z.add(term < 0 ? -term : term);
    for (size_t q = 0; q < vars.size(); ++q)
      num_var[q].add(parity[vars[q]] ? -term : term);
    for (size_t q = 0; q < pairs.size(); ++q) {
      int sgn = parity[pairs[q].first] ^ parity[pairs[q].second];
      num_pair[q].add(sgn ? -term : term);
    }
  });

  DualResult r;
  r.z = static_cast<double>(z.sum);
  r.abs_sum = static_cast<double>(abs_z.sum);

  bool bad = r.abs_sum > 0 && (r.z == 0.0 || r.abs_sum / std::abs(r.z) > 1e6);
  if (bad && g.m <= 20) {
    // Cancellation is severe: accumulate again smallest-first.
    size_t lanes = 1 + vars.size() + pairs.size();
    std::vector<std::vector<double>> terms(lanes);
    uint64_t states = uint64_t(1) << g.m;
    for (auto& v : terms) v.reserve(states);
    dual_sweep(g, x, [&](long double term, const std::vector<uint8_t>& parity) {
      terms[0].push_back(static_cast<double>(term));
      size_t lane = 1;
      for (size_t q = 0; q < vars.size(); ++q, ++lane)
        terms[lane].push_back(parity[vars[q]] ? -static_cast<double>(term)
                                              : static_cast<double>(term));
      for (size_t q = 0; q < pairs.size(); ++q, ++lane) {
        int sgn = parity[pairs[q].first] ^ parity[pairs[q].second];
        terms[lane].push_back(sgn ? -static_cast<double>(term)
                                  : static_cast<double>(term));
      }
    });
    auto resum = [](std::vector<double>& v) {
      std::sort(v.begin(), v.end(),
                [](double a, double b) { return std::abs(a) < std::abs(b); });
      Kahan k;
      for (double t : v) k.add(t);
      return static_cast<double>(k.sum);
    };
    r.z = resum(terms[0]);
    size_t lane = 1;
    r.tau_mean.resize(vars.size());
    r.tau_pair_mean.resize(pairs.size());
    std::vector<double> nv(vars.size()), np(pairs.size());
    for (size_t q = 0; q < vars.size(); ++q, ++lane) nv[q] = resum(terms[lane]);
    for (size_t q = 0; q < pairs.size(); ++q, ++lane) np[q] = resum(terms[lane]);
    if (std::abs(r.z) < 1e-300)
      throw DegenerateRatioError("dual_exact: |Z_G| below 1e-300 after resummation");
    for (size_t q = 0; q < vars.size(); ++q) r.tau_mean[q] = nv[q] / r.z;
    for (size_t q = 0; q < pairs.size(); ++q) r.tau_pair_mean[q] = np[q] / r.z;
    r.resummed = true;
    return r;
  }

  if (std::abs(r.z) < 1e-300) {
    std::ostringstream os;
    os << "dual_exact: |Z_G|=" << r.z << " below floor, sum|term|=" << r.abs_sum;
    throw DegenerateRatioError(os.str());
  }
  r.tau_mean.resize(vars.size());
  r.tau_pair_mean.resize(pairs.size());
  for (size_t q = 0; q < vars.size(); ++q)
    r.tau_mean[q] = static_cast<double>(num_var[q].sum) / r.z;
  for (size_t q = 0; q < pairs.size(); ++q)
    r.tau_pair_mean[q] = static_cast<double>(num_pair[q].sum) / r.z;
  return r;
}

DualityCheck check_duality(const TannerGraph& g, const LlrVector& llr,
                           const EnumBudget& budget) {
  DualityCheck c;
  auto gr = gibbs_exact(g, llr, {}, budget);
  auto dr = dual_exact(g, llr, {}, {}, budget);
  if (!(dr.z > 0)) {
    std::ostringstream os;
    os << "check_duality: Z_G=" << dr.z << " not positive (condition "
       << dr.condition() << ")";
    throw DegenerateRatioError(os.str());
  }
  c.log_zp = gr.log_z;
  c.log_zg = std::log(dr.z);
  c.sum_l = std::accumulate(llr.value.begin(), llr.value.end(), 0.0);
  c.rank = rank_gf2(g.parity_matrix());
  c.m = g.m;
  // Z_P = 2^-m e^{sum l} Z_G for the u-configuration sum; with independent
  // checks m equals the rank and 2^rank is the dual code size.
  double rhs = c.sum_l + c.log_zg - c.m * kLn2;
  c.residual = std::abs(c.log_zp - rhs) / std::max(1.0, std::abs(c.log_zp));
  return c;
}

DerivativeCheck check_derivative_identities(const TannerGraph& g,
                                            const LlrVector& llr, int i, int j,
                                            double pole_floor,
                                            const EnumBudget& budget) {
  DerivativeCheck out;
  bool ok_i = std::abs(llr.value[i]) >= pole_floor && !llr.clamped[i];
  bool ok_j = std::abs(llr.value[j]) >= pole_floor && !llr.clamped[j];
  out.near_pole = !(ok_i && ok_j);

  auto gr = gibbs_exact(g, llr, {{i, j}}, budget);
  auto dr = dual_exact(g, llr, {i, j}, {{i, j}}, budget);

  auto first_residual = [&](int v, double tau) {
    double l2 = 2.0 * llr.value[v];
    double rhs = 1.0 / std::tanh(l2) - tau / std::sinh(l2);
    return std::abs(gr.marginal[v] - rhs);
  };
  if (ok_i) out.first_i = first_residual(i, dr.tau_mean[0]);
  if (ok_j) out.first_j = first_residual(j, dr.tau_mean[1]);
  if (ok_i && ok_j) {
    double cov_p = gr.pair_mean[0] - gr.marginal[i] * gr.marginal[j];
    double cov_g = dr.tau_pair_mean[0] - dr.tau_mean[0] * dr.tau_mean[1];
    double rhs = cov_g / (std::sinh(2.0 * llr.value[i]) *
                          std::sinh(2.0 * llr.value[j]));
    out.second = std::abs(cov_p - rhs);
  }
  return out;
}

double neighborhood_gibbs(const TannerGraph& g, int o, int d,
                          const LlrVector& llr, BoundaryCondition bc,
                          const EnumBudget& budget) {
  Neighborhood nb = neighborhood(g, o, d);
  Subgraph sub = induced_subgraph(g, nb.variables, nb.checks);
  LlrVector sl;
  sl.value.reserve(nb.variables.size());
  sl.clamped.reserve(nb.variables.size());
  for (int v : nb.variables) {
    sl.value.push_back(llr.value[v]);
    sl.clamped.push_back(llr.clamped[v]);
  }
  if (bc == BoundaryCondition::plus_one) {
    for (int v : nb.boundary) {
      int sv = sub.sub_var_of[v];
      sl.value[sv] = 0.0;
      sl.clamped[sv] = 1;
    }
  }
  auto res = gibbs_exact(sub.graph, sl, {}, budget);
  return res.marginal[sub.sub_var_of[o]];
}

RestrictedPartitions restricted_partitions(const TannerGraph& g,
                                           const std::vector<int>& xhat,
                                           const LlrVector& llr,
                                           const EnumBudget& budget) {
  std::vector<uint8_t> in_xhat(g.m, 0);
  for (int c : xhat) in_xhat[c] = 1;
  std::vector<int> kept_checks;
  for (int c = 0; c < g.m; ++c)
    if (!in_xhat[c]) kept_checks.push_back(c);
  std::vector<int> kept_vars;
  for (int v = 0; v < g.n; ++v) {
    bool touches = false;
    for (int c : g.var_to_checks[v])
      if (in_xhat[c]) {
        touches = true;
        break;
      }
    if (!touches) kept_vars.push_back(v);
  }
  Subgraph sub = induced_subgraph(g, kept_vars, kept_checks);
  LlrVector sl;
  for (int v : kept_vars) {
    sl.value.push_back(llr.value[v]);
    sl.clamped.push_back(llr.clamped[v]);
  }
  RestrictedPartitions out;
  out.kept_checks = static_cast<int>(kept_checks.size());
  out.kept_vars = kept_vars;
  out.z_g = dual_exact(sub.graph, sl, {}, {}, budget).z;
  out.log_z_p = gibbs_exact(sub.graph, sl, {}, budget).log_z;
  out.rank = rank_gf2(sub.graph.parity_matrix());
  return out;
}

}  // namespace ldpclab
