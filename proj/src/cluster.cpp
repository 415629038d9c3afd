#include "ldpclab/cluster.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "ldpclab/stats.hpp"

namespace ldpclab {

namespace {

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> boundary_of_vars(const TannerGraph& g, const std::vector<int>& vars) {
  std::set<int> checks;
  for (int v : vars) checks.insert(g.var_to_checks[v].begin(), g.var_to_checks[v].end());
  return {checks.begin(), checks.end()};
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Connectivity of a variable set through shared checks, restricted to the set.
bool vars_connected(const TannerGraph& g, const std::vector<int>& vars) {
  if (vars.size() <= 1) return true;
  std::set<int> in(vars.begin(), vars.end());
  std::set<int> seen;
  std::deque<int> q{vars[0]};
  seen.insert(vars[0]);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int c : g.var_to_checks[v])
      for (int u : g.check_to_vars[c])
        if (in.count(u) && !seen.count(u)) {
          seen.insert(u);
          q.push_back(u);
        }
  }
  return seen.size() == vars.size();
}

// Is there a walk from a check of `from` to a check of `to` whose variable
// nodes all lie in `gamma`? Checks on the walk are unrestricted.
bool walk_exists(const TannerGraph& g, const std::vector<int>& from,
                 const std::vector<int>& to, const std::set<int>& gamma) {
  if (from.empty() || to.empty()) return false;
  std::set<int> target(to.begin(), to.end());
  std::set<int> seen(from.begin(), from.end());
  std::deque<int> q(from.begin(), from.end());
  while (!q.empty()) {
    int c = q.front();
    q.pop_front();
    if (target.count(c)) return true;
    for (int v : g.check_to_vars[c]) {
      if (!gamma.count(v)) continue;
      for (int c2 : g.var_to_checks[v])
        if (!seen.count(c2)) {
          seen.insert(c2);
          q.push_back(c2);
        }
    }
  }
  return false;
}

std::vector<int> gamma_pool(const TannerGraph& g, const std::vector<int>& xhat,
                            int i, int j, const ClusterOptions& opts) {
  // Condition (i) forces boundary(Gamma) inside xhat, so only variables whose
  // whole check neighborhood lies in xhat can ever appear.
  std::vector<int> pool;
  for (int v = 0; v < g.n; ++v) {
    if (g.var_to_checks[v].empty()) continue;
    if (!opts.allow_ij_in_gamma && (v == i || v == j)) continue;
    if (subset_of(g.var_to_checks[v], xhat)) pool.push_back(v);
  }
  return pool;
}

}  // namespace

ClusterList enumerate_clusters(const TannerGraph& g, int i, int j,
                               const ClusterOptions& opts) {
  if (g.n > opts.max_graph_vars) {
    std::ostringstream os;
    os << "enumerate_clusters: subset scan over 2^" << g.n
       << " variable sets exceeds 2^" << opts.max_graph_vars;
    throw CapacityError(os.str());
  }
  std::vector<int> required =
      sorted_union(g.var_to_checks[i], g.var_to_checks[j]);
  ClusterList out;
  if (required.empty()) return out;  // both isolated: no cluster can qualify

  std::map<std::vector<int>, std::vector<int>> by_checks;  // checks -> witness
  uint64_t masks = uint64_t(1) << g.n;
  for (uint64_t mask = 1; mask < masks; ++mask) {
    std::vector<int> vars;
    for (int v = 0; v < g.n; ++v)
      if (mask & (uint64_t(1) << v)) vars.push_back(v);
    auto checks = boundary_of_vars(g, vars);
    if (!subset_of(required, checks)) continue;
    if (!vars_connected(g, vars)) continue;
    if (static_cast<int>(checks.size()) > opts.max_cluster_checks) {
      out.truncated = true;
      continue;
    }
    by_checks.emplace(std::move(checks), std::move(vars));
  }
  for (auto& [checks, witness] : by_checks)
    out.clusters.push_back({checks, witness});
  return out;
}

std::vector<CompatibleSet> enumerate_compatible(const TannerGraph& g,
                                                const std::vector<int>& xhat,
                                                int i, int j,
                                                const ClusterOptions& opts) {
  auto pool = gamma_pool(g, xhat, i, j, opts);
  if (static_cast<int>(pool.size()) > opts.max_pool) {
    std::ostringstream os;
    os << "enumerate_compatible: candidate pool " << pool.size()
       << " exceeds cap " << opts.max_pool;
    throw CapacityError(os.str());
  }
  const auto& di = g.var_to_checks[i];
  const auto& dj = g.var_to_checks[j];
  std::vector<int> dij = sorted_union(di, dj);
  bool adjacent = false;
  {
    std::vector<int> inter;
    std::set_intersection(di.begin(), di.end(), dj.begin(), dj.end(),
                          std::back_inserter(inter));
    adjacent = !inter.empty();
  }

  std::vector<CompatibleSet> out;
  uint64_t subsets = uint64_t(1) << pool.size();
  for (uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<int> gamma;
    for (size_t k = 0; k < pool.size(); ++k)
      if (mask & (uint64_t(1) << k)) gamma.push_back(pool[k]);
    if (gamma.empty()) {
      if (!opts.empty_gamma_when_adjacent) continue;
      if (!adjacent) continue;
      if (dij != xhat) continue;  // condition (i) with boundary(Gamma) empty
      out.push_back({{}});
      continue;
    }
    auto bg = boundary_of_vars(g, gamma);
    // (i) boundary(Gamma) u boundary(i) u boundary(j) = xhat
    if (sorted_union(bg, dij) != xhat) continue;
    // (ii) boundary(Gamma) meets both boundary(i) and boundary(j)
    std::vector<int> mi, mj;
    std::set_intersection(bg.begin(), bg.end(), di.begin(), di.end(),
                          std::back_inserter(mi));
    if (mi.empty()) continue;
    std::set_intersection(bg.begin(), bg.end(), dj.begin(), dj.end(),
                          std::back_inserter(mj));
    if (mj.empty()) continue;
    // (iii) a walk from boundary(i) to boundary(j) with variables in Gamma
    std::set<int> gs(gamma.begin(), gamma.end());
    if (!walk_exists(g, di, dj, gs)) continue;
    out.push_back({gamma});
  }
  return out;
}

bool validate_cluster(const TannerGraph& g, const std::vector<int>& xhat,
                      int i, int j) {
  // Independent reading of the definition: xhat must contain both variable
  // boundaries and be exactly the boundary of some connected variable set.
  std::set<int> xs(xhat.begin(), xhat.end());
  for (int c : g.var_to_checks[i])
    if (!xs.count(c)) return false;
  for (int c : g.var_to_checks[j])
    if (!xs.count(c)) return false;
  // Any witness X consists of variables whose boundary lies inside xhat.
  std::vector<int> pool;
  for (int v = 0; v < g.n; ++v) {
    if (g.var_to_checks[v].empty()) continue;
    bool inside = true;
    for (int c : g.var_to_checks[v])
      if (!xs.count(c)) inside = false;
    if (inside) pool.push_back(v);
  }
  if (pool.size() > 22) throw CapacityError("validate_cluster: pool too large");
  uint64_t subsets = uint64_t(1) << pool.size();
  for (uint64_t mask = 1; mask < subsets; ++mask) {
    std::vector<int> vars;
    for (size_t k = 0; k < pool.size(); ++k)
      if (mask & (uint64_t(1) << k)) vars.push_back(pool[k]);
    if (!vars_connected(g, vars)) continue;
    if (boundary_of_vars(g, vars) == xhat) return true;
  }
  return false;
}

bool validate_compatible(const TannerGraph& g, const std::vector<int>& xhat,
                         const std::vector<int>& gamma, int i, int j,
                         const ClusterOptions& opts) {
  std::set<int> seen(gamma.begin(), gamma.end());
  if (seen.size() != gamma.size()) return false;  // variables all distinct
  if (!opts.allow_ij_in_gamma && (seen.count(i) || seen.count(j))) return false;
  std::set<int> bg;
  for (int v : gamma) bg.insert(g.var_to_checks[v].begin(), g.var_to_checks[v].end());
  std::set<int> want(xhat.begin(), xhat.end());
  std::set<int> got = bg;
  for (int c : g.var_to_checks[i]) got.insert(c);
  for (int c : g.var_to_checks[j]) got.insert(c);
  if (got != want) return false;
  auto meets = [&](const std::vector<int>& side) {
    for (int c : side)
      if (bg.count(c)) return true;
    return false;
  };
  if (gamma.empty()) {
    if (!opts.empty_gamma_when_adjacent) return false;
    for (int c : g.var_to_checks[i])
      for (int d : g.var_to_checks[j])
        if (c == d) return true;
    return false;
  }
  if (!meets(g.var_to_checks[i]) || !meets(g.var_to_checks[j])) return false;
  return walk_exists(g, g.var_to_checks[i], g.var_to_checks[j], seen);
}

namespace {

// Shared core for the kernel: loops over both replica configurations of the
// checks in xhat and hands each Gamma's product term to `emit`.
template <typename Emit>
void kernel_sweep(const TannerGraph& g, const std::vector<int>& xhat,
                  const LlrVector& llr, int i, int j,
                  const std::vector<CompatibleSet>& gammas, Emit&& emit) {
  int nx = static_cast<int>(xhat.size());
  std::map<int, int> check_pos;
  for (int k = 0; k < nx; ++k) check_pos[xhat[k]] = k;

  // All participating variables: Gamma members plus i and j.
  std::set<int> vars_set{i, j};
  for (const auto& gset : gammas)
    vars_set.insert(gset.vars.begin(), gset.vars.end());
  std::vector<int> vars(vars_set.begin(), vars_set.end());
  std::map<int, int> var_pos;
  for (size_t k = 0; k < vars.size(); ++k) var_pos[vars[k]] = static_cast<int>(k);

  std::vector<uint32_t> var_mask(vars.size(), 0);
  for (size_t k = 0; k < vars.size(); ++k) {
    for (int c : g.var_to_checks[vars[k]]) {
      auto it = check_pos.find(c);
      if (it == check_pos.end())
        throw std::invalid_argument("kernel: variable boundary leaves xhat");
      var_mask[k] |= uint32_t(1) << it->second;
    }
  }
  std::vector<double> e2(vars.size()), e4(vars.size());
  for (size_t k = 0; k < vars.size(); ++k) {
    if (llr.clamped[vars[k]])
      throw std::invalid_argument("kernel needs finite llr");
    e2[k] = std::exp(-2.0 * llr.value[vars[k]]);
    e4[k] = e2[k] * e2[k];
  }

  int pi = var_pos[i], pj = var_pos[j];
  std::vector<double> ek(vars.size());
  uint64_t configs = uint64_t(1) << nx;
  for (uint64_t u1 = 0; u1 < configs; ++u1) {
    int ti1 = std::popcount(u1 & var_mask[pi]) & 1 ? -1 : 1;
    int tj1 = std::popcount(u1 & var_mask[pj]) & 1 ? -1 : 1;
    for (uint64_t u2 = 0; u2 < configs; ++u2) {
      int ti2 = std::popcount(u2 & var_mask[pi]) & 1 ? -1 : 1;
      if (ti1 == ti2) continue;  // prefactor vanishes
      int tj2 = std::popcount(u2 & var_mask[pj]) & 1 ? -1 : 1;
      double pref = double(ti1 - ti2) * double(tj1 - tj2);
      for (size_t k = 0; k < vars.size(); ++k) {
        int t1 = std::popcount(u1 & var_mask[k]) & 1 ? -1 : 1;
        int t2 = std::popcount(u2 & var_mask[k]) & 1 ? -1 : 1;
        ek[k] = (t1 + t2) * e2[k] + t1 * t2 * e4[k];
      }
      for (size_t q = 0; q < gammas.size(); ++q) {
        double prod = 1.0;
        for (int v : gammas[q].vars) prod *= ek[var_pos[v]];
        emit(q, pref * prod);
      }
    }
  }
}

}  // namespace

std::vector<double> cluster_kernel_per_gamma(const TannerGraph& g,
                                             const std::vector<int>& xhat,
                                             const LlrVector& llr, int i,
                                             int j, const ClusterOptions& opts) {
  auto gammas = enumerate_compatible(g, xhat, i, j, opts);
  std::vector<double> out(gammas.size(), 0.0);
  kernel_sweep(g, xhat, llr, i, j, gammas,
               [&](size_t q, double term) { out[q] += term; });
  return out;
}

double cluster_kernel(const TannerGraph& g, const std::vector<int>& xhat,
                      const LlrVector& llr, int i, int j,
                      const ClusterOptions& opts) {
  auto parts = cluster_kernel_per_gamma(g, xhat, llr, i, j, opts);
  double total = 0.0;
  for (double p : parts) total += p;
  return total;
}

IdentityReport identity_check(const TannerGraph& g, const LlrVector& llr,
                              int i, int j, const ClusterOptions& opts,
                              const EnumBudget& budget) {
  IdentityReport rep;
  rep.i = i;
  rep.j = j;
  auto dual = dual_exact(g, llr, {i, j}, {{i, j}}, budget);
  rep.lhs = dual.tau_pair_mean[0] - dual.tau_mean[0] * dual.tau_mean[1];

  auto list = enumerate_clusters(g, i, j, opts);
  rep.truncated = list.truncated;
  double rhs = 0.0;
  for (const auto& cluster : list.clusters) {
    ClusterTerm term;
    term.cluster = cluster;
    auto gammas = enumerate_compatible(g, cluster.checks, i, j, opts);
    term.compatible_count = gammas.size();
    double kern = 0.0;
    if (!gammas.empty()) {
      kernel_sweep(g, cluster.checks, llr, i, j, gammas,
                   [&](size_t, double t) { kern += t; });
    }
    term.kernel = kern;
    auto rp = restricted_partitions(g, cluster.checks, llr, budget);
    term.zg_ratio = rp.z_g / dual.z;
    term.contribution = 0.5 * term.kernel * term.zg_ratio * term.zg_ratio;
    rhs += term.contribution;
    rep.terms.push_back(std::move(term));
  }
  rep.rhs = rhs;
  rep.residual = std::abs(rep.lhs - rep.rhs);
  return rep;
}

nlohmann::json identity_dump_json(const TannerGraph& g, const LlrVector& llr,
                                  const IdentityReport& report,
                                  const ClusterOptions& opts) {
  nlohmann::json out;
  out["i"] = report.i;
  out["j"] = report.j;
  out["lhs"] = report.lhs;
  out["rhs"] = report.rhs;
  out["residual"] = report.residual;
  out["truncated"] = report.truncated;
  out["options"] = {
      {"allow_ij_in_gamma", opts.allow_ij_in_gamma},
      {"empty_gamma_when_adjacent", opts.empty_gamma_when_adjacent}};
  out["llr"] = llr.value;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : report.terms) {
    nlohmann::json jt;
    jt["checks"] = t.cluster.checks;
    jt["witness"] = t.cluster.witness;
    jt["kernel"] = t.kernel;
    jt["zg_ratio"] = t.zg_ratio;
    jt["contribution"] = t.contribution;
    auto gammas = enumerate_compatible(g, t.cluster.checks, report.i, report.j, opts);
    auto parts =
        cluster_kernel_per_gamma(g, t.cluster.checks, llr, report.i, report.j, opts);
    nlohmann::json jg = nlohmann::json::array();
    for (size_t q = 0; q < gammas.size(); ++q)
      jg.push_back({{"vars", gammas[q].vars}, {"kernel_part", parts[q]}});
    jt["gammas"] = jg;
    terms.push_back(std::move(jt));
  }
  out["clusters"] = terms;
  return out;
}

T1T2Estimate t1_t2_diagnostics(const TannerGraph& g,
                               const std::vector<int>& xhat, int i, int j,
                               double eps, double s, uint64_t samples,
                               uint64_t seed, const ClusterOptions& opts,
                               const EnumBudget& budget) {
  if (!(s > 0.0 && s < 0.5))
    throw std::invalid_argument("t1_t2_diagnostics needs 0 < s < 1/2");
  NoiseSpec noise = NoiseSpec::uniform(g.n, eps);
  auto gammas = enumerate_compatible(g, xhat, i, j, opts);
  RunningStat t1, t2;
  for (uint64_t k = 0; k < samples; ++k) {
    CounterRng rng(seed, k);
    LlrVector llr = sample_llr(noise, rng);
    double kern = 0.0;
    if (!gammas.empty())
      kernel_sweep(g, xhat, llr, i, j, gammas,
                   [&](size_t, double t) { kern += t; });
    auto rp = restricted_partitions(g, xhat, llr, budget);
    double zg = dual_exact(g, llr, {}, {}, budget).z;
    t1.add(std::pow(std::abs(kern), 4.0 * s));
    t2.add(std::pow(std::abs(rp.z_g / zg), 8.0 * s));
  }
  T1T2Estimate out;
  out.samples = samples;
  out.t1_sq_mean = t1.mean;
  out.t1_sq_se = t1.std_error();
  out.t2_sq_mean = t2.mean;
  out.t2_sq_se = t2.std_error();
  return out;
}

}  // namespace ldpclab
