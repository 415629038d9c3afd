#include "ldpclab/density_evolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ldpclab/stats.hpp"

namespace ldpclab {

namespace {

double safe_atanh(double x, double clamp) {
  if (x >= 1.0) return clamp;
  if (x <= -1.0) return -clamp;
  return std::clamp(std::atanh(x), -clamp, clamp);
}

int sample_degree(const std::vector<std::pair<int, double>>& pmf,
                  CounterRng& rng) {
  double u = rng.u01();
  double acc = 0;
  for (auto [d, p] : pmf) {
    acc += p;
    if (u <= acc) return d;
  }
  return pmf.back().first;
}

}  // namespace

DeResult density_evolution(const CodeEnsembleSpec& spec, double eps, int depth,
                           size_t population, CounterRng& rng, double clamp) {
  spec.validate();
  if (depth < 0 || depth % 2 != 0)
    throw std::invalid_argument("density evolution depth must be even");
  if (!(eps > 0)) throw std::invalid_argument("density evolution needs eps > 0");

  auto node_pmf = spec.realized_var_degree();
  bool any_edges = false;
  for (auto [d, p] : node_pmf)
    if (d > 0 && p > 0) any_edges = true;
  if (!any_edges)
    throw std::invalid_argument("ensemble has no variable edges");
  auto lambda = spec.var_edge_perspective();
  auto rho = spec.chk_edge_perspective();

  double r = 1.0 / (eps * eps);
  double sd = std::sqrt(r);
  auto draw_l = [&]() { return r + sd * rng.normal(); };

  DeResult out;
  out.population.depth = depth;
  out.population.delta.assign(population, 0.0);

  int layers = depth / 2;
  std::vector<double> vc(population);
  if (layers > 0) {
    // Leaf variable-to-check messages: channel only.
    for (auto& v : vc) v = std::clamp(draw_l(), -clamp, clamp);
    auto check_msg = [&](const std::vector<double>& prev) {
      int dc = sample_degree(rho, rng);
      double prod = 1.0;
      for (int k = 0; k + 1 < dc; ++k)
        prod *= std::tanh(prev[rng.below(population)]);
      return safe_atanh(prod, clamp);
    };
    std::vector<double> next(population);
    for (int layer = 1; layer < layers; ++layer) {
      for (size_t s = 0; s < population; ++s) {
        int dv = sample_degree(lambda, rng);
        double total = draw_l();
        for (int k = 0; k + 1 < dv; ++k) total += check_msg(vc);
        next[s] = std::clamp(total, -clamp, clamp);
      }
      vc.swap(next);
    }
    // Root stage: node-perspective degree, extrinsic only.
    for (size_t s = 0; s < population; ++s) {
      int dv = sample_degree(node_pmf, rng);
      double delta = 0.0;
      for (int k = 0; k < dv; ++k) delta += check_msg(vc);
      out.population.delta[s] = delta;
    }
  }

  RunningStat stat;
  for (size_t s = 0; s < population; ++s)
    stat.add(std::tanh(draw_l() + out.population.delta[s]));
  out.mean_soft = stat.mean;
  out.std_error = stat.std_error();
  return out;
}

ValueWithError de_gexit(const CodeEnsembleSpec& spec, double eps, int depth,
                        size_t population, CounterRng& rng) {
  auto de = density_evolution(spec, eps, depth, population, rng);
  return {0.5 * (de.mean_soft - 1.0), 0.5 * de.std_error};
}

TreeEquivalence tree_equivalence_check(const CodeEnsembleSpec& spec, int n,
                                       int depth, double eps, uint64_t trials,
                                       size_t population, uint64_t seed,
                                       std::optional<int> root,
                                       const EnumBudget& budget) {
  TreeEquivalence out;
  NoiseSpec noise = NoiseSpec::uniform(n, eps);
  RunningStat graph_stat;
  uint64_t rejections = 0;
  uint64_t attempts = 0;

  if (depth == 0) {
    // N_0(o) is the root alone; both sides are E tanh(l).
    for (uint64_t t = 0; t < trials; ++t) {
      CounterRng rng(seed, (uint64_t(1) << 40) + t);
      double r = 1.0 / (eps * eps);
      graph_stat.add(std::tanh(r + std::sqrt(r) * rng.normal()));
    }
    out.tree_trials = trials;
  } else {
    for (uint64_t t = 0; t < trials; ++t) {
      bool accepted = false;
      for (int retry = 0; retry < 512 && !accepted; ++retry) {
        ++attempts;
        CounterRng rng(seed, (uint64_t(1) << 40) + attempts);
        TannerGraph g = sample_ensemble(spec, n, rng);
        int o = root ? *root : static_cast<int>(rng.below(n));
        Neighborhood nb = neighborhood(g, o, depth);
        if (!nb.is_tree) {
          ++rejections;
          continue;
        }
        LlrVector llr = sample_llr(noise, rng);
        double val;
        try {
          val = neighborhood_gibbs(g, o, depth, llr,
                                   BoundaryCondition::free_boundary, budget);
        } catch (const CapacityError&) {
          ++out.capacity_skips;
          continue;
        }
        graph_stat.add(val);
        accepted = true;
      }
      if (!accepted) {
        out.aborted = true;
        break;
      }
      // Early abort when trees are essentially unreachable.
      if (attempts >= 200 && graph_stat.n * 100 < attempts) {
        out.aborted = true;
        break;
      }
    }
    out.tree_trials = graph_stat.n;
  }
  out.rejection_rate =
      attempts == 0 ? 0.0 : static_cast<double>(rejections) / attempts;
  out.graph_mean = graph_stat.mean;
  out.graph_se = graph_stat.std_error();

  CounterRng de_rng(seed, uint64_t(1) << 41);
  auto de = density_evolution(spec, eps, depth, population, de_rng);
  out.de_mean = de.mean_soft;
  out.de_se = de.std_error;
  out.difference = out.graph_mean - out.de_mean;
  out.combined_se = std::sqrt(out.graph_se * out.graph_se + out.de_se * out.de_se);
  return out;
}

}  // namespace ldpclab
