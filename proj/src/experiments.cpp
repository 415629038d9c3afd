#include "ldpclab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ldpclab/parallel.hpp"

namespace ldpclab {

namespace {

constexpr uint64_t kBlockSamples = 256;  // fixed block size for reductions

std::string canonical_params(
    const std::vector<std::pair<std::string, std::string>>& params) {
  std::ostringstream os;
  for (const auto& [k, v] : params) os << k << "=" << v << ";";
  return os.str();
}

}  // namespace

RunManifest make_manifest(const std::string& command, uint64_t seed,
                          int workers,
                          std::vector<std::pair<std::string, std::string>> params) {
  RunManifest m;
  m.command = command;
  m.master_seed = seed;
  m.workers = workers;
  std::sort(params.begin(), params.end());
  m.params = std::move(params);
  std::ostringstream os;
  os << command << "|seed=" << seed << "|" << canonical_params(m.params);
  std::ostringstream hex;
  hex << std::hex << fnv1a64(os.str());
  m.config_hash = hex.str();
  return m;
}

// ---------------------------------------------------------------------------

namespace {

// Deterministic pair selection: group variable pairs by graph distance and
// keep an evenly spread sample per distance.
std::vector<PairRecord> select_pairs(const TannerGraph& g,
                                     const PairSelection& sel) {
  std::map<int, std::vector<std::pair<int, int>>> by_dist;
  for (int i = 0; i < g.n; ++i) {
    auto dist = variable_distances(g, i);
    for (int j = i + 1; j < g.n; ++j) {
      if (dist[j] < 0 || dist[j] > sel.max_distance) continue;
      by_dist[dist[j]].emplace_back(i, j);
    }
  }
  std::vector<PairRecord> out;
  for (auto& [d, pairs] : by_dist) {
    if (static_cast<int>(pairs.size()) < sel.min_pairs_per_distance) continue;
    std::sort(pairs.begin(), pairs.end());
    int keep = std::min<int>(sel.max_pairs_per_distance,
                             static_cast<int>(pairs.size()));
    for (int k = 0; k < keep; ++k) {
      size_t idx = pairs.size() <= 1
                       ? 0
                       : (static_cast<size_t>(k) * (pairs.size() - 1)) /
                             std::max(1, keep - 1);
      PairRecord r;
      r.i = pairs[idx].first;
      r.j = pairs[idx].second;
      r.dist = d;
      out.push_back(r);
    }
  }
  // The spread indexing can repeat a pair when keep > available; dedup.
  std::sort(out.begin(), out.end(), [](const PairRecord& a, const PairRecord& b) {
    return std::tie(a.dist, a.i, a.j) < std::tie(b.dist, b.i, b.j);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const PairRecord& a, const PairRecord& b) {
                          return a.i == b.i && a.j == b.j;
                        }),
            out.end());
  return out;
}

}  // namespace

DecayReport correlation_decay(const TannerGraph& g, const NoiseSpec& noise,
                              const PairSelection& sel, uint64_t samples,
                              uint64_t seed, int workers,
                              const std::string& code_id,
                              const EnumBudget& budget) {
  DecayReport rep;
  rep.code_id = code_id;
  double me = noise.max_eps();
  rep.eps2 = me * me;
  rep.samples = samples;
  rep.pairs = select_pairs(g, sel);

  std::vector<std::pair<int, int>> pair_list;
  for (const auto& p : rep.pairs) pair_list.emplace_back(p.i, p.j);

  uint64_t blocks = (samples + kBlockSamples - 1) / kBlockSamples;
  auto block_stats = run_blocks<std::vector<RunningStat>>(
      blocks, workers, [&](size_t b) {
        std::vector<RunningStat> stats(pair_list.size());
        uint64_t lo = b * kBlockSamples;
        uint64_t hi = std::min<uint64_t>(samples, lo + kBlockSamples);
        for (uint64_t k = lo; k < hi; ++k) {
          CounterRng rng(seed, k);
          LlrVector llr = sample_llr(noise, rng);
          GibbsResult res = gibbs_exact(g, llr, pair_list, budget);
          for (size_t q = 0; q < pair_list.size(); ++q) {
            double cov = res.pair_mean[q] -
                         res.marginal[pair_list[q].first] *
                             res.marginal[pair_list[q].second];
            stats[q].add(std::abs(cov));
          }
        }
        return stats;
      });
  std::vector<RunningStat> totals(pair_list.size());
  for (const auto& bs : block_stats)
    for (size_t q = 0; q < totals.size(); ++q) totals[q].merge(bs[q]);

  std::map<int, RunningStat> dist_stats;
  std::map<int, int> dist_pairs;
  for (size_t q = 0; q < rep.pairs.size(); ++q) {
    rep.pairs[q].mean = totals[q].mean;
    rep.pairs[q].se = totals[q].std_error();
    rep.pairs[q].samples = totals[q].n;
    dist_stats[rep.pairs[q].dist].merge(totals[q]);
    dist_pairs[rep.pairs[q].dist] += 1;
  }

  std::vector<double> fit_x, fit_y, fit_w;
  std::vector<double> fb_x, fb_y, fb_w;
  for (auto& [d, st] : dist_stats) {
    DistanceRow row;
    row.dist = d;
    row.n_pairs = dist_pairs[d];
    row.mean = st.mean;
    row.se = st.std_error();
    row.above_floor = st.mean > rep.noise_floor;
    if (row.above_floor) {
      double rel = row.se > 0 ? row.se / row.mean : 0.0;
      double w = 1.0 / std::max(rel * rel, 1e-12);
      // Primary filter: relative standard error under 30%.
      if (rel < 0.30) {
        fit_x.push_back(d);
        fit_y.push_back(std::log(row.mean));
        fit_w.push_back(w);
        row.in_fit = true;
      }
      fb_x.push_back(d);
      fb_y.push_back(std::log(row.mean));
      fb_w.push_back(w);
    }
    rep.distances.push_back(row);
  }

  if (fb_x.empty()) {
    rep.fully_decayed = true;
  } else if (fit_x.size() >= 2) {
    rep.fit = wls_line(fit_x, fit_y, fit_w);
  } else if (fb_x.size() >= 2) {
    // The 30% filter left too little; fall back to every distance above the
    // floor so a slope can still be reported, and flag it.
    rep.fit = wls_line(fb_x, fb_y, fb_w);
    rep.fit_fallback = true;
    for (auto& row : rep.distances)
      if (row.above_floor) row.in_fit = true;
  }
  return rep;
}

// ---------------------------------------------------------------------------

MapGexitResult map_gexit_mc(const CodeEnsembleSpec& spec, int n, double eps,
                            uint64_t graphs, uint64_t noise_per_graph,
                            uint64_t seed, int workers,
                            const EnumBudget& budget) {
  NoiseSpec noise = NoiseSpec::uniform(n, eps);
  struct BlockOut {
    RunningStat per_graph;
    uint64_t skips = 0;
  };
  auto blocks = run_blocks<BlockOut>(graphs, workers, [&](size_t b) {
    BlockOut out;
    CounterRng rng(seed, (uint64_t(2) << 40) + b);
    TannerGraph g = sample_ensemble(spec, n, rng);
    int dim = g.n - rank_gf2(g.parity_matrix());
    if (dim > budget.max_log2_states) {
      out.skips = 1;
      return out;
    }
    RunningStat graph_stat;
    for (uint64_t k = 0; k < noise_per_graph; ++k) {
      LlrVector llr = sample_llr(noise, rng);
      GibbsResult res = gibbs_exact(g, llr, {}, budget);
      double mean_mag = 0;
      for (double m : res.marginal) mean_mag += m;
      graph_stat.add(mean_mag / g.n);
    }
    out.per_graph.add(graph_stat.mean);
    return out;
  });

  // Per-graph means are the iid units; noise draws within a graph share it.
  RunningStat over_graphs;
  uint64_t skips = 0;
  for (const auto& b : blocks) {
    over_graphs.merge(b.per_graph);
    skips += b.skips;
  }
  MapGexitResult res;
  res.graphs_used = over_graphs.n;
  res.noise_per_graph = noise_per_graph;
  res.capacity_skips = skips;
  res.estimate.value = 0.5 * (over_graphs.mean - 1.0);
  res.estimate.std_error = 0.5 * over_graphs.std_error();
  return res;
}

FdCheck gexit_fd_check(const TannerGraph& g, double eps, double delta_frac,
                       uint64_t samples, uint64_t seed, int workers,
                       const EnumBudget& budget) {
  double r = 1.0 / (eps * eps);
  double delta = delta_frac * r;
  double r_hi = r + 0.5 * delta, r_lo = r - 0.5 * delta;

  struct BlockOut {
    RunningStat fd, gexit, diff;
  };
  uint64_t blocks_count = (samples + kBlockSamples - 1) / kBlockSamples;
  auto blocks = run_blocks<BlockOut>(blocks_count, workers, [&](size_t b) {
    BlockOut out;
    uint64_t lo = b * kBlockSamples;
    uint64_t hi = std::min<uint64_t>(samples, lo + kBlockSamples);
    std::vector<double> z(g.n);
    for (uint64_t k = lo; k < hi; ++k) {
      CounterRng rng(seed, k);
      for (int v = 0; v < g.n; ++v) z[v] = rng.normal();
      auto entropy_at = [&](double rr) {
        LlrVector llr;
        llr.value.resize(g.n);
        llr.clamped.assign(g.n, 0);
        double sd = std::sqrt(rr);
        for (int v = 0; v < g.n; ++v) llr.value[v] = rr + sd * z[v];
        return gibbs_exact(g, llr, {}, budget);
      };
      double h_hi = entropy_at(r_hi).entropy / g.n;
      double h_lo = entropy_at(r_lo).entropy / g.n;
      GibbsResult center = entropy_at(r);
      double mean_mag = 0;
      for (double m : center.marginal) mean_mag += m;
      double fd = (h_hi - h_lo) / delta;
      double gx = 0.5 * (mean_mag / g.n - 1.0);
      out.fd.add(fd);
      out.gexit.add(gx);
      out.diff.add(fd - gx);
    }
    return out;
  });
  RunningStat fd, gx, diff;
  for (const auto& b : blocks) {
    fd.merge(b.fd);
    gx.merge(b.gexit);
    diff.merge(b.diff);
  }
  FdCheck out;
  out.fd = {fd.mean, fd.std_error()};
  out.gexit = {gx.mean, gx.std_error()};
  out.residual = std::abs(diff.mean);
  out.combined_se = diff.std_error();
  return out;
}

// ---------------------------------------------------------------------------

std::vector<BoundaryGaps> boundary_checks(const TannerGraph& g, int o,
                                          const std::vector<int>& depths,
                                          double eps, uint64_t samples,
                                          uint64_t seed, int workers,
                                          const EnumBudget& budget) {
  NoiseSpec noise = NoiseSpec::uniform(g.n, eps);
  struct BlockOut {
    std::vector<RunningStat> d1, d2;  // per depth
    std::vector<uint8_t> capacity;
  };
  uint64_t blocks_count = (samples + kBlockSamples - 1) / kBlockSamples;
  auto blocks = run_blocks<BlockOut>(blocks_count, workers, [&](size_t b) {
    BlockOut out;
    out.d1.resize(depths.size());
    out.d2.resize(depths.size());
    out.capacity.assign(depths.size(), 0);
    uint64_t lo = b * kBlockSamples;
    uint64_t hi = std::min<uint64_t>(samples, lo + kBlockSamples);
    for (uint64_t k = lo; k < hi; ++k) {
      CounterRng rng(seed, k);
      LlrVector llr = sample_llr(noise, rng);
      double full = gibbs_exact(g, llr, {}, budget).marginal[o];
      for (size_t q = 0; q < depths.size(); ++q) {
        try {
          double plus = neighborhood_gibbs(g, o, depths[q], llr,
                                           BoundaryCondition::plus_one, budget);
          double free_v = neighborhood_gibbs(
              g, o, depths[q], llr, BoundaryCondition::free_boundary, budget);
          out.d1[q].add(full - plus);
          out.d2[q].add(free_v - plus);
        } catch (const CapacityError&) {
          out.capacity[q] = 1;
        }
      }
    }
    return out;
  });

  std::vector<BoundaryGaps> rows(depths.size());
  std::vector<RunningStat> d1(depths.size()), d2(depths.size());
  for (const auto& b : blocks)
    for (size_t q = 0; q < depths.size(); ++q) {
      d1[q].merge(b.d1[q]);
      d2[q].merge(b.d2[q]);
      if (b.capacity[q]) rows[q].capacity = true;
    }
  for (size_t q = 0; q < depths.size(); ++q) {
    rows[q].depth = depths[q];
    rows[q].lemma1 = {std::abs(d1[q].mean), d1[q].std_error()};
    rows[q].lemma2 = {std::abs(d2[q].mean), d2[q].std_error()};
    rows[q].boundary_empty = neighborhood(g, o, depths[q]).boundary.empty();
  }
  return rows;
}

}  // namespace ldpclab
