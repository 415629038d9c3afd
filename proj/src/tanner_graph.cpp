#include "ldpclab/tanner_graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ldpclab {

Gf2Matrix TannerGraph::parity_matrix() const {
  Gf2Matrix h(m, n);
  for (int c = 0; c < m; ++c)
    for (int v : check_to_vars[c]) h.set(c, v, true);
  return h;
}

TannerGraph build_graph(const std::vector<std::vector<int>>& h) {
  int m = static_cast<int>(h.size());
  int n = m == 0 ? 0 : static_cast<int>(h[0].size());
  std::vector<std::vector<int>> checks(m);
  for (int c = 0; c < m; ++c) {
    if (static_cast<int>(h[c].size()) != n)
      throw std::invalid_argument("ragged parity check matrix");
    for (int v = 0; v < n; ++v) {
      if (h[c][v] == 0) continue;
      if (h[c][v] != 1)
        throw std::invalid_argument("parity check entry > 1: repeated edge");
      checks[c].push_back(v);
    }
  }
  return graph_from_checks(n, std::move(checks));
}

TannerGraph graph_from_checks(int n, std::vector<std::vector<int>> checks) {
  TannerGraph g;
  g.n = n;
  g.m = static_cast<int>(checks.size());
  g.var_to_checks.assign(n, {});
  for (int c = 0; c < g.m; ++c) {
    auto& vars = checks[c];
    std::sort(vars.begin(), vars.end());
    for (size_t k = 0; k < vars.size(); ++k) {
      int v = vars[k];
      if (v < 0 || v >= n) throw std::invalid_argument("variable index out of range");
      if (k > 0 && vars[k] == vars[k - 1])
        throw std::invalid_argument("repeated edge in check");
      g.var_to_checks[v].push_back(c);
    }
    g.dr_max = std::max(g.dr_max, static_cast<int>(vars.size()));
  }
  g.check_to_vars = std::move(checks);
  for (const auto& cs : g.var_to_checks)
    g.dl_max = std::max(g.dl_max, static_cast<int>(cs.size()));
  return g;
}

std::vector<int> variable_distances(const TannerGraph& g, int origin) {
  std::vector<int> dv(g.n, -1), dc(g.m, -1);
  dv[origin] = 0;
  std::deque<std::pair<int, bool>> q;  // (index, is_check)
  q.emplace_back(origin, false);
  while (!q.empty()) {
    auto [idx, is_check] = q.front();
    q.pop_front();
    if (is_check) {
      for (int v : g.check_to_vars[idx])
        if (dv[v] < 0) {
          dv[v] = dc[idx] + 1;
          q.emplace_back(v, false);
        }
    } else {
      for (int c : g.var_to_checks[idx])
        if (dc[c] < 0) {
          dc[c] = dv[idx] + 1;
          q.emplace_back(c, true);
        }
    }
  }
  return dv;
}

std::optional<int> graph_distance(const TannerGraph& g, int i, int j) {
  if (i == j) return 0;
  auto dv = variable_distances(g, i);
  if (dv[j] < 0) return std::nullopt;
  return dv[j];
}

Neighborhood neighborhood(const TannerGraph& g, int o, int d) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("depth must be even and >= 2");
  std::vector<int> dv(g.n, -1), dc(g.m, -1);
  dv[o] = 0;
  std::deque<std::pair<int, bool>> q;
  q.emplace_back(o, false);
  while (!q.empty()) {
    auto [idx, is_check] = q.front();
    q.pop_front();
    if (is_check) {
      if (dc[idx] >= d - 1) continue;
      for (int v : g.check_to_vars[idx])
        if (dv[v] < 0) {
          dv[v] = dc[idx] + 1;
          q.emplace_back(v, false);
        }
    } else {
      if (dv[idx] >= d - 1) continue;  // checks live at odd depth <= d-1
      for (int c : g.var_to_checks[idx])
        if (dc[c] < 0) {
          dc[c] = dv[idx] + 1;
          q.emplace_back(c, true);
        }
    }
  }
  Neighborhood nb;
  nb.root = o;
  nb.depth = d;
  for (int v = 0; v < g.n; ++v) {
    if (dv[v] < 0 || dv[v] > d) continue;
    nb.variables.push_back(v);
    if (dv[v] == d) nb.boundary.push_back(v);
  }
  size_t edges = 0;
  for (int c = 0; c < g.m; ++c) {
    if (dc[c] < 0 || dc[c] > d - 1) continue;
    nb.checks.push_back(c);
    edges += g.check_to_vars[c].size();
  }
  // Connected by construction, so tree <=> |E| = |V| - 1.
  nb.is_tree = edges + 1 == nb.variables.size() + nb.checks.size();
  return nb;
}

Subgraph induced_subgraph(const TannerGraph& g,
                          const std::vector<int>& variables,
                          const std::vector<int>& checks) {
  Subgraph s;
  s.var_of = variables;
  s.check_of = checks;
  s.sub_var_of.assign(g.n, -1);
  for (size_t k = 0; k < variables.size(); ++k)
    s.sub_var_of[variables[k]] = static_cast<int>(k);
  std::vector<std::vector<int>> sub_checks;
  sub_checks.reserve(checks.size());
  for (int c : checks) {
    std::vector<int> vars;
    for (int v : g.check_to_vars[c]) {
      int sv = s.sub_var_of[v];
      if (sv >= 0) vars.push_back(sv);
    }
    sub_checks.push_back(std::move(vars));
  }
  s.graph = graph_from_checks(static_cast<int>(variables.size()),
                              std::move(sub_checks));
  return s;
}

}  // namespace ldpclab
