#include "ldpclab/bp.hpp"

#include <algorithm>
#include <cmath>

namespace ldpclab {

namespace {

double safe_atanh(double x, double clamp) {
  if (x >= 1.0) return clamp;
  if (x <= -1.0) return -clamp;
  return std::clamp(std::atanh(x), -clamp, clamp);
}

}  // namespace

BpResult bp_decode(const TannerGraph& g, const LlrVector& llr, int iterations,
                   double clamp) {
  // Edge layout: grouped by check, with per-variable index lists.
  std::vector<int> edge_var;
  std::vector<std::vector<int>> check_edges(g.m), var_edges(g.n);
  for (int c = 0; c < g.m; ++c)
    for (int v : g.check_to_vars[c]) {
      int e = static_cast<int>(edge_var.size());
      edge_var.push_back(v);
      check_edges[c].push_back(e);
      var_edges[v].push_back(e);
    }
  size_t edges = edge_var.size();

  std::vector<double> field(g.n);
  for (int v = 0; v < g.n; ++v)
    field[v] = llr.clamped[v] ? clamp : std::clamp(llr.value[v], -clamp, clamp);

  MessageState st;
  st.var_to_check.resize(edges);
  st.check_to_var.assign(edges, 0.0);
  for (size_t e = 0; e < edges; ++e) st.var_to_check[e] = field[edge_var[e]];

  for (int it = 0; it < iterations; ++it) {
    for (int c = 0; c < g.m; ++c) {
      const auto& es = check_edges[c];
      int deg = static_cast<int>(es.size());
      // Forward/backward partial products give all leave-one-out values.
      std::vector<double> t(deg);
      for (int k = 0; k < deg; ++k) t[k] = std::tanh(st.var_to_check[es[k]]);
      std::vector<double> fwd(deg + 1, 1.0), bwd(deg + 1, 1.0);
      for (int k = 0; k < deg; ++k) fwd[k + 1] = fwd[k] * t[k];
      for (int k = deg - 1; k >= 0; --k) bwd[k] = bwd[k + 1] * t[k];
      for (int k = 0; k < deg; ++k)
        st.check_to_var[es[k]] = safe_atanh(fwd[k] * bwd[k + 1], clamp);
    }
    for (int v = 0; v < g.n; ++v) {
      double total = field[v];
      for (int e : var_edges[v]) total += st.check_to_var[e];
      for (int e : var_edges[v])
        st.var_to_check[e] =
            std::clamp(total - st.check_to_var[e], -clamp, clamp);
    }
    ++st.iterations;
  }

  BpResult out;
  out.extrinsic.resize(g.n);
  out.soft.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    double delta = 0.0;
    for (int e : var_edges[v]) delta += st.check_to_var[e];
    out.extrinsic[v] = delta;
    out.soft[v] = std::tanh(field[v] + delta);
  }
  out.state = std::move(st);
  return out;
}

}  // namespace ldpclab
