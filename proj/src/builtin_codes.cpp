#include "ldpclab/builtin_codes.hpp"

#include <stdexcept>

#include "ldpclab/ensemble.hpp"
#include "ldpclab/gf2.hpp"
#include "ldpclab/rng.hpp"

namespace ldpclab {

namespace {

TannerGraph make_ring30() {
  // Vertices 0..14 on a ring; edge variables: id v     = (v, v+1 mod 15)
  //                                           id 15+v  = (v, v+2 mod 15)
  // Checks are the vertices; each has degree 4.
  const int verts = 15;
  std::vector<std::vector<int>> checks(verts);
  for (int v = 0; v < verts; ++v) {
    checks[v] = {(v + verts - 1) % verts,      // ring edge ending here
                 v,                            // ring edge starting here
                 15 + (v + verts - 2) % verts, // chord ending here
                 15 + v};                      // chord starting here
  }
  return graph_from_checks(30, std::move(checks));
}

bool degrees_are(const TannerGraph& g, int dv, int dc) {
  for (const auto& cs : g.var_to_checks)
    if (static_cast<int>(cs.size()) != dv) return false;
  for (const auto& vs : g.check_to_vars)
    if (static_cast<int>(vs.size()) != dc) return false;
  return true;
}

TannerGraph make_reg36_30() {
  // First clean configuration-model draw from a pinned seed: exact degrees
  // (no pair collapses happened) so the instance really is (3,6)-regular.
  auto spec = CodeEnsembleSpec::regular(3, 6);
  for (uint64_t stream = 0;; ++stream) {
    CounterRng rng(0xB5EC0DEull, stream);
    TannerGraph g = sample_ensemble(spec, 30, rng);
    if (degrees_are(g, 3, 6)) return g;
  }
}

TannerGraph make_poisson2_24() {
  // Pinned draw kept when the codeword count is comfortably enumerable and
  // the instance has the degree-0/1 variables that make its curve nontrivial.
  auto spec = CodeEnsembleSpec::poisson(2.0, 4);
  for (uint64_t stream = 0;; ++stream) {
    CounterRng rng(0xB5EC0DEull, stream);
    TannerGraph g = sample_ensemble(spec, 24, rng);
    int rank = rank_gf2(g.parity_matrix());
    int dim = g.n - rank;
    if (dim > 16) continue;
    bool has_deg0 = false, has_deg1 = false;
    for (const auto& cs : g.var_to_checks) {
      if (cs.empty()) has_deg0 = true;
      if (cs.size() == 1) has_deg1 = true;
    }
    if (has_deg0 && has_deg1) return g;
  }
}

}  // namespace

TannerGraph builtin_code(const std::string& name) {
  if (name == "spc3") return build_graph({{1, 1, 1}});
  if (name == "rep3") return build_graph({{1, 1, 0}, {0, 1, 1}});
  if (name == "ring30") return make_ring30();
  if (name == "reg36_30") {
    static const TannerGraph g = make_reg36_30();
    return g;
  }
  if (name == "poisson2_24") {
    static const TannerGraph g = make_poisson2_24();
    return g;
  }
  throw std::invalid_argument("unknown builtin code: " + name);
}

std::vector<std::string> builtin_names() {
  return {"spc3", "rep3", "ring30", "reg36_30", "poisson2_24"};
}

}  // namespace ldpclab
