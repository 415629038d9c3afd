#include "ldpclab/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ldpclab {

namespace {

void check_pmf(const std::vector<std::pair<int, double>>& pmf, const char* side) {
  if (pmf.empty()) throw std::invalid_argument(std::string(side) + ": empty degree distribution");
  double total = 0;
  for (auto [d, p] : pmf) {
    if (d < 0) throw std::invalid_argument(std::string(side) + ": negative degree");
    if (p < 0) throw std::invalid_argument(std::string(side) + ": negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument(std::string(side) + ": probabilities do not sum to 1");
}

int sample_pmf(const std::vector<std::pair<int, double>>& pmf, CounterRng& rng) {
  double u = rng.u01();
  double acc = 0;
  for (auto [d, p] : pmf) {
    acc += p;
    if (u <= acc) return d;
  }
  return pmf.back().first;
}

std::vector<std::pair<int, double>> edge_perspective(
    const std::vector<std::pair<int, double>>& pmf) {
  double mean = 0;
  for (auto [d, p] : pmf) mean += d * p;
  if (mean <= 0) throw std::invalid_argument("degree distribution has no edges");
  std::vector<std::pair<int, double>> out;
  for (auto [d, p] : pmf)
    if (d > 0) out.emplace_back(d, d * p / mean);
  return out;
}

}  // namespace

void CodeEnsembleSpec::validate() const {
  if (poisson_var) {
    if (poisson_mean <= 0) throw std::invalid_argument("poisson mean must be > 0");
  } else {
    check_pmf(var_degree, "variable side");
  }
  check_pmf(chk_degree, "check side");
}

std::vector<std::pair<int, double>> CodeEnsembleSpec::realized_var_degree() const {
  if (!poisson_var) return var_degree;
  // Truncate where the CDF passes 1 - 1e-12, then renormalize.
  std::vector<std::pair<int, double>> pmf;
  double p = std::exp(-poisson_mean);
  double cdf = 0;
  int d = 0;
  while (cdf < 1.0 - 1e-12) {
    pmf.emplace_back(d, p);
    cdf += p;
    ++d;
    p *= poisson_mean / d;
    if (d > 200) break;
  }
  double total = 0;
  for (auto& [deg, q] : pmf) total += q;
  for (auto& [deg, q] : pmf) q /= total;
  return pmf;
}

std::vector<std::pair<int, double>> CodeEnsembleSpec::var_edge_perspective() const {
  return edge_perspective(realized_var_degree());
}

std::vector<std::pair<int, double>> CodeEnsembleSpec::chk_edge_perspective() const {
  return edge_perspective(chk_degree);
}

double CodeEnsembleSpec::var_mean_degree() const {
  double mean = 0;
  for (auto [d, p] : realized_var_degree()) mean += d * p;
  return mean;
}

double CodeEnsembleSpec::chk_mean_degree() const {
  double mean = 0;
  for (auto [d, p] : chk_degree) mean += d * p;
  return mean;
}

CodeEnsembleSpec CodeEnsembleSpec::regular(int dv, int dc) {
  CodeEnsembleSpec s;
  s.var_degree = {{dv, 1.0}};
  s.chk_degree = {{dc, 1.0}};
  return s;
}

CodeEnsembleSpec CodeEnsembleSpec::poisson(double lambda, int check_degree) {
  CodeEnsembleSpec s;
  s.poisson_var = true;
  s.poisson_mean = lambda;
  s.chk_degree = {{check_degree, 1.0}};
  return s;
}

CodeEnsembleSpec CodeEnsembleSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "regular") {
    int dv = 0, dc = 0;
    char comma = 0;
    std::istringstream ss(args);
    if (!(ss >> dv >> comma >> dc) || comma != ',')
      throw std::invalid_argument("regular ensemble wants 'regular:dv,dc'");
    return regular(dv, dc);
  }
  if (kind == "poisson") {
    std::istringstream ss(args);
    double lambda = 0;
    if (!(ss >> lambda)) throw std::invalid_argument("poisson ensemble wants 'poisson:lambda[,dc]'");
    char comma = 0;
    int dc = 4;
    if (ss >> comma) {
      if (comma != ',' || !(ss >> dc))
        throw std::invalid_argument("poisson ensemble wants 'poisson:lambda[,dc]'");
    }
    return poisson(lambda, dc);
  }
  if (kind == "file") return load_file(args);
  throw std::invalid_argument("unknown ensemble spec: " + text);
}

CodeEnsembleSpec CodeEnsembleSpec::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open ensemble file: " + path);
  CodeEnsembleSpec s;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string side;
    if (!(ls >> side)) continue;
    auto fail = [&](const char* why) {
      std::ostringstream os;
      os << path << ":" << lineno << ": " << why;
      throw std::invalid_argument(os.str());
    };
    if (side != "var" && side != "chk") fail("expected 'var' or 'chk'");
    std::string token;
    if (!(ls >> token)) fail("missing degree");
    if (token == "poisson") {
      if (side != "var") fail("poisson profile is variable-side only");
      double lambda;
      if (!(ls >> lambda)) fail("missing poisson mean");
      s.poisson_var = true;
      s.poisson_mean = lambda;
      continue;
    }
    int degree = std::stoi(token);
    double fraction;
    if (!(ls >> fraction)) fail("missing fraction");
    if (side == "var")
      s.var_degree.emplace_back(degree, fraction);
    else
      s.chk_degree.emplace_back(degree, fraction);
  }
  s.validate();
  return s;
}

std::string CodeEnsembleSpec::describe() const {
  std::ostringstream os;
  if (poisson_var)
    os << "var=poisson(" << poisson_mean << ")";
  else {
    os << "var=";
    for (auto [d, p] : var_degree) os << d << ":" << p << ";";
  }
  os << " chk=";
  for (auto [d, p] : chk_degree) os << d << ":" << p << ";";
  return os.str();
}

TannerGraph sample_ensemble(const CodeEnsembleSpec& spec, int n, CounterRng& rng) {
  spec.validate();
  auto vpmf = spec.realized_var_degree();
  bool all_zero = true;
  for (auto [d, p] : vpmf)
    if (d > 0 && p > 0) all_zero = false;
  if (all_zero) throw std::invalid_argument("ensemble has no variable edges");

  const int max_attempts = 400;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<int> vdeg(n);
    long edges = 0;
    for (int v = 0; v < n; ++v) {
      vdeg[v] = sample_pmf(vpmf, rng);
      edges += vdeg[v];
    }
    if (edges == 0) continue;
    // Draw check degrees until the stub counts reconcile exactly; if this
    // draw overshoots, resample the whole graph.
    std::vector<int> cdeg;
    long remaining = edges;
    bool ok = true;
    while (remaining > 0) {
      int d = sample_pmf(spec.chk_degree, rng);
      if (d > remaining) {
        ok = false;
        break;
      }
      cdeg.push_back(d);
      remaining -= d;
    }
    if (!ok || remaining != 0) continue;

    std::vector<int> var_stubs;
    var_stubs.reserve(edges);
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < vdeg[v]; ++k) var_stubs.push_back(v);
    // Fisher-Yates with the counter rng.
    for (size_t k = var_stubs.size(); k > 1; --k)
      std::swap(var_stubs[k - 1], var_stubs[rng.below(k)]);

    int m = static_cast<int>(cdeg.size());
    std::vector<std::map<int, int>> mult(m);
    size_t stub = 0;
    for (int c = 0; c < m; ++c)
      for (int k = 0; k < cdeg[c]; ++k) ++mult[c][var_stubs[stub++]];

    std::vector<std::vector<int>> checks(m);
    for (int c = 0; c < m; ++c)
      for (auto [v, count] : mult[c])
        if (count % 2 == 1) checks[c].push_back(v);  // doubles collapse in pairs
    return graph_from_checks(n, std::move(checks));
  }
  throw std::invalid_argument("ensemble spec cannot balance edge counts");
}

}  // namespace ldpclab
