#include "ldpclab/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ldpclab {

namespace {

int read_int(std::istream& in, const char* what) {
  int v;
  if (!(in >> v)) throw std::runtime_error(std::string("alist: missing ") + what);
  return v;
}

}  // namespace

TannerGraph read_alist(std::istream& in) {
  int n = read_int(in, "n");
  int m = read_int(in, "m");
  if (n < 0 || m < 0) throw std::runtime_error("alist: negative size");
  int dl = read_int(in, "max var degree");
  int dr = read_int(in, "max check degree");
  std::vector<int> vdeg(n), cdeg(m);
  for (int v = 0; v < n; ++v) vdeg[v] = read_int(in, "var degree");
  for (int c = 0; c < m; ++c) cdeg[c] = read_int(in, "check degree");
  // Variable-side lists: consumed for format compliance, padding allowed.
  for (int v = 0; v < n; ++v) {
    int seen = 0;
    for (int k = 0; k < dl; ++k) {
      int idx;
      if (!(in >> idx)) {
        if (seen >= vdeg[v]) break;
        throw std::runtime_error("alist: truncated variable list");
      }
      if (idx != 0) ++seen;
      if (seen == vdeg[v] && k + 1 >= dl) break;
    }
  }
  std::vector<std::vector<int>> checks(m);
  for (int c = 0; c < m; ++c) {
    for (int k = 0; k < dr; ++k) {
      int idx;
      if (!(in >> idx)) {
        if (static_cast<int>(checks[c].size()) >= cdeg[c]) break;
        throw std::runtime_error("alist: truncated check list");
      }
      if (idx == 0) continue;  // padding
      if (idx < 1 || idx > n) throw std::runtime_error("alist: index out of range");
      checks[c].push_back(idx - 1);
    }
    if (static_cast<int>(checks[c].size()) != cdeg[c])
      throw std::runtime_error("alist: check degree mismatch");
  }
  return graph_from_checks(n, std::move(checks));
}

void write_alist(std::ostream& out, const TannerGraph& g) {
  out << g.n << " " << g.m << "\n";
  out << g.dl_max << " " << g.dr_max << "\n";
  for (int v = 0; v < g.n; ++v)
    out << g.var_to_checks[v].size() << (v + 1 < g.n ? " " : "\n");
  if (g.n == 0) out << "\n";
  for (int c = 0; c < g.m; ++c)
    out << g.check_to_vars[c].size() << (c + 1 < g.m ? " " : "\n");
  if (g.m == 0) out << "\n";
  for (int v = 0; v < g.n; ++v) {
    for (int k = 0; k < g.dl_max; ++k) {
      int idx = k < static_cast<int>(g.var_to_checks[v].size())
                    ? g.var_to_checks[v][k] + 1
                    : 0;
      out << idx << (k + 1 < g.dl_max ? " " : "\n");
    }
    if (g.dl_max == 0) out << "\n";
  }
  for (int c = 0; c < g.m; ++c) {
    for (int k = 0; k < g.dr_max; ++k) {
      int idx = k < static_cast<int>(g.check_to_vars[c].size())
                    ? g.check_to_vars[c][k] + 1
                    : 0;
      out << idx << (k + 1 < g.dr_max ? " " : "\n");
    }
    if (g.dr_max == 0) out << "\n";
  }
}

TannerGraph read_checks(std::istream& in) {
  std::string line;
  int n = -1, m = -1;
  std::vector<std::vector<int>> checks;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (ls >> n >> m) {
        if (n < 0 || m < 0) throw std::runtime_error("checks: negative size");
        continue;
      }
      continue;  // blank/comment before header
    }
    std::vector<int> vars;
    int v;
    while (ls >> v) vars.push_back(v);
    if (!ls.eof()) throw std::runtime_error("checks: non-integer token");
    if (vars.empty() && line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    checks.push_back(std::move(vars));
  }
  if (n < 0) throw std::runtime_error("checks: missing header");
  if (static_cast<int>(checks.size()) != m)
    throw std::runtime_error("checks: check count mismatch");
  return graph_from_checks(n, std::move(checks));
}

void write_checks(std::ostream& out, const TannerGraph& g) {
  out << g.n << " " << g.m << "\n";
  for (int c = 0; c < g.m; ++c) {
    for (size_t k = 0; k < g.check_to_vars[c].size(); ++k)
      out << g.check_to_vars[c][k]
          << (k + 1 < g.check_to_vars[c].size() ? " " : "");
    out << "\n";
  }
}

namespace {
bool has_suffix(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}
}  // namespace

TannerGraph load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code file: " + path);
  if (has_suffix(path, ".alist")) return read_alist(in);
  return read_checks(in);
}

void save_code_file(const std::string& path, const TannerGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write code file: " + path);
  if (has_suffix(path, ".alist"))
    write_alist(out, g);
  else
    write_checks(out, g);
}

}  // namespace ldpclab
