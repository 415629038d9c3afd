#include "ldpclab/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ldpclab {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json manifest_json(const RunManifest& m) {
  nlohmann::json j;
  j["command"] = m.command;
  j["master_seed"] = m.master_seed;
  j["workers"] = m.workers;
  j["version"] = m.version;
  j["config_hash"] = m.config_hash;
  nlohmann::json params;
  for (const auto& [k, v] : m.params) params[k] = v;
  j["params"] = params;
  j["wall_seconds"] = m.wall_seconds;
  return j;
}

void write_decay_csv(const std::string& path, const DecayReport& rep) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "i,j,dist,c_p,stderr,n_samples\n";
  for (const auto& p : rep.pairs)
    out << p.i << "," << p.j << "," << p.dist << "," << format_double(p.mean)
        << "," << format_double(p.se) << "," << p.samples << "\n";
}

nlohmann::json decay_json(const DecayReport& rep) {
  nlohmann::json j;
  j["code"] = rep.code_id;
  j["eps2"] = rep.eps2;
  j["samples"] = rep.samples;
  j["noise_floor"] = rep.noise_floor;
  j["fully_decayed"] = rep.fully_decayed;
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : rep.pairs)
    pairs.push_back({{"i", p.i},
                     {"j", p.j},
                     {"dist", p.dist},
                     {"c_p", p.mean},
                     {"stderr", p.se},
                     {"n_samples", p.samples}});
  j["pairs"] = pairs;
  nlohmann::json dists = nlohmann::json::array();
  for (const auto& d : rep.distances)
    dists.push_back({{"dist", d.dist},
                     {"n_pairs", d.n_pairs},
                     {"mean", d.mean},
                     {"stderr", d.se},
                     {"above_floor", d.above_floor},
                     {"in_fit", d.in_fit}});
  j["distances"] = dists;
  j["fit"] = {{"ok", rep.fit.ok},
              {"slope", rep.fit.slope},
              {"slope_stderr", rep.fit.slope_se},
              {"intercept", rep.fit.intercept},
              {"points", rep.fit.points},
              {"fallback", rep.fit_fallback}};
  j["manifest"] = manifest_json(rep.manifest);
  return j;
}

void write_gexit_csv(const std::string& path, const std::vector<GexitRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "eps2,map_gexit,map_err,de_gexit,de_err,fd_value,fd_err\n";
  for (const auto& r : rows)
    out << format_double(r.eps2) << "," << format_double(r.map_gexit) << ","
        << format_double(r.map_err) << "," << format_double(r.de_gexit) << ","
        << format_double(r.de_err) << "," << format_double(r.fd_value) << ","
        << format_double(r.fd_err) << "\n";
}

nlohmann::json gexit_json(const std::vector<GexitRow>& rows,
                          const RunManifest& manifest) {
  nlohmann::json j;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"eps2", r.eps2},
                   {"map_gexit", r.map_gexit},
                   {"map_err", r.map_err},
                   {"de_gexit", r.de_gexit},
                   {"de_err", r.de_err},
                   {"fd_value", r.fd_value},
                   {"fd_err", r.fd_err}});
  j["rows"] = arr;
  j["manifest"] = manifest_json(manifest);
  return j;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace ldpclab
