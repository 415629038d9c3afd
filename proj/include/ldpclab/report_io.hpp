#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ldpclab/experiments.hpp"

namespace ldpclab {

// Doubles print as %.17g so reports round-trip bit-exactly.
std::string format_double(double v);

nlohmann::json manifest_json(const RunManifest& m);

void write_decay_csv(const std::string& path, const DecayReport& rep);
nlohmann::json decay_json(const DecayReport& rep);

struct GexitRow {
  double eps2 = 0.0;
  double map_gexit = 0.0, map_err = 0.0;
  double de_gexit = 0.0, de_err = 0.0;
  double fd_value = 0.0, fd_err = 0.0;
};

void write_gexit_csv(const std::string& path, const std::vector<GexitRow>& rows);
nlohmann::json gexit_json(const std::vector<GexitRow>& rows,
                          const RunManifest& manifest);

void write_json_file(const std::string& path, const nlohmann::json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ldpclab
