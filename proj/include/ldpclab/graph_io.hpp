#pragma once

#include <iosfwd>
#include <string>

#include "ldpclab/tanner_graph.hpp"

namespace ldpclab {

// MacKay "alist" sparse exchange format (1-based indices, zero padding
// tolerated on read, written padded).
TannerGraph read_alist(std::istream& in);
void write_alist(std::ostream& out, const TannerGraph& g);

// Minimal text format: "n m" header, then one line per check listing its
// variable indices (0-based). Blank lines and '#' comments are skipped.
TannerGraph read_checks(std::istream& in);
void write_checks(std::ostream& out, const TannerGraph& g);

// Dispatch on extension: ".alist" -> alist, anything else -> checks format.
TannerGraph load_code_file(const std::string& path);
void save_code_file(const std::string& path, const TannerGraph& g);

}  // namespace ldpclab
