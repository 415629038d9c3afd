#pragma once

#include <string>
#include <vector>

#include "ldpclab/tanner_graph.hpp"

namespace ldpclab {

// Benchmark codes, all sized so primal or dual enumeration stays small.
//   spc3        single parity check on 3 bits
//   rep3        repetition chain x1+x2, x2+x3
//   ring30      cycle code of the 15-vertex ring with distance-1 and
//               distance-2 chords: 30 edge variables (degree 2), 15 vertex
//               checks (degree 4), 2^16 codewords
//   reg36_30    fixed (3,6)-regular instance, n=30 (pinned internal seed)
//   poisson2_24 fixed Poisson(2) variable-degree instance, n=24, check
//               degree 4, contains degree-0/1 variables (pinned seed)
TannerGraph builtin_code(const std::string& name);

std::vector<std::string> builtin_names();

}  // namespace ldpclab
