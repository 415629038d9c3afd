#pragma once

#include <vector>

#include "ldpclab/channel.hpp"
#include "ldpclab/tanner_graph.hpp"

namespace ldpclab {

// Edge-indexed sum-product messages in half-LLR units. Messages stay within
// [-clamp, clamp]; tanh saturates below double resolution well before 30, so
// the clamp never costs accuracy at the magnitudes the tests exercise.
struct MessageState {
  std::vector<double> var_to_check;
  std::vector<double> check_to_var;
  int iterations = 0;
};

struct BpResult {
  std::vector<double> soft;       // tanh(l_i + Delta_i)
  std::vector<double> extrinsic;  // Delta_i
  MessageState state;
};

// Flooding sum-product for `iterations` full variable/check rounds. One
// iteration corresponds to graph depth 2. Clamped (perfect) bits enter as
// fixed messages at +clamp.
BpResult bp_decode(const TannerGraph& g, const LlrVector& llr, int iterations,
                   double clamp = 30.0);

}  // namespace ldpclab
