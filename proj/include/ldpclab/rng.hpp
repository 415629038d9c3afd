#pragma once

#include <array>
#include <cstdint>

namespace ldpclab {

// One round-10 Philox4x32 block. Exposed separately so the known-answer
// vectors can be checked directly.
std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> ctr,
                                      std::array<uint32_t, 2> key);

// Counter-based generator: the state is (seed, stream, counter) and nothing
// else, so a draw at a given position is reproducible without replaying the
// sequence. Independent streams are obtained by changing `stream`; Monte
// Carlo code assigns one stream per sample or per block.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed, uint64_t stream = 0);

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }
  uint64_t counter() const { return counter_; }

  uint32_t next_u32();
  uint64_t next_u64();

  // Uniform on (0,1].
  double u01();
  // Standard normal via Box-Muller; pairs are cached.
  double normal();
  // Uniform integer in [0, bound), bound >= 1.
  uint64_t below(uint64_t bound);

 private:
  void refill();

  uint64_t seed_;
  uint64_t stream_;
  uint64_t counter_;
  std::array<uint32_t, 4> block_{};
  int pos_;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace ldpclab
