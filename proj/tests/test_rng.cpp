#include <doctest.h>

#include <cmath>

#include "ldpclab/rng.hpp"

using namespace ldpclab;

TEST_CASE("philox4x32-10 known answers") {
  // Reference vectors from the Random123 known-answer set.
  auto r0 = philox4x32_10({0, 0, 0, 0}, {0, 0});
  CHECK(r0[0] == 0x6627e8d5u);
  CHECK(r0[1] == 0xe169c58du);
  CHECK(r0[2] == 0xbc57ac4cu);
  CHECK(r0[3] == 0x9b00dbd8u);

  auto r1 = philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                          {0xffffffffu, 0xffffffffu});
  CHECK(r1[0] == 0x408f276du);
  CHECK(r1[1] == 0x41c83b0eu);
  CHECK(r1[2] == 0xa20bc7c6u);
  CHECK(r1[3] == 0x6d5451fdu);

  auto r2 = philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                          {0xa4093822u, 0x299f31d0u});
  CHECK(r2[0] == 0xd16cfe09u);
  CHECK(r2[1] == 0x94fdccebu);
  CHECK(r2[2] == 0x5001e420u);
  CHECK(r2[3] == 0x24126ea1u);
}

TEST_CASE("streams are reproducible and independent") {
  CounterRng a(42, 7), b(42, 7), c(42, 8);
  for (int k = 0; k < 100; ++k) {
    uint64_t va = a.next_u64();
    CHECK(va == b.next_u64());
    CHECK(va != c.next_u64());  // collisions would be astronomically unlikely
  }
}

TEST_CASE("u01 lands in (0,1] and has the right mean") {
  CounterRng rng(7, 0);
  double sum = 0;
  const int n = 200000;
  for (int k = 0; k < n; ++k) {
    double u = rng.u01();
    REQUIRE(u > 0.0);
    REQUIRE(u <= 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / n - 0.5) < 0.005);
}

TEST_CASE("normal moments") {
  CounterRng rng(11, 3);
  double sum = 0, sumsq = 0;
  const int n = 400000;
  for (int k = 0; k < n; ++k) {
    double z = rng.normal();
    sum += z;
    sumsq += z * z;
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(std::abs(sumsq / n - 1.0) < 0.02);
}

TEST_CASE("below is uniform over small ranges") {
  CounterRng rng(3, 1);
  int counts[5] = {0, 0, 0, 0, 0};
  const int n = 100000;
  for (int k = 0; k < n; ++k) ++counts[rng.below(5)];
  for (int c : counts) CHECK(std::abs(c - n / 5) < 800);
}
