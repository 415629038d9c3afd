#include <doctest.h>

#include <sstream>

#include "ldpclab/builtin_codes.hpp"
#include "ldpclab/graph_io.hpp"

using namespace ldpclab;

TEST_CASE("alist round trip") {
  auto g = builtin_code("ring30");
  std::stringstream ss;
  write_alist(ss, g);
  auto h = read_alist(ss);
  CHECK(h.n == g.n);
  CHECK(h.m == g.m);
  CHECK(h.check_to_vars == g.check_to_vars);
  CHECK(h.var_to_checks == g.var_to_checks);
}

TEST_CASE("checks format round trip") {
  auto g = builtin_code("poisson2_24");
  std::stringstream ss;
  write_checks(ss, g);
  auto h = read_checks(ss);
  CHECK(h.check_to_vars == g.check_to_vars);
}

TEST_CASE("checks format accepts comments and blank lines") {
  std::stringstream ss("# toy\n\n3 2\n0 1\n1 2  # chain\n");
  auto g = read_checks(ss);
  CHECK(g.n == 3);
  CHECK(g.m == 2);
  CHECK(g.check_to_vars[1] == std::vector<int>{1, 2});
}

TEST_CASE("malformed inputs are rejected") {
  std::stringstream missing("3 2\n0 1\n");
  CHECK_THROWS(read_checks(missing));
  std::stringstream bad_index("2 1\n0 5\n");
  CHECK_THROWS(read_checks(bad_index));
}

TEST_CASE("alist with empty rows survives the round trip") {
  auto g = graph_from_checks(4, {{0, 1}, {}, {2, 3}});
  std::stringstream ss;
  write_alist(ss, g);
  auto h = read_alist(ss);
  CHECK(h.check_to_vars == g.check_to_vars);
}
