#include <sstream>

#include "doctest.h"
#include "msts/cnf.hpp"
#include "msts/errors.hpp"

TEST_CASE("dimacs parsing") {
  std::istringstream in(
      "c example\n"
      "p cnf 3 2\n"
      "1 -2 0\n"
      "-3 1 0\n");
  auto f = msts::parse_cnf2(in);
  CHECK(f.num_vars == 3);
  REQUIRE(f.num_clauses() == 2);
  CHECK(f.clauses[0][0].var == 1);
  CHECK(f.clauses[0][0].positive);
  CHECK(f.clauses[0][1].var == 2);
  CHECK_FALSE(f.clauses[0][1].positive);
  CHECK_FALSE(f.clauses[1][0].positive);
  CHECK(f.clauses[1][0].var == 3);
}

TEST_CASE("dimacs rejects malformed input") {
  std::istringstream three("p cnf 3 1\n1 2 3 0\n");
  CHECK_THROWS_AS(msts::parse_cnf2(three), msts::ParseError);
  std::istringstream one("p cnf 2 1\n1 0\n");
  CHECK_THROWS_AS(msts::parse_cnf2(one), msts::ParseError);
  std::istringstream range("p cnf 2 1\n1 3 0\n");
  CHECK_THROWS_AS(msts::parse_cnf2(range), msts::ParseError);
  std::istringstream missing("p cnf 2 2\n1 2 0\n");
  CHECK_THROWS_AS(msts::parse_cnf2(missing), msts::ParseError);
  std::istringstream nohdr("1 2 0\n");
  CHECK_THROWS_AS(msts::parse_cnf2(nohdr), msts::ParseError);
}

TEST_CASE("satisfied_count") {
  std::istringstream in("p cnf 2 3\n1 2 0\n-1 2 0\n-1 -2 0\n");
  auto f = msts::parse_cnf2(in);
  CHECK(msts::satisfied_count(f, {true, true}) == 2);
  CHECK(msts::satisfied_count(f, {false, true}) == 3);
  CHECK(msts::satisfied_count(f, {false, false}) == 2);
}
