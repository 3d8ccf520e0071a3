#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "hgnoise/csv.hpp"
#include "hgnoise/qudit_state.hpp"
#include "hgnoise/verify.hpp"

using namespace hgnoise;

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(15.0) == "15");
  CHECK(format_number(1.0 / 3) == "0.333333333333");
  CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("number parsing") {
  CHECK(parse_number("0.25") == 0.25);
  CHECK(parse_number(" -3e2 ") == -300);
  CHECK_THROWS_AS(parse_number(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_number("1.5x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_number("abc"), std::invalid_argument);
}

TEST_CASE("split keeps empty fields") {
  const auto parts = split("a,,b,", ',');
  REQUIRE(parts.size() == 4);
  CHECK(parts[0] == "a");
  CHECK(parts[1].empty());
  CHECK(parts[2] == "b");
  CHECK(parts[3].empty());
}

TEST_CASE("state round trip is bit exact") {
  const auto g = hypergraph_state(worked_example_hypergraph());
  std::stringstream io;
  write_state_csv(io, g);
  const auto back = read_state_csv(io);
  REQUIRE(back.dim() == g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) CHECK(back[i] == g[i]);

  const StateVector phased({Complex(0.6, 0.0), Complex(0.0, 0.8)});
  std::stringstream io2;
  write_state_csv(io2, phased);
  CHECK(read_state_csv(io2)[1] == Complex(0.0, 0.8));
}

TEST_CASE("matrix round trip is bit exact") {
  Matrix m(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = Complex(1.0 / (1.0 + i + 3 * j), std::sin(i - 2.0 * j));
  std::stringstream io;
  write_matrix_csv(io, m);
  CHECK(read_matrix_csv(io) == m);
}

TEST_CASE("malformed csv") {
  std::stringstream one("0.5\n");
  CHECK_THROWS_AS(read_state_csv(one), std::invalid_argument);
  std::stringstream ragged("1,0,0,0\n0,0\n");
  CHECK_THROWS_AS(read_matrix_csv(ragged), std::invalid_argument);
  std::stringstream bad("1,x\n");
  CHECK_THROWS_AS(read_state_csv(bad), std::invalid_argument);
  std::stringstream unnormalized("1,0\n1,0\n");
  CHECK_THROWS_AS(read_state_csv(unnormalized), DensityError);
}
