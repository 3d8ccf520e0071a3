#include <string>

#include "doctest.h"
#include "hgnoise/hypergraph.hpp"
#include "oracle.hpp"

using namespace hgnoise;

namespace {

std::string signs_of(const Hypergraph& h) {
  std::string out;
  for (int s : sign_vector(h)) out += s > 0 ? '+' : '-';
  return out;
}

Hypergraph four_qubit() { return Hypergraph(4, {{0, 3}, {1, 2}, {0, 2, 3}, {1, 2, 3}}); }

}  // namespace

TEST_CASE("parse the four-qubit example") {
  const auto h = parse_hypergraph("4\n0 3\n1 2\n0 2 3\n1 2 3\n");
  CHECK(h.vertex_count() == 4);
  CHECK(h.dimension() == 16);
  CHECK(h == four_qubit());
  CHECK(h.edges() == std::vector<Edge>{{0, 2, 3}, {0, 3}, {1, 2}, {1, 2, 3}});
}

TEST_CASE("parse minimal and commented input") {
  CHECK(parse_hypergraph("1\n0") == Hypergraph(1, {{0}}));
  CHECK(parse_hypergraph("# comment\n\n  3 \n# edges\n2 0\n\n") == Hypergraph(3, {{0, 2}}));
  CHECK(parse_hypergraph("2\n") == Hypergraph(2, {}));
  // edge order and vertex order inside an edge do not matter
  CHECK(parse_hypergraph("3\n2 1\n0 1") == parse_hypergraph("3\n0 1\n1 2"));
}

TEST_CASE("parse errors carry the line") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_hypergraph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("3\n0 1\n0 1") == 3);
  CHECK(line_of("3\n1 0\n0 1") == 3);
  CHECK(line_of("2\n0 2") == 2);
  CHECK(line_of("2\n0 0") == 2);
  CHECK(line_of("2\n0 x") == 2);
  CHECK(line_of("2\n-1") == 2);
  CHECK(line_of("0\n") == 1);
  CHECK(line_of("13\n") == 1);
  CHECK(line_of("2 3\n") == 1);
  CHECK(line_of("# only comments\n\n") != 0);
  CHECK(line_of("") != 0);

  try {
    parse_hypergraph("3\n0 1\n1 2\n1 0\n");
    FAIL("duplicate accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("constructor invariants") {
  CHECK_THROWS_AS(Hypergraph(0, {}), HypergraphError);
  CHECK_THROWS_AS(Hypergraph(13, {}), HypergraphError);
  CHECK_NOTHROW(Hypergraph(12, {{0, 11}}));
  CHECK_THROWS_AS(Hypergraph(2, {{}}), HypergraphError);
  CHECK_THROWS_AS(Hypergraph(2, {{0, 0}}), HypergraphError);
  CHECK_THROWS_AS(Hypergraph(2, {{2}}), HypergraphError);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 1}, {1, 0}}), HypergraphError);
}

TEST_CASE("format round-trips") {
  const auto h = four_qubit();
  CHECK(parse_hypergraph(format_hypergraph(h)) == h);
  const Hypergraph empty(3, {});
  CHECK(parse_hypergraph(format_hypergraph(empty)) == empty);
}

TEST_CASE("boolean function") {
  const auto h = four_qubit();
  CHECK(boolean_g(h, 6) == 1);
  CHECK(boolean_g(h, 0) == 0);
  CHECK_THROWS_AS(boolean_g(h, 16), std::out_of_range);
  const Hypergraph none(3, {});
  for (std::size_t i = 0; i < 8; ++i) CHECK(boolean_g(none, i) == 0);
}

TEST_CASE("vertex 0 is the most significant bit") {
  const Hypergraph h(3, {{0}});
  CHECK(h.vertex_bit(0) == 4);
  CHECK(h.vertex_bit(2) == 1);
  CHECK(signs_of(h) == "++++----");
}

TEST_CASE("sign vectors") {
  CHECK(signs_of(four_qubit()) == "++++++-++-+++--+");
  CHECK(signs_of(Hypergraph(2, {})) == "++++");
  CHECK(signs_of(Hypergraph(2, {{0, 1}})) == "+++-");
}

TEST_CASE("sign vector matches the controlled-Z circuit") {
  for (const auto& h : {four_qubit(), Hypergraph(3, {{0}, {1, 2}, {0, 1, 2}}), Hypergraph(5, {{0, 4}, {1, 2, 3}})}) {
    const auto psi = oracle::circuit_state(h);
    const auto signs = sign_vector(h);
    REQUIRE(psi.size() == signs.size());
    for (std::size_t i = 0; i < psi.size(); ++i) CHECK((psi[i].real() > 0 ? 1 : -1) == signs[i]);
  }
}
