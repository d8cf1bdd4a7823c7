#include "doctest.h"

#include <sstream>

#include "alphax/enumerate.hpp"
#include "alphax/errors.hpp"
#include "alphax/graph6.hpp"
#include "oracles.hpp"

using namespace alphax;

TEST_CASE("hand-decoded five-vertex example") {
  // 'D' = 5 vertices; "?{" = 000000 111100 over the upper triangle in
  // column order: bits 6..9 are (0,4),(1,4),(2,4),(3,4).
  const Graph g = parse_graph6("D?{");
  CHECK(g.order() == 5);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(write_graph6(g) == "D?{");
}

TEST_CASE("single vertex") {
  CHECK(write_graph6(make_empty(1)) == "@");
  CHECK(parse_graph6("@").order() == 1);
  CHECK(write_graph6(make_empty(0)) == "?");
}

TEST_CASE("header and newline are accepted") {
  CHECK(parse_graph6(">>graph6<<D?{\n") == parse_graph6("D?{"));
  CHECK(parse_graph6("D?{\r\n") == parse_graph6("D?{"));
}

TEST_CASE("malformed input reports the byte offset") {
  SUBCASE("corrupted trailing byte") {
    try {
      parse_graph6("D?\x7f");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 2);
    }
  }
  SUBCASE("truncated body") { CHECK_THROWS_AS(parse_graph6("D?"), ParseError); }
  SUBCASE("trailing garbage") { CHECK_THROWS_AS(parse_graph6("D?{?"), ParseError); }
  SUBCASE("nonzero padding") {
    // n = 3 uses 3 bits; the low 3 bits of the byte must be zero.
    try {
      parse_graph6("B@");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 1);
    }
  }
  SUBCASE("byte below the bias") { CHECK_THROWS_AS(parse_graph6("D? "), ParseError); }
  SUBCASE("empty line") { CHECK_THROWS_AS(parse_graph6(""), ParseError); }
  SUBCASE("order above capacity") {
    std::string big = "~?@@";  // 65 vertices
    big += std::string((65 * 64 / 2 + 5) / 6, '?');
    CHECK_THROWS(parse_graph6(big));
  }
}

TEST_CASE("writer matches the reference layout") {
  for (int n = 0; n <= 64; n += (n < 10 ? 1 : 9)) {
    const Graph g = n >= 3 ? make_cycle(n) : make_complete(n);
    CHECK(write_graph6(g) == oracle::graph6(g));
    CHECK(parse_graph6(oracle::graph6(g)) == g);
  }
  const Graph k64 = make_complete(64);
  CHECK(write_graph6(k64).substr(0, 4) == "~?@?");
  CHECK(parse_graph6(write_graph6(k64)) == k64);
  const Graph k63 = make_complete_bipartite(30, 33);
  CHECK(parse_graph6(write_graph6(k63)) == k63);
}

TEST_CASE("round trip over every enumerated graph up to eight vertices") {
  for (int n = 1; n <= 8; ++n) {
    std::size_t mismatches = 0;
    for_each_graph(n, false, [&](const Graph& g) {
      const std::string text = write_graph6(g);
      if (text != oracle::graph6(g) || !(parse_graph6(text) == g)) ++mismatches;
    });
    CHECK_MESSAGE(mismatches == 0, "n = " << n);
  }
}

TEST_CASE("stream reader skips blank lines") {
  std::istringstream in(">>graph6<<D?{\n\nC~\n");
  const auto graphs = read_graph6_stream(in);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[1] == make_complete(4));
  std::istringstream bad("C~\nC\n");
  CHECK_THROWS(read_graph6_stream(bad));
}
