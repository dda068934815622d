#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "isolation/graph_io.hpp"
#include "oracles.hpp"

using namespace isolation;

TEST_CASE("graph6 fixed points") {
  const Graph k4 = parse_graph6("C~");
  CHECK(k4 == build_named({NamedKind::Complete, 4}));
  CHECK(write_graph6(Graph(1)) == "@");
  CHECK(write_graph6(Graph()) == "?");
  CHECK(parse_graph6(">>graph6<<C~") == k4);
  const Graph c5 = build_named({NamedKind::Cycle, 5});
  CHECK(parse_graph6(write_graph6(c5)) == c5);
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = rng() % 21;
    const Graph g = oracle::random_graph(n, 0.4, rng);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("malformed graph6 is rejected") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);     // missing edge byte
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);   // trailing byte
  CHECK_THROWS_AS(parse_graph6("C\x20"), ParseError); // byte below 63
  CHECK_THROWS_AS(parse_graph6("A@"), ParseError);    // nonzero padding bit
  CHECK(parse_graph6("B?").size() == 0);
  CHECK_THROWS_AS(parse_graph6("~??~"), ParseError);  // long size field
  try {
    parse_graph6("C~~");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("graphs beyond the short size field are refused") {
  CHECK_THROWS(write_graph6(Graph(63)));
  CHECK_NOTHROW(write_graph6(Graph(62)));
}

TEST_CASE("edge lists") {
  const Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
  CHECK(g == build_named({NamedKind::Path, 4}));
  CHECK(parse_edge_list(write_edge_list(g)) == g);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 7\n"), ParseError);
}

TEST_CASE("graph6 streams report line numbers") {
  std::istringstream good("C~\n\nBw\n");
  CHECK(read_graph6_stream(good).size() == 2);
  std::istringstream bad("C~\nC\n");
  try {
    read_graph6_stream(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("graph arguments: file or literal") {
  const std::string path = "graph_io_test_fixture.g6";
  {
    std::ofstream f(path);
    f << "D~{\nC~\n";
  }
  CHECK(read_graph_argument(path).order() == 5);
  CHECK(read_graph_file(path).size() == 2);
  CHECK(read_graph_argument("C~").order() == 4);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_graph_file(path), std::ios_base::failure);
}
