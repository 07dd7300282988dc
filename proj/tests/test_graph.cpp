#include <doctest.h>

#include <numeric>
#include <random>

#include "degindex/constructors.hpp"
#include "degindex/graph.hpp"
#include "test_support.hpp"

using namespace degindex;

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  Graph g(3, {{2, 0}, {0, 1}});  // unnormalised input is accepted
  CHECK(g.size() == 2);
  CHECK(g.adjacent(0, 2));
  CHECK(g.degree(0) == 2);
}

TEST_CASE("edge-list parsing") {
  Graph star = parse_graph("4\n0 1\n0 2\n0 3", GraphFormat::EdgeList);
  CHECK(star.order() == 4);
  CHECK(star.degree(0) == 3);
  CHECK(star.degree(1) == 1);
  CHECK(star.degree(2) == 1);
  CHECK(star.degree(3) == 1);

  SUBCASE("self-loop reported with position") {
    try {
      parse_graph("2\n0 0", GraphFormat::EdgeList);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
  }
  SUBCASE("duplicate edge") {
    try {
      parse_graph("3\n0 1\n1 0", GraphFormat::EdgeList);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("malformed header") {
    CHECK_THROWS_AS(parse_graph("x\n0 1", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("3 4\n0 1", GraphFormat::EdgeList), ParseError);
  }
  SUBCASE("out-of-range vertex") {
    try {
      parse_graph("3\n0 1\n1 7", GraphFormat::EdgeList);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 3);
    }
  }
}

TEST_CASE("graph6 parsing") {
  // 'C~' encodes the complete graph on 4 vertices.
  Graph k4 = parse_graph("C~", GraphFormat::Graph6);
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  CHECK(classify_structure(k4) == StructureClass{StructureKind::Regular, 3, 3});

  CHECK(serialize_graph(k4, GraphFormat::Graph6) == "C~");
  CHECK(serialize_graph(complete_bipartite(1, 3), GraphFormat::Graph6) == "Cs");
  CHECK(serialize_graph(circulant_regular(5, 2), GraphFormat::Graph6) == "Dhc");

  SUBCASE("errors carry byte positions") {
    CHECK_THROWS_AS(parse_graph("C", GraphFormat::Graph6), ParseError);      // truncated
    CHECK_THROWS_AS(parse_graph("C~x ", GraphFormat::Graph6), ParseError);   // trailing data
    CHECK_THROWS_AS(parse_graph("B\x20", GraphFormat::Graph6), ParseError);  // bad byte
    CHECK_THROWS_AS(parse_graph("A", GraphFormat::Graph6), ParseError);      // missing bits
  }
  SUBCASE("padding must be zero") {
    // n=2, one slot: 'A' + group; '_' = 0b011111 sets padding bits.
    CHECK_THROWS_AS(parse_graph("A_", GraphFormat::Graph6), ParseError);
    CHECK(parse_graph("A?", GraphFormat::Graph6).size() == 0);
    CHECK(parse_graph("Ao", GraphFormat::Graph6).size() == 1);
  }
  SUBCASE("empty and long headers") {
    CHECK(parse_graph("?", GraphFormat::Graph6).order() == 0);
    Graph empty63(63, {});
    Graph back = parse_graph(serialize_graph(empty63, GraphFormat::Graph6), GraphFormat::Graph6);
    CHECK(back.order() == 63);
  }
}

TEST_CASE("parse/serialise round trip on random graphs") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 1000; ++i) {
    int n = static_cast<int>(rng() % 13);
    Graph g = degindex::testing::random_graph(rng, n, 0.4);
    CAPTURE(i);
    CHECK(parse_graph(serialize_graph(g, GraphFormat::Graph6), GraphFormat::Graph6) == g);
    CHECK(parse_graph(serialize_graph(g, GraphFormat::EdgeList), GraphFormat::EdgeList) == g);
  }
}

TEST_CASE("degree sum equals twice the edge count") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Graph g = degindex::testing::random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.5);
    auto degrees = g.degrees();
    CHECK(std::accumulate(degrees.begin(), degrees.end(), 0) == 2 * g.size());
  }
}

TEST_CASE("degree summary") {
  auto star = degree_summary(complete_bipartite(1, 3));
  CHECK(star.degrees == std::vector<int>{3, 1, 1, 1});
  CHECK(star.min_degree == 1);
  CHECK(star.max_degree == 3);

  auto cycle = degree_summary(circulant_regular(5, 2));
  CHECK(cycle.min_degree == 2);
  CHECK(cycle.max_degree == 2);

  auto k23 = degree_summary(complete_bipartite(2, 3));
  CHECK(k23.degrees == std::vector<int>{3, 3, 2, 2, 2});
  CHECK(k23.min_degree == 2);
  CHECK(k23.max_degree == 3);

  auto empty = degree_summary(Graph());
  CHECK(!empty.min_degree.has_value());
  CHECK(!empty.max_degree.has_value());
}

TEST_CASE("structure classification") {
  CHECK(classify_structure(complete_bipartite(2, 3)) ==
        StructureClass{StructureKind::Biregular, 2, 3});

  Graph c3_c4 = disjoint_union(std::vector<Graph>{circulant_regular(3, 2), circulant_regular(4, 2)});
  CHECK(classify_structure(c3_c4).kind == StructureKind::ComponentwiseRegular);

  // Path on 3 vertices: degrees {1,2,1}, both edges join degree 1 to degree 2.
  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(classify_structure(p3) == StructureClass{StructureKind::Biregular, 1, 2});

  // Path on 4 vertices has a (2,2) middle edge.
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(classify_structure(p4).kind == StructureKind::Irregular);

  CHECK(classify_structure(Graph()).kind == StructureKind::Regular);
  CHECK(classify_structure(Graph(3, {})) == StructureClass{StructureKind::Regular, 0, 0});

  // Isolated vertex next to edges: Biregular is ruled out by convention.
  Graph k2_k1(3, {{0, 1}});
  CHECK(classify_structure(k2_k1).kind == StructureKind::Irregular);

  SUBCASE("complete bipartite sweep") {
    for (int a = 1; a <= 8; ++a)
      for (int b = a; b <= 8; ++b) {
        StructureClass expected = a == b ? StructureClass{StructureKind::Regular, a, a}
                                         : StructureClass{StructureKind::Biregular, a, b};
        CHECK(classify_structure(complete_bipartite(a, b)) == expected);
      }
  }
}

TEST_CASE("degree range validation") {
  CHECK_THROWS_AS(DegreeRange(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(DegreeRange(3, 2), std::invalid_argument);
  DegreeRange r(2, 5);
  CHECK(r.span() == 4);
  CHECK(r.contains(2));
  CHECK(!r.contains(6));
}
