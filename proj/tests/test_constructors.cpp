#include <doctest.h>

#include <cmath>
#include <vector>

#include "degindex/constructors.hpp"
#include "degindex/extremal.hpp"
#include "degindex/kernels.hpp"
#include "degindex/regimes.hpp"

using namespace degindex;

TEST_CASE("complete bipartite graphs") {
  CHECK(classify_structure(complete_bipartite(1, 3)) ==
        StructureClass{StructureKind::Biregular, 1, 3});
  CHECK(classify_structure(complete_bipartite(2, 3)) ==
        StructureClass{StructureKind::Biregular, 2, 3});
  CHECK(classify_structure(complete_bipartite(3, 3)) ==
        StructureClass{StructureKind::Regular, 3, 3});
  CHECK(complete_bipartite(2, 3).size() == 6);
}

TEST_CASE("biregular generator") {
  SUBCASE("t = 1 is complete bipartite") {
    Graph g = biregular_graph(2, 3, 1);
    CHECK(g.order() == 5);
    CHECK(g.size() == 6);
    CHECK(classify_structure(g) == StructureClass{StructureKind::Biregular, 2, 3});
  }
  SUBCASE("t = 2 doubles the parts") {
    Graph g = biregular_graph(2, 3, 2);
    CHECK(g.order() == 10);
    CHECK(g.size() == 12);
    CHECK(classify_structure(g) == StructureClass{StructureKind::Biregular, 2, 3});
    CHECK(index_value(g, Kernel::randic()) == doctest::Approx(12.0 / std::sqrt(6.0)));
  }
  SUBCASE("degree-one pairs give perfect matchings") {
    for (int t = 1; t <= 4; ++t) {
      Graph g = biregular_graph(1, 1, t);
      CHECK(g.order() == 2 * t);
      CHECK(g.size() == t);
      CHECK(classify_structure(g) == StructureClass{StructureKind::Regular, 1, 1});
    }
  }
  SUBCASE("full sweep is simple and biregular") {
    for (int a = 1; a <= 5; ++a)
      for (int b = a; b <= 5; ++b)
        for (int t = 1; t <= 4; ++t) {
          Graph g = biregular_graph(a, b, t);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(t);
          CHECK(g.order() == (a + b) * t);
          CHECK(g.size() == a * b * t);
          StructureClass expected = a == b
                                        ? StructureClass{StructureKind::Regular, a, a}
                                        : StructureClass{StructureKind::Biregular, a, b};
          CHECK(classify_structure(g) == expected);
        }
  }
  SUBCASE("equality in the biregular regime") {
    for (int a = 1; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b)
        for (int t = 1; t <= 4; ++t) {
          DegreeRange range(a, b);
          auto th = thresholds(range);
          double alpha = 0.5 * (th.t1 + th.t2);
          auto cert = certify_equality(biregular_graph(a, b, t), Kernel::general_randic(alpha),
                                       range, Direction::Minimise);
          CHECK(cert.holds);
        }
  }
}

TEST_CASE("regular circulants") {
  CHECK(circulant_regular(5, 2) == parse_graph("Dhc", GraphFormat::Graph6));

  Graph prism = circulant_regular(6, 3);
  CHECK(prism.size() == 9);
  CHECK(classify_structure(prism) == StructureClass{StructureKind::Regular, 3, 3});

  CHECK_THROWS_AS(circulant_regular(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(circulant_regular(4, 4), std::invalid_argument);

  SUBCASE("sharpness for single-pair ranges") {
    const Kernel kernels[] = {Kernel::randic(), Kernel::zagreb_first(), Kernel::zagreb_second(),
                              Kernel::general_randic(-0.8)};
    for (int n = 3; n <= 9; ++n)
      for (int r = 1; r < n; ++r) {
        if (n % 2 == 1 && r % 2 == 1) continue;
        Graph g = circulant_regular(n, r);
        for (const Kernel& k : kernels) {
          double expected = r * k(r, r) / 2.0 * n;
          CHECK(index_value(g, k) == doctest::Approx(expected).epsilon(1e-12));
        }
      }
  }
}

TEST_CASE("disjoint unions") {
  Graph c3_c4 = disjoint_union(std::vector<Graph>{circulant_regular(3, 2), circulant_regular(4, 2)});
  CHECK(c3_c4.order() == 7);
  CHECK(classify_structure(c3_c4).kind == StructureKind::ComponentwiseRegular);
  // Attains the regular-family upper bound |G|/2.
  CHECK(index_value(c3_c4, Kernel::randic()) == doctest::Approx(3.5));

  Graph two_stars =
      disjoint_union(std::vector<Graph>{complete_bipartite(1, 3), complete_bipartite(1, 3)});
  CHECK(classify_structure(two_stars) == StructureClass{StructureKind::Biregular, 1, 3});
  CHECK(index_value(two_stars, Kernel::randic()) ==
        doctest::Approx(std::sqrt(3.0) / 4.0 * 8).epsilon(1e-13));

  CHECK(disjoint_union({}).order() == 0);
}
