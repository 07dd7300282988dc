#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "degindex/constructors.hpp"
#include "degindex/extremal.hpp"
#include "test_support.hpp"

using namespace degindex;

namespace {

// Independent brute force over the full (a,b) square, ignoring the library's
// sorted-triangle search; ties resolved with the same relative tolerance.
std::set<std::pair<int, int>> brute_force_optima(const Kernel& k, const DegreeRange& range,
                                                 Direction direction) {
  double best = direction == Direction::Minimise ? 1e300 : -1e300;
  for (int a = range.min_degree; a <= range.max_degree; ++a)
    for (int b = range.min_degree; b <= range.max_degree; ++b) {
      double h = static_cast<double>(a) * b * k(a, b) / (a + b);
      best = direction == Direction::Minimise ? std::min(best, h) : std::max(best, h);
    }
  std::set<std::pair<int, int>> optima;
  for (int a = range.min_degree; a <= range.max_degree; ++a)
    for (int b = range.min_degree; b <= range.max_degree; ++b) {
      double h = static_cast<double>(a) * b * k(a, b) / (a + b);
      if (std::abs(h - best) <= 1e-9 * std::max(1.0, std::abs(best)))
        optima.insert({std::min(a, b), std::max(a, b)});
    }
  return optima;
}

}  // namespace

TEST_CASE("pair objective values") {
  CHECK(pair_objective(Kernel::randic(), 1, 4) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(pair_objective(Kernel::randic(), 3, 3) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(pair_objective(Kernel::zagreb_second(), 2, 2) == doctest::Approx(4.0));
  CHECK(exact_pair_objective(Kernel::zagreb_second(), 2, 5) == Rational(100, 7));
  // Symmetric in its arguments.
  CHECK(pair_objective(Kernel::randic(), 2, 5) == pair_objective(Kernel::randic(), 5, 2));
}

TEST_CASE("optimal pairs: worked examples") {
  SUBCASE("randic (1,4) minimise") {
    auto result = optimal_pairs(Kernel::randic(), DegreeRange(1, 4), Direction::Minimise);
    CHECK(result.pairs == std::vector<std::pair<int, int>>{{1, 4}});
    CHECK(result.coefficient == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(result.unique);
  }
  SUBCASE("randic (2,3) maximise ties on the diagonal") {
    auto result = optimal_pairs(Kernel::randic(), DegreeRange(2, 3), Direction::Maximise);
    CHECK(result.pairs == std::vector<std::pair<int, int>>{{2, 2}, {3, 3}});
    CHECK(result.coefficient == doctest::Approx(0.5));
    CHECK(!result.unique);
  }
  SUBCASE("zagreb_second (2,5) minimise") {
    auto result = optimal_pairs(Kernel::zagreb_second(), DegreeRange(2, 5), Direction::Minimise);
    CHECK(result.pairs == std::vector<std::pair<int, int>>{{2, 2}});
    CHECK(result.coefficient == doctest::Approx(4.0));
    CHECK(result.unique);
    REQUIRE(result.exact_coefficient.has_value());
    CHECK(*result.exact_coefficient == Rational(4));
  }
}

TEST_CASE("optimal pairs match a full-square brute force") {
  std::mt19937 rng(2025);
  const Kernel kernels[] = {Kernel::randic(), Kernel::general_randic(-1.3),
                            Kernel::general_randic(0.6), Kernel::zagreb_first(),
                            Kernel::zagreb_second()};
  for (int i = 0; i < 60; ++i) {
    int lo = 1 + static_cast<int>(rng() % 5);
    int hi = lo + static_cast<int>(rng() % 5);
    DegreeRange range(lo, hi);
    for (const Kernel& k : kernels)
      for (Direction dir : {Direction::Minimise, Direction::Maximise}) {
        auto result = optimal_pairs(k, range, dir);
        std::set<std::pair<int, int>> got(result.pairs.begin(), result.pairs.end());
        CAPTURE(lo);
        CAPTURE(hi);
        CAPTURE(k.display_name());
        CHECK(got == brute_force_optima(k, range, dir));
        CHECK(result.unique == (result.pairs.size() == 1));
      }
  }
}

TEST_CASE("vertex bound coefficients") {
  CHECK(vertex_bound(Kernel::randic(), DegreeRange(1, 4), Direction::Minimise) ==
        doctest::Approx(0.4).epsilon(1e-14));
  for (int delta = 1; delta <= 4; ++delta)
    for (int Delta = delta; Delta <= 6; ++Delta)
      CHECK(vertex_bound(Kernel::randic(), DegreeRange(delta, Delta), Direction::Maximise) ==
            doctest::Approx(0.5).epsilon(1e-12));
  // Degenerate range: single admissible pair, r*f(r,r)/2.
  const Kernel z2 = Kernel::zagreb_second();
  CHECK(vertex_bound(z2, DegreeRange(3, 3), Direction::Minimise) ==
        doctest::Approx(3.0 * 9 / 2));
}

TEST_CASE("weight certificate equals the order") {
  CHECK(weight_certificate(complete_bipartite(1, 3)) == Rational(4));
  CHECK(weight_certificate(circulant_regular(5, 2)) == Rational(5));
  CHECK(weight_certificate(complete_bipartite(2, 3)) == Rational(5));
  CHECK(weight_certificate(Graph()) == Rational(0));
  CHECK_THROWS_AS(weight_certificate(Graph(2, {})), std::domain_error);

  std::mt19937 rng(321);
  for (int i = 0; i < 1000; ++i) {
    Graph g = degindex::testing::random_graph_no_isolated(rng, 2, 12);
    CHECK(weight_certificate(g) == Rational(g.order()));
  }
}

TEST_CASE("equality certification") {
  const Kernel randic = Kernel::randic();

  SUBCASE("star attains the (1,4) lower bound") {
    auto cert = certify_equality(complete_bipartite(1, 4), randic, DegreeRange(1, 4),
                                 Direction::Minimise);
    CHECK(cert.holds);
    CHECK(cert.violating_edges.empty());
    CHECK(cert.weight_sum == Rational(5));
  }
  SUBCASE("hexagon misses the (1,2) lower bound") {
    Graph c6 = circulant_regular(6, 2);
    auto cert = certify_equality(c6, randic, DegreeRange(1, 2), Direction::Minimise);
    CHECK(!cert.holds);
    CHECK(cert.violating_edges.size() == 6);
  }
  SUBCASE("perfect matching attains the maximum among diagonal ties") {
    Graph matching = biregular_graph(1, 1, 2);
    auto cert = certify_equality(matching, randic, DegreeRange(1, 2), Direction::Maximise);
    CHECK(cert.holds);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(certify_equality(Graph(2, {}), randic, DegreeRange(1, 2), Direction::Minimise),
                    std::domain_error);
    CHECK_THROWS_AS(
        certify_equality(complete_bipartite(1, 4), randic, DegreeRange(1, 3), Direction::Minimise),
        std::domain_error);
  }
}
