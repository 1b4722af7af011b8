#include <doctest.h>

#include <random>
#include <stdexcept>

#include "corona/domination.hpp"
#include "corona/subdivision.hpp"
#include "corona/sampling.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace corona;
using namespace corona::testing;

TEST_CASE("subdivide_edge") {
  CHECK(are_isomorphic_trees(subdivide_edge(path_graph(3), {1, 2}),
                             path_graph(4)));
  CHECK(are_isomorphic_trees(subdivide_edge(star_graph(3), {0, 1}),
                             spider_graph({2, 1, 1})));
  for (auto e : path_graph(4).edges())
    CHECK(are_isomorphic_trees(subdivide_edge(path_graph(4), e),
                               path_graph(5)));
  CHECK_THROWS_AS(subdivide_edge(path_graph(4), {0, 2}),
                  std::invalid_argument);
}

TEST_CASE("subdivide_edge_set") {
  Graph p4 = path_graph(4);
  CHECK(are_isomorphic_trees(subdivide_edge_set(p4, p4.edges()),
                             path_graph(7)));
  CHECK(are_isomorphic_trees(subdivide_edge_set(path_graph(2), {{0, 1}}),
                             path_graph(3)));
  CHECK(subdivide_edge_set(p4, {}) == p4);
  CHECK_THROWS_AS(subdivide_edge_set(p4, {{0, 1}, {1, 0}}),
                  std::invalid_argument);
}

TEST_CASE("subdivision result does not depend on listing order") {
  std::mt19937_64 rng(67);
  for (int round = 0; round < 30; ++round) {
    Graph t = random_tree(4 + static_cast<int>(rng() % 8), rng);
    EdgeSet edges = t.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    EdgeSet some(edges.begin(), edges.begin() + 1 + rng() % edges.size());
    EdgeSet shuffled = some;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(tree_canonical_code(subdivide_edge_set(t, some)) ==
          tree_canonical_code(subdivide_edge_set(t, shuffled)));
  }
}

TEST_CASE("subdividing one edge never decreases gamma") {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 30; ++round) {
    Graph t = random_tree(3 + static_cast<int>(rng() % 9), rng);
    int gamma = domination_number(t);
    for (auto e : t.edges())
      CHECK(domination_number(subdivide_edge(t, e)) >= gamma);
  }
  Graph g = example_graph();
  int gamma = domination_number(g);
  for (auto e : g.edges())
    CHECK(domination_number(subdivide_edge(g, e)) >= gamma);
}

TEST_CASE("subdivision numbers of small paths") {
  CHECK(subdivision_number(path_graph(4)) == 3);
  CHECK(subdivision_number(path_graph(3)) == 1);
  CHECK(subdivision_number(path_graph(5)) == 2);
}

TEST_CASE("path table matches the independent oracle") {
  for (int n = 3; n <= 12; ++n) {
    int want = n % 3 == 0 ? 1 : n % 3 == 2 ? 2 : 3;
    CHECK(oracles::path_sd_oracle(n) == want);
    CHECK(subdivision_number(path_graph(n)) == want);
  }
}

TEST_CASE("subdivision_number preconditions") {
  CHECK_THROWS_AS(subdivision_number(path_graph(2), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(subdivision_number(from_edge_list(4, {{0, 1}, {2, 3}}), 3),
                  std::invalid_argument);
  // Non-trees need an explicit bound.
  CHECK_THROWS_AS(subdivision_number(example_graph()), std::invalid_argument);
  CHECK(subdivision_number(example_graph(), 5).has_value());
  // Too small a bound reports not-found.
  CHECK(!subdivision_number(path_graph(4), 2).has_value());
}

TEST_CASE("classify_tree") {
  CHECK(classify_tree(path_graph(4)) == TreeClass::S3);
  CHECK(classify_tree(path_graph(3)) == TreeClass::S1);
  CHECK(classify_tree(path_graph(5)) == TreeClass::S2);
  CHECK_THROWS_AS(classify_tree(example_graph()), std::invalid_argument);
  CHECK_THROWS_AS(classify_tree(path_graph(2)), std::invalid_argument);
}

TEST_CASE("every small tree resolves within three subdivisions") {
  std::mt19937_64 rng(73);
  for (int round = 0; round < 40; ++round) {
    Graph t = random_tree(3 + static_cast<int>(rng() % 10), rng);
    CHECK(subdivision_number(t, 3).has_value());
  }
}
