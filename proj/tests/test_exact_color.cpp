#include <doctest.h>

#include "chromabound/exact_color.hpp"
#include "chromabound/generators.hpp"
#include "test_support.hpp"

using namespace chromabound;

TEST_CASE("greedy_dsatur") {
  CHECK(greedy_dsatur(complete_graph(4)).num_colors == 4);
  CHECK(greedy_dsatur(Graph(5)).num_colors == 1);
  CHECK(greedy_dsatur(cycle_graph(5)).num_colors == 3);
  CHECK(greedy_dsatur(cycle_graph(6)).num_colors == 2);
  for (const auto& named : default_corpus()) {
    const Coloring c = greedy_dsatur(named.graph);
    CHECK(is_proper(named.graph, c.colors));
    CHECK(greedy_dsatur(named.graph).colors == c.colors);
  }
}

TEST_CASE("greedy_clique_size") {
  CHECK(greedy_clique_size(complete_graph(6)) == 6);
  CHECK(greedy_clique_size(petersen_graph()) == 2);
  CHECK(greedy_clique_size(Graph(3)) == 1);
}

TEST_CASE("exact_chi examples") {
  CHECK(exact_chi(petersen_graph()).chi == 3);
  CHECK(exact_chi(complete_graph(5)).chi == 5);
  CHECK(exact_chi(cycle_graph(7)).chi == 3);
  CHECK(exact_chi(star_graph(6)).chi == 2);
  CHECK(exact_chi(Graph(4)).chi == 1);
  for (int k = 1; k <= 5; ++k) CHECK(exact_chi(mycielski_graph(k)).chi == k);
}

TEST_CASE("exact_chi agrees with brute force on the corpus") {
  for (const auto& named : default_corpus()) {
    CAPTURE(named.id);
    const ColoringResult r = exact_chi(named.graph);
    REQUIRE_FALSE(r.timed_out);
    CHECK(r.lower_bound == r.chi);
    CHECK(r.witness.num_colors == r.chi);
    CHECK(is_proper(named.graph, r.witness.colors));
    if (named.graph.vertex_count() <= 16) CHECK(r.chi == oracle::chromatic_number(named.graph));
  }
}

TEST_CASE("exact_chi on random graphs") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = erdos_renyi(11, 0.5, seed);
    const ColoringResult r = exact_chi(g);
    CHECK(r.chi == oracle::chromatic_number(g));
    CHECK(is_proper(g, r.witness.colors));
  }
}

TEST_CASE("exact_chi respects the node budget") {
  const Graph g = erdos_renyi(60, 0.5, 3);
  const ColoringResult r = exact_chi(g, 10);
  CHECK(r.timed_out);
  CHECK(r.nodes_explored <= 11);
  CHECK(r.chi >= r.lower_bound);
  CHECK(r.witness.num_colors == r.chi);
  CHECK(is_proper(g, r.witness.colors));
}
