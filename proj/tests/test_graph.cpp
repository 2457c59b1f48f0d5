#include <doctest.h>

#include <set>

#include "chromabound/dimacs.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/generators.hpp"
#include "chromabound/graph.hpp"
#include "chromabound/weights.hpp"

using namespace chromabound;

TEST_CASE("graph construction collapses duplicates and rejects bad edges") {
  const std::vector<Edge> edges{{0, 1}, {1, 0}, {1, 2}, {0, 1}};
  Graph g(3, edges);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);

  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), ParameterError);
  const std::vector<Edge> out_of_range{{0, 3}};
  CHECK_THROWS_AS(Graph(3, out_of_range), ParameterError);
}

TEST_CASE("parse_dimacs") {
  SUBCASE("triangle") {
    Graph g = parse_dimacs("c a comment\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(g == complete_graph(3));
  }
  SUBCASE("duplicate and reversed edges collapse") {
    Graph g = parse_dimacs("p edge 2 1\ne 1 2\ne 2 1");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
  }
  SUBCASE("edge count mismatch is a warning") {
    std::vector<std::string> warnings;
    Graph g = parse_dimacs("p edge 3 5\ne 1 2\n", &warnings);
    CHECK(g.edge_count() == 1);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("declared 5") != std::string::npos);
  }
  SUBCASE("errors name the line") {
    auto line_of = [](std::string_view text) {
      try {
        parse_dimacs(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return std::size_t{9999};
    };
    CHECK(line_of("p edge 2 1\ne 1 1") == 2);                 // self-loop
    CHECK(line_of("p edge 2 1\ne 1 3") == 2);                 // out of range
    CHECK(line_of("p edge 2 1\ne 0 1") == 2);                 // 1-indexed
    CHECK(line_of("c hi\ne 1 2\n") == 2);                     // e before p
    CHECK(line_of("p edge 2 1\nx 1 2") == 2);                 // unknown line
    CHECK(line_of("p edge 2 1\ne 1 two") == 2);               // malformed
    CHECK(line_of("p edge 2 1\np edge 2 1") == 2);            // duplicate p
    CHECK(line_of("c only comments\n") == 0);                 // missing p
    CHECK(line_of("p edge two 1") == 1);
  }
}

TEST_CASE("write_dimacs round-trips the edge set") {
  for (const auto& named : default_corpus()) {
    const Graph back = parse_dimacs(to_dimacs(named.graph, named.id));
    CHECK_MESSAGE(back == named.graph, named.id);
  }
}

TEST_CASE("generators") {
  CHECK(complete_graph(3).edge_count() == 3);
  for (std::size_t n = 1; n <= 9; ++n) CHECK(complete_graph(n).edge_count() == n * (n - 1) / 2);

  const Graph c5 = cycle_graph(5);
  CHECK(c5.edge_count() == 5);
  for (std::size_t n = 3; n <= 12; ++n) {
    const Graph c = cycle_graph(n);
    for (std::size_t v = 0; v < n; ++v) CHECK(c.degree(v) == 2);
  }

  const Graph p = petersen_graph();
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  for (std::size_t v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);

  const Graph s = star_graph(6);
  CHECK(s.edge_count() == 5);
  CHECK(s.degree(0) == 5);

  CHECK(mycielski_graph(2) == complete_graph(2));
  CHECK(mycielski_graph(3).vertex_count() == 5);
  CHECK(mycielski_graph(3).edge_count() == 5);
  CHECK(mycielski_graph(4).vertex_count() == 11);
  CHECK(mycielski_graph(4).edge_count() == 20);
  CHECK(mycielski_graph(5).vertex_count() == 23);
  CHECK(mycielski_graph(5).edge_count() == 71);

  CHECK(kneser_graph(5, 1) == complete_graph(5));

  CHECK(erdos_renyi(12, 0.4, 5) == erdos_renyi(12, 0.4, 5));
  CHECK_FALSE(erdos_renyi(12, 0.4, 5) == erdos_renyi(12, 0.4, 6));
  CHECK(erdos_renyi(6, 1.0, 1) == complete_graph(6));
  CHECK(erdos_renyi(6, 0.0, 1).edge_count() == 0);
}

TEST_CASE("generator parameter errors") {
  CHECK_THROWS_AS(complete_graph(0), ParameterError);
  CHECK_THROWS_AS(cycle_graph(2), ParameterError);
  CHECK_THROWS_AS(kneser_graph(5, 3), ParameterError);
  CHECK_THROWS_AS(kneser_graph(5, 0), ParameterError);
  CHECK_THROWS_AS(erdos_renyi(5, 1.5, 0), ParameterError);
  CHECK_THROWS_AS(mycielski_graph(0), ParameterError);
  CHECK_THROWS_AS(generate({GraphKind::cycle, 1}), ParameterError);
}

TEST_CASE("default corpus") {
  const auto corpus = default_corpus();
  CHECK(corpus.size() == 31);
  std::set<std::string> ids;
  for (const auto& g : corpus) ids.insert(g.id);
  CHECK(ids.size() == corpus.size());
  for (const auto& g : corpus) CHECK(g.graph.vertex_count() <= 23);
}

TEST_CASE("adjacency_matrix") {
  const HermitianMatrix k2 = adjacency_matrix(complete_graph(2));
  CHECK(k2(0, 0) == Complex(0.0));
  CHECK(k2(0, 1) == Complex(1.0));
  CHECK(k2(1, 0) == Complex(1.0));

  CHECK(adjacency_matrix(Graph(3)) == HermitianMatrix(3));

  const HermitianMatrix c4 = adjacency_matrix(cycle_graph(4));
  const double row[] = {0, 1, 0, 1};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(c4(r, c) == Complex(row[(c + 4 - r) % 4]));

  for (const auto& named : default_corpus()) {
    const HermitianMatrix a = adjacency_matrix(named.graph);
    CHECK(a.trace() == 0.0);
    CHECK(a.is_real());
    CHECK(a.matrix() == a.matrix().adjoint());
  }
}

TEST_CASE("is_proper and make_coloring") {
  const Graph k3 = complete_graph(3);
  const std::vector<int> good{0, 1, 2};
  const std::vector<int> bad{0, 1, 1};
  CHECK(is_proper(k3, good));
  CHECK_FALSE(is_proper(k3, bad));
  const std::vector<int> any{0, 0, 0, 0};
  CHECK(is_proper(Graph(4), any));
  CHECK_THROWS_AS(is_proper(k3, any), DimensionError);

  try {
    make_coloring(k3, bad);
    FAIL("expected ColoringError");
  } catch (const ColoringError& e) {
    CHECK(e.u() == 1);
    CHECK(e.v() == 2);
  }

  const std::vector<int> sparse{7, 3, 7};
  const Coloring c = make_coloring(Graph(3), sparse);
  CHECK(c.num_colors == 2);
  CHECK(c.colors == std::vector<int>{0, 1, 0});
  const std::vector<int> negative{0, -1, 2};
  CHECK_THROWS_AS(make_coloring(k3, negative), ParameterError);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(complete_graph(3)));
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK_FALSE(is_connected(Graph(4, two)));
  CHECK(is_connected(Graph(1)));
  CHECK(is_connected(petersen_graph()));
  CHECK_FALSE(is_connected(Graph(2)));
}
