#include <doctest.h>

#include <random>

#include "hilbgap/graphs.hpp"
#include "hilbgap/normalize.hpp"
#include "hilbgap/paper_check.hpp"

using namespace hilbgap;

using E = std::vector<SimpleGraph::Edge>;

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(SimpleGraph(3, E{{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(SimpleGraph(3, E{{0, 1}, {1, 0}}), InvalidInput);
  CHECK_THROWS_AS(SimpleGraph(3, E{{0, 3}}), InvalidInput);
  const SimpleGraph g(4, E{{2, 1}, {0, 1}});
  CHECK(g.edges() == E{{0, 1}, {1, 2}});
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  const auto comp = g.components();
  CHECK(comp[0] == comp[2]);
  CHECK(comp[3] != comp[0]);
}

TEST_CASE("G_2 is the ten-vertex example graph") {
  CHECK(gk_graph(2).edges() == example_graph().edges());
  CHECK(gk_graph(1).vertex_count() == 8);
  CHECK(gk_graph(3).edges().size() == 18);
  CHECK_THROWS_AS(gk_graph(0), InvalidInput);
}

TEST_CASE("edge ring dimension") {
  CHECK(edge_ring_dim(SimpleGraph(3, E{{0, 1}, {0, 2}, {1, 2}})) == 3);
  CHECK(edge_ring_dim(SimpleGraph(4, E{{0, 1}, {1, 2}, {2, 3}, {0, 3}})) == 3);
  CHECK(edge_ring_dim(SimpleGraph(6, E{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})) == 6);
  CHECK(edge_ring_dim(SimpleGraph(5, E{{0, 1}, {2, 3}})) == 2);
  for (std::int64_t k = 1; k <= 3; ++k) CHECK(edge_monoid(gk_graph(k)).dim() == edge_ring_dim(gk_graph(k)));
}

TEST_CASE("odd cycles") {
  const SimpleGraph k4(4, E{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(odd_cycles(k4).cycles.size() == 4);
  const SimpleGraph c5(5, E{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const CycleList l = odd_cycles(c5);
  REQUIRE(l.cycles.size() == 1);
  CHECK(l.cycles[0].front() == 0);
  CHECK(odd_cycles(SimpleGraph(4, E{{0, 1}, {1, 2}, {2, 3}, {0, 3}})).cycles.empty());
  const SimpleGraph k5(5, E{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  // 10 triangles and 12 five-cycles.
  CHECK(odd_cycles(k5).cycles.size() == 22);
  CHECK_FALSE(odd_cycles(k5, 5).complete);
}

TEST_CASE("exceptional pairs") {
  const PairList ex = exceptional_pairs(example_graph());
  // Triangles {1,2,3} and {8,9,10} (1-based) and no other disjoint unlinked pair.
  REQUIRE(ex.pairs.size() == 1);
  CHECK(ex.pairs[0].first == std::vector<std::size_t>{0, 1, 2});
  CHECK(ex.pairs[0].second == std::vector<std::size_t>{7, 8, 9});
  CHECK(ex.pairs[0].support == IntVector{1, 1, 1, 0, 0, 0, 0, 1, 1, 1});

  CHECK(exceptional_pairs(SimpleGraph(4, E{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})).pairs.empty());
  CHECK(exceptional_pairs(SimpleGraph(6, E{{0, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 5}})).pairs.empty());
  CHECK(exceptional_pairs(SimpleGraph(6, E{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})).pairs.size() == 1);
  // Linked by an edge: not exceptional.
  CHECK(exceptional_pairs(SimpleGraph(6, E{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}})).pairs.empty());
}

TEST_CASE("normalization generators from odd cycles") {
  const SimpleGraph bridge(6, E{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  // Triangles linked by an edge: their vertex sum is a perfect matching.
  CHECK(oh_normalization_generators(bridge).generators.rows() == 7);
  const SimpleGraph path(7, E{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
  const auto with_pair = oh_normalization_generators(path);
  CHECK(with_pair.generators.rows() == 9);
  CHECK(with_pair.generators == hilbert_basis(edge_monoid(path)).elements);
  const SimpleGraph two(6, E{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  // Different components: the sum is not in the group, so nothing is added.
  const auto oh = oh_normalization_generators(two);
  CHECK(oh.generators.rows() == 6);
  CHECK(oh.generators == hilbert_basis(edge_monoid(two)).elements);
}

TEST_CASE("edge polytope codegrees") {
  CHECK(codegree(edge_polytope(SimpleGraph(2, E{{0, 1}})), 5) == 1);
  CHECK(codegree(edge_polytope(SimpleGraph(3, E{{0, 1}, {0, 2}, {1, 2}})), 5) == 3);
  CHECK(codegree(edge_polytope(gk_graph(1)), 8) == 4);
}

TEST_CASE("Hilbert basis of the ten-vertex example adds one element of degree three") {
  const AffineMonoid q = edge_monoid(example_graph());
  const HilbertBasis hb = hilbert_basis(q);
  REQUIRE(hb.elements.rows() == q.generators().rows() + 1);
  CHECK(hb.degrees.back() == 3);
  CHECK(hb.elements.row_vector(hb.elements.rows() - 1) == exceptional_pairs(example_graph()).pairs[0].support);
}

TEST_CASE("random graphs: pairs re-check, codegree lower bound, dimension") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 4 + rng() % 4;
    E edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    if (edges.empty()) continue;
    const SimpleGraph g(n, edges);
    CAPTURE(t);
    for (const auto& p : exceptional_pairs(g).pairs) {
      CHECK(p.first.size() % 2 == 1);
      CHECK(p.second.size() % 2 == 1);
      for (auto a : p.first)
        for (auto b : p.second) {
          CHECK(a != b);
          CHECK_FALSE(g.has_edge(a, b));
        }
    }
    CHECK(edge_monoid(g).dim() == edge_ring_dim(g));
    const auto comp = g.components();
    const bool connected = std::all_of(comp.begin(), comp.end(), [&](std::size_t c) { return c == comp[0]; });
    if (connected) {
      const auto cd = codegree(edge_polytope(g), static_cast<std::int64_t>(n) + 2);
      REQUIRE(cd);
      CHECK(2 * *cd >= static_cast<std::int64_t>(n));
    }
  }
}
