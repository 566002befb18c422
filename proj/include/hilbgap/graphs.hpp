#pragma once

// Finite simple graphs, their edge monoids and edge polytopes, odd cycles and
// the exceptional pairs that generate the normalization of an edge monoid.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hilbgap/monoid.hpp"

namespace hilbgap {

class SimpleGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  SimpleGraph() = default;
  // Vertices are 0..n-1. Throws InvalidInput on loops, repeated edges or
  // out-of-range endpoints.
  SimpleGraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }  // u < v, sorted
  bool has_edge(std::size_t u, std::size_t v) const;
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }

  // Component index per vertex; isolated vertices form their own component.
  std::vector<std::size_t> components() const;
  bool is_bipartite() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
};

// Graph of the family G_k: triangles u1u2u3 and u4u5u6 and, for each i, the
// edges u3-v_i', v_i'-v_i, v_i-u3, v_i-u6. Vertices are ordered u1, u2, u3,
// v_1', v_1, ..., v_k', v_k, u6, u4, u5.
SimpleGraph gk_graph(std::int64_t k);

IntMatrix edge_vectors(const SimpleGraph& g);
AffineMonoid edge_monoid(const SimpleGraph& g);
// Sum over components with an edge of their vertex count, less one for each
// bipartite component.
std::size_t edge_ring_dim(const SimpleGraph& g);
// Convex hull of the edge vectors, counted in the lattice generated by them.
LatticePolytope edge_polytope(const SimpleGraph& g);

struct CycleList {
  std::vector<std::vector<std::size_t>> cycles;  // rotated to start at the minimum, canonical direction
  bool complete = true;
};
CycleList odd_cycles(const SimpleGraph& g, std::size_t cap = 100000);

struct OddCyclePair {
  std::vector<std::size_t> first, second;
  IntVector support;  // e_C + e_C'
};
struct PairList {
  std::vector<OddCyclePair> pairs;
  bool complete = true;
};
// Vertex-disjoint odd cycles with no edge between them.
PairList exceptional_pairs(const SimpleGraph& g, std::size_t cycle_cap = 100000);

struct NormalizationGenerators {
  IntMatrix generators;  // minimal system, sorted
  bool complete = true;
};
// Edge vectors plus e_C + e_C' for exceptional pairs inside one connected
// component, reduced to a minimal generating system.
NormalizationGenerators oh_normalization_generators(const SimpleGraph& g, std::size_t cycle_cap = 100000);

}  // namespace hilbgap
