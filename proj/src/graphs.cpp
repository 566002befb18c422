#include "hilbgap/graphs.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace hilbgap {

SimpleGraph::SimpleGraph(std::size_t n, const std::vector<Edge>& edges) : n_(n), adj_(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("loops are not allowed");
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw InvalidInput("repeated edge");
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool SimpleGraph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::size_t> SimpleGraph::components() const {
  std::vector<std::size_t> comp(n_, n_);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n_; ++s) {
    if (comp[s] != n_) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (auto w : adj_[v])
        if (comp[w] == n_) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

namespace {

// Bipartiteness per component.
std::vector<bool> bipartite_components(const SimpleGraph& g, const std::vector<std::size_t>& comp) {
  const std::size_t n = g.vertex_count();
  std::size_t count = 0;
  for (auto c : comp) count = std::max(count, c + 1);
  std::vector<bool> ok(count, true);
  std::vector<int> color(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (auto w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          ok[comp[v]] = false;
        }
      }
    }
  }
  return ok;
}

}  // namespace

bool SimpleGraph::is_bipartite() const {
  auto ok = bipartite_components(*this, components());
  return std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
}

SimpleGraph gk_graph(std::int64_t k) {
  if (k < 1) throw InvalidInput("G_k needs k >= 1");
  const auto kk = static_cast<std::size_t>(k);
  const std::size_t u1 = 0, u2 = 1, u3 = 2;
  const std::size_t u6 = 2 * kk + 3, u4 = u6 + 1, u5 = u6 + 2;
  std::vector<SimpleGraph::Edge> e{{u1, u2}, {u1, u3}, {u2, u3}, {u4, u5}, {u4, u6}, {u5, u6}};
  for (std::size_t i = 0; i < kk; ++i) {
    const std::size_t vp = 3 + 2 * i, v = vp + 1;
    e.insert(e.end(), {{u3, vp}, {vp, v}, {v, u3}, {v, u6}});
  }
  return SimpleGraph(2 * kk + 6, e);
}

IntMatrix edge_vectors(const SimpleGraph& g) {
  IntMatrix out(0, g.vertex_count());
  for (auto [u, v] : g.edges()) {
    IntVector row(g.vertex_count(), 0);
    row[u] = row[v] = 1;
    out.append_row(row);
  }
  return out;
}

AffineMonoid edge_monoid(const SimpleGraph& g) {
  if (g.edges().empty()) throw InvalidInput("graph has no edges");
  return new_monoid(edge_vectors(g));
}

std::size_t edge_ring_dim(const SimpleGraph& g) {
  const auto comp = g.components();
  const auto bip = bipartite_components(g, comp);
  std::vector<std::size_t> size(bip.size(), 0);
  for (auto c : comp) ++size[c];
  std::size_t d = 0;
  for (std::size_t c = 0; c < bip.size(); ++c) {
    if (size[c] < 2) continue;  // isolated vertex
    d += size[c] - (bip[c] ? 1 : 0);
  }
  return d;
}

LatticePolytope edge_polytope(const SimpleGraph& g) {
  if (g.edges().empty()) throw InvalidInput("graph has no edges");
  const IntMatrix pts = edge_vectors(g);
  return LatticePolytope::with_lattice(pts, Lattice::generated_by(lift(pts)));
}

CycleList odd_cycles(const SimpleGraph& g, std::size_t cap) {
  CycleList out;
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> path;
  std::vector<bool> on(n, false);
  std::function<bool(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t v) -> bool {
    for (auto w : g.neighbors(v)) {
      if (w == start && path.size() >= 3 && path.size() % 2 == 1 && path[1] < path.back()) {
        if (out.cycles.size() >= cap) {
          out.complete = false;
          return false;
        }
        out.cycles.push_back(path);
      }
      if (w <= start || on[w]) continue;
      on[w] = true;
      path.push_back(w);
      const bool go = dfs(start, w);
      path.pop_back();
      on[w] = false;
      if (!go) return false;
    }
    return true;
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    on[s] = true;
    const bool go = dfs(s, s);
    on[s] = false;
    if (!go) break;
  }
  std::sort(out.cycles.begin(), out.cycles.end());
  return out;
}

PairList exceptional_pairs(const SimpleGraph& g, std::size_t cycle_cap) {
  CycleList cyc = odd_cycles(g, cycle_cap);
  PairList out;
  out.complete = cyc.complete;
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> member;
  for (const auto& c : cyc.cycles) {
    std::vector<bool> m(n, false);
    for (auto v : c) m[v] = true;
    member.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < cyc.cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cyc.cycles.size(); ++j) {
      bool ok = true;
      for (auto v : cyc.cycles[j])
        if (member[i][v]) ok = false;
      for (std::size_t a = 0; a < cyc.cycles[i].size() && ok; ++a)
        for (auto w : g.neighbors(cyc.cycles[i][a]))
          if (member[j][w]) {
            ok = false;
            break;
          }
      if (!ok) continue;
      OddCyclePair p{cyc.cycles[i], cyc.cycles[j], IntVector(n, 0)};
      for (auto v : p.first) p.support[v] += 1;
      for (auto v : p.second) p.support[v] += 1;
      out.pairs.push_back(std::move(p));
    }
  return out;
}

NormalizationGenerators oh_normalization_generators(const SimpleGraph& g, std::size_t cycle_cap) {
  NormalizationGenerators out;
  PairList pairs = exceptional_pairs(g, cycle_cap);
  out.complete = pairs.complete;
  const auto comp = g.components();
  IntMatrix gens = edge_vectors(g);
  for (const auto& p : pairs.pairs)
    if (comp[p.first.front()] == comp[p.second.front()]) gens.append_row(p.support);
  out.generators = minimal_generators(gens);
  return out;
}

}  // namespace hilbgap
