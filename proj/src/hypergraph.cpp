#include "domideal/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace domideal {

Hypergraph::Hypergraph(int nverts, std::vector<std::vector<int>> edges)
    : nverts_(nverts) {
  if (nverts < 1) throw std::invalid_argument("hypergraph needs at least one vertex");
  std::set<std::vector<int>> normalized;
  for (auto& e : edges) {
    if (e.empty()) throw std::invalid_argument("empty edge");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (int v : e)
      if (v < 1 || v > nverts) throw std::invalid_argument("edge vertex out of range");
    normalized.insert(std::move(e));
  }
  edges_.assign(normalized.begin(), normalized.end());
}

Hypergraph Hypergraph::from_graph(const Graph& g) {
  std::vector<std::vector<int>> edges;
  edges.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Hypergraph(g.nverts(), std::move(edges));
}

std::vector<std::vector<int>> Hypergraph::minimal_edges() const {
  std::vector<std::vector<int>> sorted = edges_;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<std::vector<int>> kept;
  for (const auto& e : sorted) {
    bool dominated = false;
    for (const auto& k : kept) {
      if (std::includes(e.begin(), e.end(), k.begin(), k.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(e);
  }
  return kept;
}

Hypergraph attach_hyperedge(const Hypergraph& h, int v, int t) {
  if (v < 1 || v > h.nverts()) throw std::invalid_argument("vertex out of range");
  if (t < 1) throw std::invalid_argument("need at least one new vertex");
  int n = h.nverts();
  std::vector<std::vector<int>> edges = h.edges();
  std::vector<int> fresh = {v};
  for (int i = 1; i <= t; ++i) fresh.push_back(n + i);
  edges.push_back(std::move(fresh));
  return Hypergraph(n + t, std::move(edges));
}

VertexSetFamily minimal_vertex_covers(const Hypergraph& h) {
  int n = h.nverts();
  if (n > 20) throw std::invalid_argument("power-set sweep is capped at 20 vertices");
  std::vector<std::uint32_t> edge_masks;
  for (const auto& e : h.edges()) {
    std::uint32_t m = 0;
    for (int v : e) m |= 1u << (v - 1);
    edge_masks.push_back(m);
  }
  auto covers = [&](std::uint32_t s) {
    for (std::uint32_t e : edge_masks)
      if ((s & e) == 0) return false;
    return true;
  };
  std::vector<std::uint32_t> found;
  for (int size = 0; size <= n; ++size) {
    std::uint32_t s = size == 0 ? 0u : (1u << size) - 1;
    std::uint32_t limit = 1u << n;
    while (s < limit) {
      bool dominated = false;
      for (std::uint32_t f : found) {
        if ((s & f) == f) {
          dominated = true;
          break;
        }
      }
      if (!dominated && covers(s)) found.push_back(s);
      if (size == 0) break;
      std::uint32_t c = s & (~s + 1);
      std::uint32_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  std::vector<std::vector<int>> sets;
  sets.reserve(found.size());
  for (std::uint32_t m : found) {
    std::vector<int> set;
    for (int v = 1; v <= n; ++v)
      if (m & (1u << (v - 1))) set.push_back(v);
    sets.push_back(std::move(set));
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return {FamilyKind::MinimalVertexCovers, std::move(sets)};
}

}  // namespace domideal
