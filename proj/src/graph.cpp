#include "domideal/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace domideal {

Graph::Graph(int nverts, std::vector<std::pair<int, int>> edges) : nverts_(nverts) {
  if (nverts < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::set<std::pair<int, int>> normalized;
  for (auto [u, v] : edges) {
    if (u < 1 || u > nverts || v < 1 || v > nverts)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    normalized.emplace(std::min(u, v), std::max(u, v));
  }
  edges_.assign(normalized.begin(), normalized.end());
  adj_.resize(nverts);
  for (auto [u, v] : edges_) {
    adj_[u - 1].push_back(v);
    adj_[v - 1].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n, 1);
  return Graph(n, std::move(e));
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 1 || v > nverts_) throw std::invalid_argument("vertex out of range");
  return adj_[v - 1];
}

bool Graph::has_edge(int u, int v) const {
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

Graph tree_from_pruefer(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size()) + 2;
  for (int s : seq)
    if (s < 1 || s > n) throw std::invalid_argument("pruefer entry out of range");
  std::vector<int> degree(n + 1, 1);
  for (int s : seq) ++degree[s];
  std::vector<std::pair<int, int>> edges;
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int s : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1) leaves.insert(s);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

std::vector<int> pruefer_sequence(const Graph& tree) {
  int n = tree.nverts();
  if (n < 2) throw std::invalid_argument("pruefer sequence needs at least two vertices");
  if (static_cast<int>(tree.edges().size()) != n - 1)
    throw std::invalid_argument("not a tree");
  std::vector<int> degree(n + 1, 0);
  std::vector<std::set<int>> adj(n + 1);
  for (auto [u, v] : tree.edges()) {
    ++degree[u];
    ++degree[v];
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<int> seq;
  for (int step = 0; step < n - 2; ++step) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    int parent = *adj[leaf].begin();
    seq.push_back(parent);
    adj[parent].erase(leaf);
    if (--degree[parent] == 1) leaves.insert(parent);
  }
  return seq;
}

std::vector<int> closed_neighborhood(const Graph& g, int v) {
  std::vector<int> out = g.neighbors(v);
  out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

Graph whisker(const Graph& g) {
  int n = g.nverts();
  std::vector<std::pair<int, int>> e = g.edges();
  for (int i = 1; i <= n; ++i) e.emplace_back(i, n + i);
  return Graph(2 * n, std::move(e));
}

Graph cone(const Graph& g) {
  int n = g.nverts();
  std::vector<std::pair<int, int>> e = g.edges();
  for (int i = 1; i <= n; ++i) e.emplace_back(i, n + 1);
  return Graph(n + 1, std::move(e));
}

Graph add_pendant(const Graph& g, int v) {
  int n = g.nverts();
  if (v < 1 || v > n) throw std::invalid_argument("vertex out of range");
  std::vector<std::pair<int, int>> e = g.edges();
  e.emplace_back(v, n + 1);
  return Graph(n + 1, std::move(e));
}

namespace {

// Inclusion-minimal subsets of 1..n satisfying a monotone predicate, by a
// power-set sweep in size order. A candidate containing an already-found
// minimal set is skipped; for monotone predicates the survivors that test
// true are exactly the minimal ones.
std::vector<std::uint32_t> minimal_monotone_subsets(
    int n, const std::vector<std::uint32_t>& required_hits) {
  if (n > 20) throw std::invalid_argument("power-set sweep is capped at 20 vertices");
  auto satisfies = [&](std::uint32_t s) {
    for (std::uint32_t r : required_hits)
      if ((s & r) == 0) return false;
    return true;
  };
  std::vector<std::uint32_t> found;
  for (int size = 0; size <= n; ++size) {
    // Gosper's hack over all size-subsets in increasing numeric order.
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
      if (!dominated && satisfies(s)) found.push_back(s);
      if (size == 0) break;
      std::uint32_t c = s & (~s + 1);
      std::uint32_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return found;
}

std::vector<std::vector<int>> masks_to_sets(int n, const std::vector<std::uint32_t>& masks) {
  std::vector<std::vector<int>> sets;
  sets.reserve(masks.size());
  for (std::uint32_t m : masks) {
    std::vector<int> s;
    for (int v = 1; v <= n; ++v)
      if (m & (1u << (v - 1))) s.push_back(v);
    sets.push_back(std::move(s));
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return sets;
}

}  // namespace

VertexSetFamily minimal_dominating_sets(const Graph& g) {
  int n = g.nverts();
  std::vector<std::uint32_t> hoods;
  hoods.reserve(n);
  for (int v = 1; v <= n; ++v) {
    std::uint32_t m = 0;
    for (int u : closed_neighborhood(g, v)) m |= 1u << (u - 1);
    hoods.push_back(m);
  }
  auto masks = minimal_monotone_subsets(n, hoods);
  return {FamilyKind::MinimalDominatingSets, masks_to_sets(n, masks)};
}

int dominating_number(const Graph& g) {
  auto family = minimal_dominating_sets(g);
  std::size_t best = g.nverts();
  for (const auto& s : family.sets) best = std::min(best, s.size());
  return static_cast<int>(best);
}

VertexSetFamily enumerate_paths(const Graph& g, int t) {
  if (t < 2) throw std::invalid_argument("paths need at least two vertices");
  std::set<std::vector<int>> found;
  std::vector<int> walk;
  std::vector<bool> used(g.nverts() + 1, false);
  auto dfs = [&](auto&& self, int v) -> void {
    walk.push_back(v);
    used[v] = true;
    if (static_cast<int>(walk.size()) == t) {
      std::vector<int> s = walk;
      std::sort(s.begin(), s.end());
      found.insert(std::move(s));
    } else {
      for (int u : g.neighbors(v))
        if (!used[u]) self(self, u);
    }
    used[v] = false;
    walk.pop_back();
  };
  for (int v = 1; v <= g.nverts(); ++v) dfs(dfs, v);
  std::vector<std::vector<int>> sets(found.begin(), found.end());
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return {FamilyKind::PathSets, std::move(sets)};
}

}  // namespace domideal
