#pragma once

#include <utility>
#include <vector>

namespace domideal {

// Finite simple undirected graph on vertices 1..n.
class Graph {
 public:
  Graph(int nverts, std::vector<std::pair<int, int>> edges);

  static Graph path(int n);
  static Graph cycle(int n);  // n >= 3
  static Graph complete(int n);

  int nverts() const { return nverts_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.nverts_ == b.nverts_ && a.edges_ == b.edges_;
  }

 private:
  int nverts_;
  std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted
  std::vector<std::vector<int>> adj_;       // 0-based outer index
};

// Standard Pruefer decoding; the empty sequence yields the edge on two
// vertices. Entries must lie in 1..(len+2).
Graph tree_from_pruefer(const std::vector<int>& seq);
// Inverse of the above on trees with at least two vertices.
std::vector<int> pruefer_sequence(const Graph& tree);

std::vector<int> closed_neighborhood(const Graph& g, int v);
// Pendant vertex at every original vertex; whisker of i is nverts + i.
Graph whisker(const Graph& g);
// New apex nverts + 1 joined to every vertex.
Graph cone(const Graph& g);
// One new vertex nverts + 1 and the edge {v, nverts + 1}.
Graph add_pendant(const Graph& g, int v);

enum class FamilyKind { MinimalVertexCovers, MinimalDominatingSets, PathSets };

struct VertexSetFamily {
  FamilyKind kind;
  std::vector<std::vector<int>> sets;  // each sorted; family ordered by (size, lex)
};

VertexSetFamily minimal_dominating_sets(const Graph& g);
int dominating_number(const Graph& g);

// Vertex sets of simple paths on t vertices, deduplicated as sets. t >= 2.
VertexSetFamily enumerate_paths(const Graph& g, int t);

}  // namespace domideal
