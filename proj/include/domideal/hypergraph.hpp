#pragma once

#include <vector>

#include "domideal/graph.hpp"

namespace domideal {

// Finite hypergraph on vertices 1..n. The raw edge list is preserved as
// given (sorted, deduplicated); the antichain of edges is available on
// demand for clutter-valued constructions.
class Hypergraph {
 public:
  Hypergraph(int nverts, std::vector<std::vector<int>> edges);

  static Hypergraph from_graph(const Graph& g);

  int nverts() const { return nverts_; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  std::vector<std::vector<int>> minimal_edges() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.nverts_ == b.nverts_ && a.edges_ == b.edges_;
  }

 private:
  int nverts_;
  std::vector<std::vector<int>> edges_;
};

// t new vertices n+1..n+t and the single new edge {v, n+1, ..., n+t}.
Hypergraph attach_hyperedge(const Hypergraph& h, int v, int t);

// Power-set sweep with monotonicity pruning; independent of the
// transversal engine used by the Alexander dual.
VertexSetFamily minimal_vertex_covers(const Hypergraph& h);

}  // namespace domideal
