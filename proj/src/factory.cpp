#include "domideal/factory.hpp"

#include <stdexcept>

namespace domideal {

AmbientRing vertex_ring(int nverts) { return AmbientRing(nverts); }

MonomialIdeal edge_ideal(const Hypergraph& h) {
  int n = h.nverts();
  std::vector<Monomial> raw;
  raw.reserve(h.edges().size());
  for (const auto& e : h.edges()) raw.push_back(Monomial::from_support(n, e));
  return MonomialIdeal(vertex_ring(n), std::move(raw));
}

MonomialIdeal edge_ideal(const Graph& g) { return edge_ideal(Hypergraph::from_graph(g)); }

MonomialIdeal cover_ideal(const Hypergraph& h) {
  int n = h.nverts();
  std::vector<Monomial> raw;
  for (const auto& cover : minimal_vertex_covers(h).sets)
    raw.push_back(Monomial::from_support(n, cover));
  return MonomialIdeal(vertex_ring(n), std::move(raw));
}

MonomialIdeal cover_ideal(const Graph& g) { return cover_ideal(Hypergraph::from_graph(g)); }

MonomialIdeal neighborhood_ideal(const Graph& g) {
  int n = g.nverts();
  std::vector<Monomial> raw;
  raw.reserve(n);
  for (int v = 1; v <= n; ++v)
    raw.push_back(Monomial::from_support(n, closed_neighborhood(g, v)));
  return MonomialIdeal(vertex_ring(n), std::move(raw));
}

MonomialIdeal dominating_ideal(const Graph& g) {
  int n = g.nverts();
  if (n > 20) return alexander_dual(neighborhood_ideal(g));
  std::vector<Monomial> raw;
  for (const auto& s : minimal_dominating_sets(g).sets)
    raw.push_back(Monomial::from_support(n, s));
  return MonomialIdeal(vertex_ring(n), std::move(raw));
}

MonomialIdeal path_ideal(const Graph& g, int t) {
  if (t < 2) throw std::invalid_argument("path ideal wants t >= 2");
  int n = g.nverts();
  std::vector<Monomial> raw;
  for (const auto& s : enumerate_paths(g, t).sets)
    raw.push_back(Monomial::from_support(n, s));
  return MonomialIdeal(vertex_ring(n), std::move(raw));
}

}  // namespace domideal
