#pragma once

#include "domideal/graph.hpp"
#include "domideal/hypergraph.hpp"
#include "domideal/ideal.hpp"

namespace domideal {

// Default ring for a graph or hypergraph: one variable per vertex.
AmbientRing vertex_ring(int nverts);

MonomialIdeal edge_ideal(const Hypergraph& h);
MonomialIdeal edge_ideal(const Graph& g);

// Generated by the products over minimal vertex covers; coincides with the
// Alexander dual of the edge ideal.
MonomialIdeal cover_ideal(const Hypergraph& h);
MonomialIdeal cover_ideal(const Graph& g);

// Generated by the closed-neighborhood products, minimalized.
MonomialIdeal neighborhood_ideal(const Graph& g);

// Generated by the products over minimal dominating sets; for more than 20
// vertices falls back to the Alexander dual of the neighborhood ideal.
MonomialIdeal dominating_ideal(const Graph& g);

// Generated by the t-vertex simple path sets. t >= 2; I_2 is the edge ideal.
MonomialIdeal path_ideal(const Graph& g, int t);

}  // namespace domideal
