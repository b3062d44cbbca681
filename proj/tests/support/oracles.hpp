#pragma once

// Independent brute-force oracles used by the unit and acceptance suites.
// Everything here recomputes results from first principles (power-set
// sweeps, box enumeration, witness search) and deliberately avoids the
// library's optimized paths wherever a route is being cross-checked.

#include <string>
#include <vector>

#include "domideal/graph.hpp"
#include "domideal/ideal.hpp"
#include "domideal/prime.hpp"
#include "domideal/rng.hpp"

namespace test_support {

using domideal::AmbientRing;
using domideal::Graph;
using domideal::Monomial;
using domideal::MonomialIdeal;
using domideal::MonomialPrime;
using domideal::Rng;

// "1,2,0" -> x1*x2^2
Monomial mono(const std::string& exps);
MonomialIdeal ideal_of(int nvars, const std::vector<std::string>& gens);

// All monomials u with u_i <= bounds_i, in odometer order.
std::vector<Monomial> box_monomials(const std::vector<int>& bounds);

// Divisors of the lcm of the generators.
std::vector<Monomial> lcm_box(const MonomialIdeal& I);

// Membership agreement of two ideals over a box covering both generator
// ranges; equivalent to ideal equality.
bool same_ideal_by_sweep(const MonomialIdeal& A, const MonomialIdeal& B);

// Power-set enumeration of minimal dominating sets, independent of the
// library's pruned sweep.
std::vector<std::vector<int>> dominating_sets_by_powerset(const Graph& g);
std::vector<std::vector<int>> covers_by_powerset(int nverts,
                                                 const std::vector<std::vector<int>>& edges);

// Associated primes by witness search: all monomial primes of the form
// (I : v) with v dividing lcm(G(I)). Uses its own colon arithmetic.
std::vector<MonomialPrime> ass_by_witness_search(const MonomialIdeal& I);

// Random instances.
MonomialIdeal random_ideal(Rng& rng, int nvars, int max_gens, int max_exp);
MonomialIdeal random_squarefree_ideal(Rng& rng, int nvars, int max_gens);
Graph random_graph(Rng& rng, int nverts);

}  // namespace test_support
