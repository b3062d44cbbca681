#pragma once

#include <vector>

#include "domideal/ideal.hpp"
#include "domideal/prime.hpp"

namespace domideal {

// Irredundant irreducible decomposition by generator splitting: the first
// generator (canonical order) with at least two support variables is split
// at its lowest support variable into coprime factors, branching the
// problem in two; subproblems are memoized by canonical generator
// sequence. Leaves are pure-power ideals. Requires a proper nonzero ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I);

// Radicals of the irredundant irreducible components.
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I);

// Same set by prime-by-prime socle tests: p is associated iff the monomial
// localization I(p) has a witness w outside I(p) with w*x_i inside for
// every i in p; witnesses live under the lcm of the localized generators.
// Much faster on large powers, cross-checked against the primary route in
// the test corpus.
std::vector<MonomialPrime> associated_primes_localized(const MonomialIdeal& I);
bool prime_is_associated(const MonomialIdeal& I, const MonomialPrime& p);

// Minimal primes = minimal transversals of the generator supports.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I);

// Generators with the variables outside p erased (set to exponent zero),
// minimalized: the monomial localization of I at p.
MonomialIdeal localize(const MonomialIdeal& I, const MonomialPrime& p);

// k-th symbolic power: intersection over the minimal primes p of the
// p-primary component of I^k, each obtained by localize-and-erase.
MonomialIdeal symbolic_power(const MonomialIdeal& I, int k,
                             std::size_t gen_cap = kDefaultGeneratorCap);

}  // namespace domideal
