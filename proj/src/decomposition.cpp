#include "domideal/decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "domideal/transversal.hpp"

namespace domideal {

namespace {

void require_proper_nonzero(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("zero ideal");
  if (I.is_unit()) throw std::invalid_argument("unit ideal");
}

struct GensKey {
  std::vector<int> flat;
  friend bool operator==(const GensKey&, const GensKey&) = default;
};

struct GensKeyHash {
  std::size_t operator()(const GensKey& k) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : k.flat) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b9;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

GensKey key_of(const std::vector<Monomial>& gens) {
  GensKey k;
  k.flat.reserve(gens.size() * (gens.empty() ? 0 : gens[0].nvars()));
  for (const auto& g : gens)
    k.flat.insert(k.flat.end(), g.exponents().begin(), g.exponents().end());
  return k;
}

// Drop components containing the intersection of the others. For an
// irreducible Q the test uses the largest monomial outside Q: redundancy of
// Q means that witness lies in every other component.
std::vector<IrreducibleComponent> irredundant(
    std::vector<IrreducibleComponent> comps, int nvars) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  int big = 1;
  for (const auto& c : comps)
    for (auto [v, e] : c.entries()) big = std::max(big, e + 1);
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      std::vector<int> corner(nvars, big);
      for (auto [v, e] : comps[j].entries()) corner[v - 1] = e - 1;
      Monomial w{corner};
      bool in_all_others = true;
      for (std::size_t i = 0; i < comps.size() && in_all_others; ++i)
        if (i != j && !comps[i].member(w)) in_all_others = false;
      if (in_all_others && comps.size() > 1) {
        comps.erase(comps.begin() + j);
        removed = true;
        break;
      }
    }
  }
  return comps;
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
  require_proper_nonzero(I);
  std::set<IrreducibleComponent> leaves;
  std::unordered_set<GensKey, GensKeyHash> visited;
  std::vector<std::vector<Monomial>> stack = {I.gens()};
  visited.insert(key_of(I.gens()));
  while (!stack.empty()) {
    std::vector<Monomial> gens = std::move(stack.back());
    stack.pop_back();
    int split_at = -1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].support().size() >= 2) {
        split_at = static_cast<int>(i);
        break;
      }
    }
    if (split_at < 0) {
      // all generators are pure powers; the antichain keeps one per variable
      std::vector<std::pair<int, int>> entries;
      for (const auto& g : gens) {
        int v = g.support()[0];
        entries.emplace_back(v, g.exponent(v));
      }
      leaves.insert(IrreducibleComponent(std::move(entries)));
      continue;
    }
    const Monomial m = gens[static_cast<std::size_t>(split_at)];
    int v = m.support()[0];
    std::vector<int> ea(m.nvars(), 0), eb = m.exponents();
    ea[v - 1] = m.exponent(v);
    eb[v - 1] = 0;
    for (Monomial part : {Monomial(std::move(ea)), Monomial(std::move(eb))}) {
      std::vector<Monomial> child = gens;
      child[static_cast<std::size_t>(split_at)] = std::move(part);
      child = antichain(std::move(child));
      GensKey k = key_of(child);
      if (visited.insert(std::move(k)).second) stack.push_back(std::move(child));
    }
  }
  return irredundant({leaves.begin(), leaves.end()}, I.ring().nvars());
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I) {
  std::set<MonomialPrime> primes;
  for (const auto& c : irreducible_decomposition(I)) primes.insert(c.radical());
  return {primes.begin(), primes.end()};
}

MonomialIdeal localize(const MonomialIdeal& I, const MonomialPrime& p) {
  std::vector<Monomial> raw;
  raw.reserve(I.gens().size());
  for (const auto& g : I.gens()) raw.push_back(erase_outside(g, p.vars()));
  return MonomialIdeal(I.ring(), std::move(raw));
}

bool prime_is_associated(const MonomialIdeal& I, const MonomialPrime& p) {
  require_proper_nonzero(I);
  MonomialIdeal local = localize(I, p);
  if (local.is_unit()) return false;
  int n = I.ring().nvars();
  // the localized support must be all of p, otherwise no witness can step
  // into the ideal along the missing variable
  std::vector<int> maxexp(n, 0);
  for (const auto& g : local.gens())
    for (int v : g.support()) maxexp[v - 1] = std::max(maxexp[v - 1], g.exponent(v));
  for (int v : p.vars())
    if (maxexp[v - 1] == 0) return false;
  // sweep w with w_v <= maxexp_v - 1 on p, looking for w outside the ideal
  // whose every variable step lands inside
  const auto& vars = p.vars();
  std::vector<int> w(n, 0);
  auto member = [&](const Monomial& u) {
    for (const auto& g : local.gens())
      if (g.divides(u)) return true;
    return false;
  };
  while (true) {
    Monomial cand{w};
    if (!member(cand)) {
      bool socle = true;
      for (int v : vars) {
        std::vector<int> up = w;
        ++up[v - 1];
        if (!member(Monomial(std::move(up)))) {
          socle = false;
          break;
        }
      }
      if (socle) return true;
    }
    std::size_t i = 0;
    while (i < vars.size() && w[vars[i] - 1] == maxexp[vars[i] - 1] - 1)
      w[vars[i++] - 1] = 0;
    if (i == vars.size()) break;
    ++w[vars[i] - 1];
  }
  return false;
}

std::vector<MonomialPrime> associated_primes_localized(const MonomialIdeal& I) {
  require_proper_nonzero(I);
  // candidates are the transversal subsets of the generator supports,
  // enumerated over the joint support
  std::vector<int> supp_vars;
  {
    std::set<int> s;
    for (const auto& g : I.gens())
      for (int v : g.support()) s.insert(v);
    supp_vars.assign(s.begin(), s.end());
  }
  int m = static_cast<int>(supp_vars.size());
  if (m > 24) throw std::invalid_argument("support too large for the prime sweep");
  std::vector<std::uint32_t> gen_masks;
  gen_masks.reserve(I.gens().size());
  for (const auto& g : I.gens()) {
    std::uint32_t mask = 0;
    for (int v : g.support()) {
      int idx = static_cast<int>(std::lower_bound(supp_vars.begin(), supp_vars.end(), v) -
                                 supp_vars.begin());
      mask |= 1u << idx;
    }
    gen_masks.push_back(mask);
  }
  std::vector<MonomialPrime> out;
  for (std::uint32_t s = 1; s < (1u << m); ++s) {
    bool transversal = true;
    for (std::uint32_t g : gen_masks)
      if ((s & g) == 0) {
        transversal = false;
        break;
      }
    if (!transversal) continue;
    std::vector<int> vars;
    for (int i = 0; i < m; ++i)
      if (s & (1u << i)) vars.push_back(supp_vars[i]);
    MonomialPrime p(std::move(vars));
    if (prime_is_associated(I, p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I) {
  require_proper_nonzero(I);
  std::vector<std::vector<int>> supports;
  supports.reserve(I.gens().size());
  for (const auto& g : I.gens()) supports.push_back(g.support());
  std::vector<MonomialPrime> out;
  for (auto& t : minimal_transversals(I.ring().nvars(), supports))
    out.push_back(MonomialPrime(std::move(t)));
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal symbolic_power(const MonomialIdeal& I, int k, std::size_t gen_cap) {
  require_proper_nonzero(I);
  if (k < 1) throw std::invalid_argument("symbolic power wants k >= 1");
  MonomialIdeal pk = power(I, k, gen_cap);
  std::vector<MonomialIdeal> parts;
  for (const auto& p : minimal_primes(I)) parts.push_back(localize(pk, p));
  // balanced intersection keeps the intermediate generator counts small
  while (parts.size() > 1) {
    std::vector<MonomialIdeal> next;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
      next.push_back(intersect(parts[i], parts[i + 1]));
    if (parts.size() % 2) next.push_back(parts.back());
    parts = std::move(next);
  }
  return parts.front();
}

}  // namespace domideal
