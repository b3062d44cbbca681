#include "support/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>

namespace test_support {

Monomial mono(const std::string& exps) {
  std::vector<int> e;
  std::stringstream in(exps);
  std::string part;
  while (std::getline(in, part, ',')) e.push_back(std::stoi(part));
  return Monomial(std::move(e));
}

MonomialIdeal ideal_of(int nvars, const std::vector<std::string>& gens) {
  std::vector<Monomial> raw;
  raw.reserve(gens.size());
  for (const auto& g : gens) raw.push_back(mono(g));
  return MonomialIdeal(AmbientRing(nvars), std::move(raw));
}

std::vector<Monomial> box_monomials(const std::vector<int>& bounds) {
  std::vector<Monomial> out;
  std::vector<int> e(bounds.size(), 0);
  while (true) {
    out.push_back(Monomial(e));
    std::size_t i = 0;
    while (i < e.size() && e[i] == bounds[i]) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  return out;
}

std::vector<Monomial> lcm_box(const MonomialIdeal& I) {
  std::vector<int> bounds(I.ring().nvars(), 0);
  for (const auto& g : I.gens())
    for (int v = 1; v <= g.nvars(); ++v)
      bounds[v - 1] = std::max(bounds[v - 1], g.exponent(v));
  return box_monomials(bounds);
}

bool same_ideal_by_sweep(const MonomialIdeal& A, const MonomialIdeal& B) {
  if (!(A.ring() == B.ring())) return false;
  std::vector<int> bounds(A.ring().nvars(), 0);
  for (const auto* ideal : {&A, &B})
    for (const auto& g : ideal->gens())
      for (int v = 1; v <= g.nvars(); ++v)
        bounds[v - 1] = std::max(bounds[v - 1], g.exponent(v));
  for (const auto& u : box_monomials(bounds)) {
    bool in_a = false, in_b = false;
    for (const auto& g : A.gens()) in_a = in_a || g.divides(u);
    for (const auto& g : B.gens()) in_b = in_b || g.divides(u);
    if (in_a != in_b) return false;
  }
  return true;
}

std::vector<std::vector<int>> dominating_sets_by_powerset(const Graph& g) {
  int n = g.nverts();
  if (n > 22) throw std::invalid_argument("oracle sweep too large");
  std::vector<std::uint32_t> hoods;
  for (int v = 1; v <= n; ++v) {
    std::uint32_t m = 1u << (v - 1);
    for (int u : g.neighbors(v)) m |= 1u << (u - 1);
    hoods.push_back(m);
  }
  auto dominating = [&](std::uint32_t s) {
    for (std::uint32_t h : hoods)
      if ((s & h) == 0) return false;
    return true;
  };
  std::vector<std::vector<int>> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (!dominating(s)) continue;
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v)
      if ((s >> v) & 1)
        if (dominating(s & ~(1u << v))) minimal = false;
    if (minimal) {
      std::vector<int> set;
      for (int v = 1; v <= n; ++v)
        if ((s >> (v - 1)) & 1) set.push_back(v);
      out.push_back(std::move(set));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<int>> covers_by_powerset(
    int nverts, const std::vector<std::vector<int>>& edges) {
  if (nverts > 22) throw std::invalid_argument("oracle sweep too large");
  std::vector<std::uint32_t> masks;
  for (const auto& e : edges) {
    std::uint32_t m = 0;
    for (int v : e) m |= 1u << (v - 1);
    masks.push_back(m);
  }
  auto covers = [&](std::uint32_t s) {
    for (std::uint32_t e : masks)
      if ((s & e) == 0) return false;
    return true;
  };
  std::vector<std::vector<int>> out;
  for (std::uint32_t s = 0; s < (1u << nverts); ++s) {
    if (!covers(s)) continue;
    bool minimal = true;
    for (int v = 0; v < nverts && minimal; ++v)
      if ((s >> v) & 1)
        if (covers(s & ~(1u << v))) minimal = false;
    if (minimal) {
      std::vector<int> set;
      for (int v = 1; v <= nverts; ++v)
        if ((s >> (v - 1)) & 1) set.push_back(v);
      out.push_back(std::move(set));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<MonomialPrime> ass_by_witness_search(const MonomialIdeal& I) {
  // (I : v) computed with bare exponent arithmetic, then tested for being
  // generated by exactly the variables of a candidate prime.
  int n = I.ring().nvars();
  std::set<MonomialPrime> found;
  for (const auto& v : lcm_box(I)) {
    std::vector<Monomial> quotients;
    quotients.reserve(I.gens().size());
    for (const auto& g : I.gens()) {
      std::vector<int> e(n);
      for (int i = 1; i <= n; ++i)
        e[i - 1] = std::max(g.exponent(i) - v.exponent(i), 0);
      quotients.push_back(Monomial(std::move(e)));
    }
    // the quotient ideal equals a prime iff every variable either appears
    // as a bare generator or no quotient uses it, and no quotient escapes
    // the bare-variable set
    std::vector<int> bare;
    for (const auto& q : quotients)
      if (q.degree() == 1) bare.push_back(q.support()[0]);
    std::sort(bare.begin(), bare.end());
    bare.erase(std::unique(bare.begin(), bare.end()), bare.end());
    if (bare.empty()) continue;
    bool is_prime = true;
    for (const auto& q : quotients) {
      bool dominated = false;
      for (int b : bare)
        if (q.exponent(b) >= 1) dominated = true;
      if (!dominated) is_prime = false;  // q (possibly 1) lies outside the prime
    }
    if (is_prime) found.insert(MonomialPrime(bare));
  }
  return {found.begin(), found.end()};
}

MonomialIdeal random_ideal(Rng& rng, int nvars, int max_gens, int max_exp) {
  int n = nvars;
  int g = rng.uniform_int(1, max_gens);
  std::vector<Monomial> raw;
  for (int i = 0; i < g; ++i) {
    std::vector<int> e(n, 0);
    int degree = 0;
    for (int j = 0; j < n; ++j) degree += (e[j] = rng.uniform_int(0, max_exp));
    if (degree == 0) e[rng.uniform_int(0, n - 1)] = 1;
    raw.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(AmbientRing(n), std::move(raw));
}

MonomialIdeal random_squarefree_ideal(Rng& rng, int nvars, int max_gens) {
  int n = nvars;
  int g = rng.uniform_int(1, max_gens);
  std::vector<Monomial> raw;
  for (int i = 0; i < g; ++i) {
    std::vector<int> e(n, 0);
    int degree = 0;
    for (int j = 0; j < n; ++j) degree += (e[j] = rng.uniform_int(0, 1));
    if (degree == 0) e[rng.uniform_int(0, n - 1)] = 1;
    if (degree == n && n > 1) e[rng.uniform_int(0, n - 1)] = 0;
    raw.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(AmbientRing(n), std::move(raw));
}

Graph random_graph(Rng& rng, int nverts) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= nverts; ++u)
    for (int v = u + 1; v <= nverts; ++v)
      if (rng.coin()) edges.emplace_back(u, v);
  return Graph(nverts, std::move(edges));
}

}  // namespace test_support
