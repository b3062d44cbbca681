#include "domideal/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "domideal/transversal.hpp"

namespace domideal {

std::vector<Monomial> antichain(std::vector<Monomial> raw) {
  std::sort(raw.begin(), raw.end(), graded_lex_less);
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<Monomial> kept;
  kept.reserve(raw.size());
  // Sorted by degree, so any strict divisor of m precedes m and was kept
  // or is itself dominated by an earlier kept element.
  for (const Monomial& m : raw) {
    bool dominated = false;
    for (const Monomial& k : kept) {
      if (k.divides(m)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(m);
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(AmbientRing ring, std::vector<Monomial> raw)
    : ring_(std::move(ring)) {
  for (const Monomial& m : raw)
    if (m.nvars() != ring_.nvars())
      throw RingMismatchError("generator does not live in the ambient ring");
  gens_ = antichain(std::move(raw));
}

MonomialIdeal MonomialIdeal::zero(AmbientRing ring) {
  return MonomialIdeal(std::move(ring), {});
}

MonomialIdeal MonomialIdeal::unit(AmbientRing ring) {
  int n = ring.nvars();
  return MonomialIdeal(std::move(ring), {Monomial::one(n)});
}

bool MonomialIdeal::is_squarefree() const {
  for (const Monomial& m : gens_)
    if (!m.is_squarefree()) return false;
  return true;
}

MonomialIdeal minimalize(const AmbientRing& ring, std::vector<Monomial> raw) {
  return MonomialIdeal(ring, std::move(raw));
}

namespace {

void require_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (!(I.ring() == J.ring())) throw RingMismatchError("ideals live in different rings");
}

void require_same_ring(const MonomialIdeal& I, const Monomial& u) {
  if (u.nvars() != I.ring().nvars())
    throw RingMismatchError("monomial does not live in the ambient ring");
}

}  // namespace

bool contains(const MonomialIdeal& I, const Monomial& u) {
  require_same_ring(I, u);
  for (const Monomial& g : I.gens())
    if (g.divides(u)) return true;
  return false;
}

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J,
                       std::size_t gen_cap) {
  require_same_ring(I, J);
  const auto& a = I.gens();
  const auto& b = J.gens();
  if (a.empty() || b.empty()) return MonomialIdeal::zero(I.ring());
  if (a.size() * b.size() > gen_cap)
    throw ResourceLimitError("product would exceed the generator cap");
  std::vector<Monomial> raw;
  raw.reserve(a.size() * b.size());
  for (const Monomial& u : a)
    for (const Monomial& v : b) raw.push_back(product(u, v));
  return MonomialIdeal(I.ring(), std::move(raw));
}

MonomialIdeal power(const MonomialIdeal& I, int k, std::size_t gen_cap) {
  if (k < 0) throw std::invalid_argument("power wants a non-negative exponent");
  if (k == 0) return MonomialIdeal::unit(I.ring());
  MonomialIdeal acc = I;
  for (int i = 1; i < k; ++i) acc = multiply(acc, I, gen_cap);
  return acc;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  const auto& a = I.gens();
  const auto& b = J.gens();
  std::vector<Monomial> raw;
  raw.reserve(a.size() * b.size());
  for (const Monomial& u : a)
    for (const Monomial& v : b) raw.push_back(lcm(u, v));
  return MonomialIdeal(I.ring(), std::move(raw));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& g) {
  require_same_ring(I, g);
  std::vector<Monomial> raw;
  raw.reserve(I.gens().size());
  for (const Monomial& m : I.gens()) raw.push_back(colon_quotient(m, g));
  return MonomialIdeal(I.ring(), std::move(raw));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  if (J.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  bool first = true;
  MonomialIdeal acc = MonomialIdeal::zero(I.ring());
  for (const Monomial& g : J.gens()) {
    MonomialIdeal part = colon(I, g);
    acc = first ? part : intersect(acc, part);
    first = false;
  }
  return acc;
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> raw;
  raw.reserve(I.gens().size());
  for (const Monomial& m : I.gens()) raw.push_back(radical(m));
  return MonomialIdeal(I.ring(), std::move(raw));
}

MonomialIdeal add(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  std::vector<Monomial> raw = I.gens();
  raw.insert(raw.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal(I.ring(), std::move(raw));
}

MonomialIdeal scale(const Monomial& m, const MonomialIdeal& I) {
  require_same_ring(I, m);
  std::vector<Monomial> raw;
  raw.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) raw.push_back(product(m, g));
  return MonomialIdeal(I.ring(), std::move(raw));
}

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("alexander dual of the zero ideal");
  if (I.is_unit()) throw std::invalid_argument("alexander dual of the unit ideal");
  if (!I.is_squarefree())
    throw std::invalid_argument("alexander dual wants a square-free ideal");
  std::vector<std::vector<int>> supports;
  supports.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) supports.push_back(g.support());
  int n = I.ring().nvars();
  std::vector<Monomial> raw;
  for (const auto& t : minimal_transversals(n, supports))
    raw.push_back(Monomial::from_support(n, t));
  return MonomialIdeal(I.ring(), std::move(raw));
}

std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < I.gens().size(); ++i) {
    if (i) out << ", ";
    out << to_string(I.gens()[i], I.ring());
  }
  out << ")";
  return out.str();
}

}  // namespace domideal
