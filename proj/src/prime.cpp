#include "domideal/prime.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace domideal {

MonomialPrime::MonomialPrime(std::vector<int> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  if (vars_.empty()) throw std::invalid_argument("monomial prime needs a variable");
  if (vars_.front() < 1) throw std::invalid_argument("variable index out of range");
}

bool MonomialPrime::contains_var(int v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

MonomialIdeal MonomialPrime::to_ideal(const AmbientRing& ring) const {
  std::vector<Monomial> gens;
  gens.reserve(vars_.size());
  for (int v : vars_) gens.push_back(Monomial::variable(ring.nvars(), v));
  return MonomialIdeal(ring, std::move(gens));
}

std::string to_string(const MonomialPrime& p, const AmbientRing& ring) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    if (i) out << ",";
    out << ring.var_name(p.vars()[i]);
  }
  out << ")";
  return out.str();
}

IrreducibleComponent::IrreducibleComponent(std::vector<std::pair<int, int>> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  if (entries_.empty()) throw std::invalid_argument("component needs a variable");
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
    if (entries_[i].first == entries_[i + 1].first)
      throw std::invalid_argument("duplicate variable in component");
  for (auto [v, e] : entries_) {
    if (v < 1) throw std::invalid_argument("variable index out of range");
    if (e < 1) throw std::invalid_argument("component exponents must be positive");
  }
}

MonomialPrime IrreducibleComponent::radical() const {
  std::vector<int> vars;
  vars.reserve(entries_.size());
  for (auto [v, e] : entries_) vars.push_back(v);
  return MonomialPrime(std::move(vars));
}

MonomialIdeal IrreducibleComponent::to_ideal(const AmbientRing& ring) const {
  std::vector<Monomial> gens;
  gens.reserve(entries_.size());
  for (auto [v, e] : entries_) {
    std::vector<int> exps(ring.nvars(), 0);
    exps[v - 1] = e;
    gens.push_back(Monomial(std::move(exps)));
  }
  return MonomialIdeal(ring, std::move(gens));
}

bool IrreducibleComponent::member(const Monomial& u) const {
  for (auto [v, e] : entries_)
    if (u.exponent(v) >= e) return true;
  return false;
}

std::string to_string(const IrreducibleComponent& q, const AmbientRing& ring) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < q.entries().size(); ++i) {
    if (i) out << ",";
    auto [v, e] = q.entries()[i];
    out << ring.var_name(v);
    if (e > 1) out << "^" << e;
  }
  out << ")";
  return out.str();
}

}  // namespace domideal
