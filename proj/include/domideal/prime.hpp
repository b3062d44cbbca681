#pragma once

#include <string>
#include <utility>
#include <vector>

#include "domideal/ideal.hpp"

namespace domideal {

// Monomial prime ideal (x_i : i in vars). vars is a sorted non-empty set of
// 1-based indices; the maximal ideal has vars = 1..n.
class MonomialPrime {
 public:
  explicit MonomialPrime(std::vector<int> vars);

  const std::vector<int>& vars() const { return vars_; }
  int size() const { return static_cast<int>(vars_.size()); }
  bool is_maximal(int nvars) const { return size() == nvars; }
  bool contains_var(int v) const;

  MonomialIdeal to_ideal(const AmbientRing& ring) const;

  friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
    return a.vars_ == b.vars_;
  }
  // Size first, then lexicographic; fixes display and profile order.
  friend bool operator<(const MonomialPrime& a, const MonomialPrime& b) {
    if (a.vars_.size() != b.vars_.size()) return a.vars_.size() < b.vars_.size();
    return a.vars_ < b.vars_;
  }

 private:
  std::vector<int> vars_;
};

std::string to_string(const MonomialPrime& p, const AmbientRing& ring);

// Irreducible monomial ideal (x_i^{a_i} : i in keys), entries sorted by
// variable with every exponent positive.
class IrreducibleComponent {
 public:
  explicit IrreducibleComponent(std::vector<std::pair<int, int>> entries);

  const std::vector<std::pair<int, int>>& entries() const { return entries_; }
  MonomialPrime radical() const;
  MonomialIdeal to_ideal(const AmbientRing& ring) const;
  bool member(const Monomial& u) const;

  friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<std::pair<int, int>> entries_;
};

std::string to_string(const IrreducibleComponent& q, const AmbientRing& ring);

}  // namespace domideal
