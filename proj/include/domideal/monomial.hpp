#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "domideal/ring.hpp"

namespace domideal {

// A monomial in a fixed ring, stored as its exponent vector. Slot i holds
// the exponent of x_{i+1}; the ring is carried by the containing ideal.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);

  static Monomial one(int nvars);
  static Monomial variable(int nvars, int v);  // x_v, 1-based
  static Monomial from_support(int nvars, const std::vector<int>& vars);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int exponent(int v) const { return exps_[v - 1]; }  // 1-based
  const std::vector<int>& exponents() const { return exps_; }
  int degree() const { return degree_; }

  std::vector<int> support() const;  // 1-based indices with positive exponent
  bool is_one() const { return degree_ == 0; }
  bool is_squarefree() const;

  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

Monomial product(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
// a / gcd(a, b), the monomial colon quotient.
Monomial colon_quotient(const Monomial& a, const Monomial& b);
// Exponents clamped to one.
Monomial radical(const Monomial& a);
// Exponents outside `vars` (sorted, 1-based) set to zero.
Monomial erase_outside(const Monomial& a, const std::vector<int>& vars);

// Canonical generator order: total degree ascending, ties broken by
// lexicographic comparison of exponent vectors with x_1 heaviest (the
// larger exponent on the earliest differing variable sorts first).
bool graded_lex_less(const Monomial& a, const Monomial& b);

std::string to_string(const Monomial& m, const AmbientRing& ring);

}  // namespace domideal
