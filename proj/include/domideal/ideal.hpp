#pragma once

#include <string>
#include <vector>

#include "domideal/monomial.hpp"
#include "domideal/ring.hpp"

namespace domideal {

// Monomial ideal held in canonical form: the generators are the unique
// divisibility antichain, sorted by graded_lex_less. Structural equality of
// two values is equality of ideals. Empty generator list is the zero ideal;
// the single generator 1 is the unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal(AmbientRing ring, std::vector<Monomial> raw);

  static MonomialIdeal zero(AmbientRing ring);
  static MonomialIdeal unit(AmbientRing ring);

  const AmbientRing& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }

 private:
  AmbientRing ring_;
  std::vector<Monomial> gens_;
};

// Divisibility antichain of `raw`, canonically sorted.
MonomialIdeal minimalize(const AmbientRing& ring, std::vector<Monomial> raw);

// Antichain reduction of bare exponent vectors; the shared workhorse.
std::vector<Monomial> antichain(std::vector<Monomial> raw);

bool contains(const MonomialIdeal& I, const Monomial& u);

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J,
                       std::size_t gen_cap = kDefaultGeneratorCap);
MonomialIdeal power(const MonomialIdeal& I, int k,
                    std::size_t gen_cap = kDefaultGeneratorCap);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& g);
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal radical(const MonomialIdeal& I);
// Ideal sum, minimalized.
MonomialIdeal add(const MonomialIdeal& I, const MonomialIdeal& J);
// m * I.
MonomialIdeal scale(const Monomial& m, const MonomialIdeal& I);

// Alexander dual of a square-free proper nonzero ideal, computed as the
// minimal transversals of the supports of the generators.
MonomialIdeal alexander_dual(const MonomialIdeal& I);

std::string to_string(const MonomialIdeal& I);

}  // namespace domideal
