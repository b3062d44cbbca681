#include "domideal/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace domideal {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

Monomial Monomial::variable(int nvars, int v) {
  if (v < 1 || v > nvars) throw std::invalid_argument("variable index out of range");
  std::vector<int> e(nvars, 0);
  e[v - 1] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::from_support(int nvars, const std::vector<int>& vars) {
  std::vector<int> e(nvars, 0);
  for (int v : vars) {
    if (v < 1 || v > nvars) throw std::invalid_argument("variable index out of range");
    e[v - 1] = 1;
  }
  return Monomial(std::move(e));
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (int i = 0; i < nvars(); ++i)
    if (exps_[i] > 0) out.push_back(i + 1);
  return out;
}

bool Monomial::is_squarefree() const {
  for (int e : exps_)
    if (e > 1) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  const int n = nvars();
  for (int i = 0; i < n; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial product(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.exponents());
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.exponents());
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], eb[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.exponents());
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], eb[i]);
  return Monomial(std::move(e));
}

Monomial colon_quotient(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.exponents());
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i] - eb[i], 0);
  return Monomial(std::move(e));
}

Monomial radical(const Monomial& a) {
  std::vector<int> e(a.exponents());
  for (auto& x : e) x = x > 0 ? 1 : 0;
  return Monomial(std::move(e));
}

Monomial erase_outside(const Monomial& a, const std::vector<int>& vars) {
  std::vector<int> e(a.nvars(), 0);
  for (int v : vars) e[v - 1] = a.exponent(v);
  return Monomial(std::move(e));
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] != eb[i]) return ea[i] > eb[i];
  return false;
}

std::string to_string(const Monomial& m, const AmbientRing& ring) {
  if (m.is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int v = 1; v <= m.nvars(); ++v) {
    int e = m.exponent(v);
    if (e == 0) continue;
    if (!first) out << "*";
    out << ring.var_name(v);
    if (e > 1) out << "^" << e;
    first = false;
  }
  return out.str();
}

}  // namespace domideal
