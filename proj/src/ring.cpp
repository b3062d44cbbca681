#include "domideal/ring.hpp"

#include <set>

namespace domideal {

namespace {
std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}
}  // namespace

AmbientRing::AmbientRing(int nvars) : nvars_(nvars), names_(default_names(nvars)) {
  if (nvars < 1) throw std::invalid_argument("ring needs at least one variable");
}

AmbientRing::AmbientRing(int nvars, std::vector<std::string> names)
    : nvars_(nvars), names_(std::move(names)) {
  if (nvars < 1) throw std::invalid_argument("ring needs at least one variable");
  if (names_.empty()) {
    names_ = default_names(nvars);
    return;
  }
  if (static_cast<int>(names_.size()) != nvars)
    throw std::invalid_argument("expected one name per variable");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (static_cast<int>(seen.size()) != nvars)
    throw std::invalid_argument("variable names must be distinct");
}

const std::string& AmbientRing::var_name(int v) const {
  if (v < 1 || v > nvars_) throw std::invalid_argument("variable index out of range");
  return names_[v - 1];
}

}  // namespace domideal
