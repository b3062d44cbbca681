#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace domideal {

// Fixed ambient polynomial ring with variables x_1..x_n. Coefficient
// arithmetic never enters any computation here, so the ring is just the
// variable set plus display names.
class AmbientRing {
 public:
  explicit AmbientRing(int nvars);
  AmbientRing(int nvars, std::vector<std::string> names);

  int nvars() const { return nvars_; }
  // 1-based variable index.
  const std::string& var_name(int v) const;
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const AmbientRing& a, const AmbientRing& b) {
    return a.names_ == b.names_;
  }

 private:
  int nvars_;
  std::vector<std::string> names_;  // always resolved to size nvars
};

class RingMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a generator list would exceed the configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultGeneratorCap = 50000;

}  // namespace domideal
