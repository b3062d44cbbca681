#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace domideal {

// Deterministic random source. mt19937_64 output is pinned by the standard
// and the bounded draws below avoid std::uniform_int_distribution, whose
// algorithm is implementation-defined; runs are reproducible across
// platforms for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [lo, hi] by rejection.
  int uniform_int(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
    std::uint64_t draw;
    do {
      draw = eng_();
    } while (draw >= limit);
    return lo + static_cast<int>(draw % span);
  }

  bool coin() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

// Stable stream derivation so that independent corpora drawn from one
// top-level seed do not overlap.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag);

}  // namespace domideal
