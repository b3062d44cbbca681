#include "domideal/rng.hpp"

namespace domideal {

std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag) {
  // FNV-1a over the tag, folded into the seed with a splitmix64 round.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace domideal
