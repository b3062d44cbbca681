#include "domideal/transversal.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace domideal {

namespace {

// Keep only masks that contain no other mask of the family.
std::vector<std::uint64_t> mask_antichain(std::vector<std::uint64_t> raw) {
  std::sort(raw.begin(), raw.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<std::uint64_t> kept;
  for (std::uint64_t m : raw) {
    bool dominated = false;
    for (std::uint64_t k : kept) {
      if ((k & m) == k) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(m);
  }
  return kept;
}

}  // namespace

std::vector<std::uint64_t> minimal_transversal_masks(
    int n, const std::vector<std::uint64_t>& sets) {
  if (n < 0 || n > 64) throw std::invalid_argument("transversal: need 0 <= n <= 64");
  std::vector<std::uint64_t> family = {0};
  for (std::uint64_t edge : sets) {
    if (edge == 0) return {};
    std::vector<std::uint64_t> next;
    next.reserve(family.size() * 2);
    for (std::uint64_t t : family) {
      if (t & edge) {
        next.push_back(t);
        continue;
      }
      std::uint64_t rest = edge;
      while (rest) {
        std::uint64_t bit = rest & (~rest + 1);
        next.push_back(t | bit);
        rest ^= bit;
      }
    }
    family = mask_antichain(std::move(next));
  }
  std::sort(family.begin(), family.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return family;
}

std::vector<std::vector<int>> minimal_transversals(
    int n, const std::vector<std::vector<int>>& sets) {
  std::vector<std::uint64_t> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) {
    std::uint64_t m = 0;
    for (int v : s) {
      if (v < 1 || v > n) throw std::invalid_argument("transversal: element out of range");
      m |= std::uint64_t{1} << (v - 1);
    }
    masks.push_back(m);
  }
  std::vector<std::vector<int>> out;
  for (std::uint64_t m : minimal_transversal_masks(n, masks)) {
    std::vector<int> s;
    for (int v = 1; v <= n; ++v)
      if (m & (std::uint64_t{1} << (v - 1))) s.push_back(v);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace domideal
