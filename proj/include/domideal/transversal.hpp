#pragma once

#include <cstdint>
#include <vector>

namespace domideal {

// Inclusion-minimal transversals (hitting sets) of a family of subsets of
// 1..n, by incremental antichain refinement: fold edges one at a time,
// extending the transversals that miss the new edge and re-minimalizing.
// Requires n <= 64. An edge list containing the empty set has no
// transversal; an empty edge list has the single transversal {}.
std::vector<std::vector<int>> minimal_transversals(
    int n, const std::vector<std::vector<int>>& sets);

// Same computation on bitmasks.
std::vector<std::uint64_t> minimal_transversal_masks(
    int n, const std::vector<std::uint64_t>& sets);

}  // namespace domideal
