#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ryser/hypergraph.hpp"

namespace ryser {

// Exhaustive subset enumeration, kept independent of the search kernels and
// used only to cross-check them.

/// Smallest cover size found by trying every vertex subset of size 0, 1, ...,
/// `limit`; nullopt when none of those is a cover. Throws TooLarge unless
/// the vertex count is at most 24 or the subsets tried number at most 10^7.
std::optional<std::size_t> brute_force_cover_oracle(const PartiteHypergraph& h, std::size_t limit);
std::optional<std::size_t> brute_force_cover_oracle(const PartiteHypergraph& h);

/// Every cover (minimal or not) of size at most `max_size`, each as sorted
/// vertex ids, in size-then-lexicographic order. Same size guard.
std::vector<std::vector<VertexId>> brute_force_covers(const PartiteHypergraph& h, std::size_t max_size);

}  // namespace ryser
