#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "modalg/group_ops.hpp"

namespace modalg {

inline constexpr std::size_t kDefaultOracleCap = 64;

// Every normal subgroup, ordered by size then by smallest differing element.
std::vector<Subgroup> normal_subgroups(const PGroup& g);

/// All unordered pairs (H, K) of nontrivial normal subgroups with
/// H ∩ K = 1 and HK = G. Empty iff G is directly indecomposable.
/// Throws CapExceeded when |G| > cap.
std::vector<std::pair<Subgroup, Subgroup>> direct_factor_oracle(const PGroup& g,
                                                                std::size_t cap = kDefaultOracleCap);

// First pair in the same order, or nullopt.
std::optional<std::pair<Subgroup, Subgroup>> find_direct_factor(const PGroup& g,
                                                                std::size_t cap = kDefaultOracleCap);

/// Remak decomposition: the indecomposable direct factors of G, each as a
/// standalone group, sorted by order descending. Unique up to isomorphism.
std::vector<PGroup> indecomposable_factors(const PGroup& g, std::size_t cap = kDefaultOracleCap);

// Whether some indecomposable factor is cyclic of order exactly q.
bool has_cyclic_factor_of_order(const PGroup& g, std::uint64_t q, std::size_t cap = kDefaultOracleCap);

}  // namespace modalg
