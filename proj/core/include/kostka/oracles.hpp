#pragma once

// Brute-force reference computations. These avoid the structural shortcuts
// used by the main code paths and exist to cross-check them.

#include <vector>

#include "kostka/bounded_counts.hpp"
#include "kostka/count.hpp"
#include "kostka/partition.hpp"

namespace kostka::oracle {

/// Covers of mu read off the full dominance relation on partitions_of(|mu|):
/// nu is kept when mu strictly dominates nu and no partition lies strictly
/// between them. Reverse-lex order.
std::vector<Partition> hasse_covers(const Partition& mu);

/// Length of the longest saturated chain from mu down to nu, by searching
/// the brute-force Hasse diagram. Returns -1 if mu does not dominate nu.
int hasse_distance(const Partition& mu, const Partition& nu);

/// s_count by enumerating every y in the box prod [0, x_k].
Count bounded_solutions(const BoundVector& x, long a);

} // namespace kostka::oracle
