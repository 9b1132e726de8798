#pragma once

#include <cstdint>
#include <vector>

#include "voro/graph.hpp"

namespace voro {

// All non-isomorphic trees on n vertices. Grown by leaf augmentation with
// canonical-code deduplication; counts match the known sequence
// 1,1,1,2,3,6,11,23,47,106,235,551,1301,3159 for n = 1..14.
std::vector<Graph> enumerate_trees(int n);

// All non-isomorphic connected graphs on n vertices (853 at n = 7).
// Exhaustive up to the cap; the canonical form is the minimum edge bitmask
// over all vertex permutations.
std::vector<Graph> enumerate_connected(int n);

inline constexpr int kMaxEnumTreeN = 16;
inline constexpr int kMaxEnumGraphN = 7;

// Uniform random labeled tree from a Prufer sequence.
Graph random_tree(int n, std::uint64_t seed);

// Random connected graph with maximum degree <= max_deg: a degree-capped
// random spanning tree plus extra random edges.
Graph random_bounded_degree_graph(int n, int max_deg, std::uint64_t seed);

} // namespace voro
