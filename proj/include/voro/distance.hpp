#pragma once

#include <cstddef>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "voro/graph.hpp"

namespace voro {

// Hop distances from a single source, by breadth-first search.
std::vector<int> all_distances_from(const Graph& g, int source);

// Lazily built all-pairs distance cache. Rows are cached up to a memory cap;
// beyond the cap queries fall back to a fresh BFS. Thread-safe; answers do
// not depend on the interleaving.
class DistanceOracle {
public:
    explicit DistanceOracle(const Graph& g, std::size_t cap_bytes = 64 << 20);

    int dist(int u, int v) const;
    std::vector<int> row(int source) const;

private:
    const Graph& g_;
    std::size_t max_rows_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<int, std::vector<int>> cache_;
};

} // namespace voro
