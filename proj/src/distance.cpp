#include "voro/distance.hpp"

namespace voro {

std::vector<int> all_distances_from(const Graph& g, int source) {
    g.check_vertex(source);
    const int n = g.vertex_count();
    std::vector<int> dist(n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    dist[source] = 0;
    queue.push_back(source);
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

DistanceOracle::DistanceOracle(const Graph& g, std::size_t cap_bytes) : g_(g) {
    std::size_t row_bytes = sizeof(int) * std::size_t(g.vertex_count());
    max_rows_ = row_bytes == 0 ? 0 : cap_bytes / row_bytes;
}

std::vector<int> DistanceOracle::row(int source) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(source);
        if (it != cache_.end()) return it->second;
    }
    auto d = all_distances_from(g_, source);
    std::lock_guard<std::mutex> lock(mutex_);
    if (cache_.size() < max_rows_) cache_.emplace(source, d);
    return d;
}

int DistanceOracle::dist(int u, int v) const {
    g_.check_vertex(v);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (auto it = cache_.find(u); it != cache_.end()) return it->second[v];
        if (auto it = cache_.find(v); it != cache_.end()) return it->second[u];
    }
    return row(u)[v];
}

} // namespace voro
