#include "voro/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "voro/distance.hpp"

namespace voro {

bool Position::claimed(int v) const {
    return std::find(a.begin(), a.end(), v) != a.end() ||
           std::find(b.begin(), b.end(), v) != b.end();
}

void Position::pop() {
    if (a.size() > b.size())
        a.pop_back();
    else if (!b.empty())
        b.pop_back();
    else
        throw std::logic_error("Position::pop on empty position");
}

void validate_position(const Graph& g, const Position& pos) {
    if (pos.a.size() != pos.b.size() && pos.a.size() != pos.b.size() + 1)
        throw std::invalid_argument("Position: alternation violated");
    std::vector<char> seen(g.vertex_count(), 0);
    for (const auto* list : {&pos.a, &pos.b})
        for (int v : *list) {
            g.check_vertex(v);
            if (seen[v]) throw std::invalid_argument("Position: vertex claimed twice");
            seen[v] = 1;
        }
}

namespace {

void multi_source_bfs(const Graph& g, std::span<const int> sources,
                      std::vector<int>& dist, std::vector<int>& queue) {
    const int n = g.vertex_count();
    dist.assign(n, -1);
    queue.clear();
    for (int s : sources) {
        g.check_vertex(s);
        if (dist[s] < 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
}

} // namespace

long long partition_a_half(const Graph& g, std::span<const int> claimed_a,
                           std::span<const int> claimed_b, PartitionScratch& s) {
    if (claimed_a.empty() || claimed_b.empty())
        throw std::invalid_argument("partition: both players must have claimed at least one vertex");
    multi_source_bfs(g, claimed_a, s.dist_a, s.queue);
    multi_source_bfs(g, claimed_b, s.dist_b, s.queue);
    long long a_half = 0;
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (s.dist_a[v] < s.dist_b[v])
            a_half += 2;
        else if (s.dist_a[v] == s.dist_b[v])
            a_half += 1;
    }
    return a_half;
}

PartitionResult partition(const Graph& g, const Position& pos) {
    validate_position(g, pos);
    PartitionScratch s;
    PartitionResult res;
    res.score.n = g.vertex_count();
    res.score.a_half_units = partition_a_half(g, pos.a, pos.b, s);
    res.owner.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (s.dist_a[v] < s.dist_b[v])
            res.owner[v] = Owner::A;
        else if (s.dist_a[v] > s.dist_b[v])
            res.owner[v] = Owner::B;
        else
            res.owner[v] = Owner::Tied;
    }
    return res;
}

std::vector<int> dominance_region(const Graph& g, int x, int v) {
    g.check_vertex(x);
    g.check_vertex(v);
    if (x == v) throw std::invalid_argument("dominance_region: x == v");
    auto dx = all_distances_from(g, x);
    auto dv = all_distances_from(g, v);
    std::vector<int> region;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (dx[w] < dv[w]) region.push_back(w);
    return region;
}

} // namespace voro
