#include "voro/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace voro {

namespace {

using EdgeList = std::vector<Graph::Edge>;

std::vector<std::vector<int>> adjacency(int n, const EdgeList& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

// AHU code of the tree rooted at r: children codes sorted and concatenated
// inside parentheses.
std::string rooted_code(const std::vector<std::vector<int>>& adj, int r, int parent) {
    std::vector<std::string> children;
    for (int w : adj[r])
        if (w != parent) children.push_back(rooted_code(adj, w, r));
    std::sort(children.begin(), children.end());
    std::string code = "(";
    for (const auto& c : children) code += c;
    code += ")";
    return code;
}

std::vector<int> tree_centers(const std::vector<std::vector<int>>& adj) {
    const int n = int(adj.size());
    if (n == 1) return {0};
    std::vector<int> degree(n), layer, next;
    int remaining = n;
    for (int v = 0; v < n; ++v) {
        degree[v] = int(adj[v].size());
        if (degree[v] == 1) layer.push_back(v);
    }
    while (remaining > 2) {
        remaining -= int(layer.size());
        next.clear();
        for (int v : layer)
            for (int w : adj[v])
                if (--degree[w] == 1) next.push_back(w);
        layer = next;
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string tree_canonical_code(int n, const EdgeList& edges) {
    auto adj = adjacency(n, edges);
    std::string best;
    for (int c : tree_centers(adj)) {
        std::string code = rooted_code(adj, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

// edge bit index for i < j in an n-vertex graph mask
inline int pair_bit(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

std::uint32_t canonical_mask(std::uint32_t mask,
                             const std::vector<std::vector<int>>& perms) {
    std::uint32_t best = ~0u;
    for (const auto& p : perms) {
        std::uint32_t out = 0;
        std::uint32_t m = mask;
        while (m) {
            int bit = std::countr_zero(m);
            m &= m - 1;
            // invert pair_bit: find j with j(j-1)/2 <= bit
            int j = 1;
            while ((j + 1) * j / 2 <= bit) ++j;
            int i = bit - j * (j - 1) / 2;
            out |= 1u << pair_bit(p[i], p[j]);
            if (out > best) break;
        }
        if (out < best && m == 0) best = out;
    }
    return best;
}

bool mask_connected(int n, std::uint32_t mask) {
    std::vector<int> stack{0};
    std::uint32_t seen = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
            if (w == v || (seen >> w) & 1) continue;
            if ((mask >> pair_bit(std::min(v, w), std::max(v, w))) & 1) {
                seen |= 1u << w;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

EdgeList mask_edges(int n, std::uint32_t mask) {
    EdgeList edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_bit(i, j)) & 1) edges.emplace_back(i, j);
    return edges;
}

// all non-isomorphic graphs (connected or not) as canonical masks
std::vector<std::uint32_t> all_graph_masks(int n) {
    std::vector<std::uint32_t> level{0}; // the 1-vertex graph
    for (int size = 2; size <= n; ++size) {
        std::vector<std::vector<int>> sub_perms;
        {
            std::vector<int> p(size);
            std::iota(p.begin(), p.end(), 0);
            do
                sub_perms.push_back(p);
            while (std::next_permutation(p.begin(), p.end()));
        }
        std::unordered_set<std::uint32_t> seen;
        std::vector<std::uint32_t> next;
        for (std::uint32_t base : level) {
            for (std::uint32_t nb = 0; nb < (1u << (size - 1)); ++nb) {
                std::uint32_t mask = base;
                for (int v = 0; v < size - 1; ++v)
                    if ((nb >> v) & 1) mask |= 1u << pair_bit(v, size - 1);
                std::uint32_t canon = canonical_mask(mask, sub_perms);
                if (seen.insert(canon).second) next.push_back(canon);
            }
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end());
    return level;
}

} // namespace

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > kMaxEnumTreeN)
        throw std::invalid_argument("enumerate_trees: n out of range 1.." +
                                    std::to_string(kMaxEnumTreeN));
    std::vector<EdgeList> level{{}}; // single vertex
    for (int size = 2; size <= n; ++size) {
        std::unordered_set<std::string> seen;
        std::vector<EdgeList> next;
        for (const auto& edges : level) {
            for (int v = 0; v < size - 1; ++v) {
                EdgeList grown = edges;
                grown.emplace_back(v, size - 1);
                std::string code = tree_canonical_code(size, grown);
                if (seen.insert(code).second) next.push_back(std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& edges : level) out.emplace_back(n, edges);
    return out;
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 1 || n > kMaxEnumGraphN)
        throw std::invalid_argument("enumerate_connected: n out of range 1.." +
                                    std::to_string(kMaxEnumGraphN));
    std::vector<Graph> out;
    for (std::uint32_t mask : all_graph_masks(n))
        if (mask_connected(n, mask)) out.emplace_back(n, mask_edges(n, mask));
    return out;
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
    if (n == 1) return Graph(1, {});
    std::mt19937_64 rng(seed);
    std::vector<int> prufer(n - 2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (auto& x : prufer) x = pick(rng);

    std::vector<int> degree(n, 1);
    for (int x : prufer) ++degree[x];
    EdgeList edges;
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : prufer) {
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Graph(n, edges);
}

Graph random_bounded_degree_graph(int n, int max_deg, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random graph: n must be >= 1");
    if (max_deg < 2 && n > 2)
        throw std::invalid_argument("random graph: max degree too small to connect");
    std::mt19937_64 rng(seed);
    std::vector<int> degree(n, 0);
    EdgeList edges;
    // degree-capped random spanning tree
    for (int v = 1; v < n; ++v) {
        std::vector<int> candidates;
        for (int u = 0; u < v; ++u)
            if (degree[u] < max_deg) candidates.push_back(u);
        int u = candidates[std::uniform_int_distribution<size_t>(0, candidates.size() - 1)(rng)];
        edges.emplace_back(u, v);
        ++degree[u];
        ++degree[v];
    }
    // extra edges between vertices with spare degree
    std::vector<char> present(n * n, 0);
    for (auto [u, v] : edges) present[u * n + v] = present[v * n + u] = 1;
    int attempts = 2 * n;
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (attempts-- > 0) {
        int u = pick(rng), v = pick(rng);
        if (u == v || present[u * n + v]) continue;
        if (degree[u] >= max_deg || degree[v] >= max_deg) continue;
        edges.emplace_back(std::min(u, v), std::max(u, v));
        present[u * n + v] = present[v * n + u] = 1;
        ++degree[u];
        ++degree[v];
    }
    return Graph(n, edges);
}

} // namespace voro
