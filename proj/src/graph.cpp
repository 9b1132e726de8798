#include "voro/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace voro {

Graph::Graph(int n, const std::vector<Edge>& edges,
             std::vector<std::string> labels,
             std::shared_ptr<const FamilyMetadata> meta)
    : n_(n), labels_(std::move(labels)), meta_(std::move(meta)) {
    if (n_ <= 0) throw std::invalid_argument("Graph: vertex count must be positive");
    if (!labels_.empty() && int(labels_.size()) != n_)
        throw std::invalid_argument("Graph: label vector size mismatch");

    std::vector<std::vector<int>> adj(n_);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    adj_off_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) {
        auto& a = adj[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("Graph: parallel edge");
        adj_off_[v + 1] = adj_off_[v] + int(a.size());
        max_degree_ = std::max(max_degree_, int(a.size()));
    }
    adj_flat_.reserve(adj_off_[n_]);
    for (int v = 0; v < n_; ++v)
        adj_flat_.insert(adj_flat_.end(), adj[v].begin(), adj[v].end());

    // connectivity
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n_) throw std::invalid_argument("Graph: not connected");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Graph: invalid vertex id " + std::to_string(v));
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

const std::string& Graph::label(int v) const {
    static const std::string empty;
    check_vertex(v);
    if (labels_.empty()) return empty;
    return labels_[v];
}

std::vector<Graph::Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (int v = 0; v < n_; ++v)
        for (int w : neighbors(v))
            if (v < w) out.emplace_back(v, w);
    return out;
}

std::string Graph::to_dot(const std::vector<std::pair<int, std::string>>& highlight) const {
    std::map<int, std::string> color(highlight.begin(), highlight.end());
    std::ostringstream os;
    os << "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < n_; ++v) {
        os << "  " << v;
        std::string extra;
        if (!label(v).empty()) extra += "label=\"" + std::to_string(v) + ":" + label(v) + "\",";
        if (auto it = color.find(v); it != color.end())
            extra += "style=filled,fillcolor=" + it->second + ",";
        if (!extra.empty()) {
            extra.pop_back();
            os << " [" << extra << "]";
        }
        os << ";\n";
    }
    for (auto [u, v] : edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

TwinClasses twin_classes(const Graph& g) {
    const int n = g.vertex_count();
    // Key a vertex by its open neighborhood and by its closed neighborhood;
    // either match makes a pair interchangeable.
    std::map<std::vector<int>, std::vector<int>> open_groups, closed_groups;
    for (int v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        std::vector<int> open(nb.begin(), nb.end());
        std::vector<int> closed = open;
        closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
        open_groups[open].push_back(v);
        closed_groups[closed].push_back(v);
    }
    // union-find over both relations
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (auto* groups : {&open_groups, &closed_groups})
        for (auto& [key, vs] : *groups)
            for (size_t i = 1; i < vs.size(); ++i) unite(vs[0], vs[i]);

    TwinClasses tc;
    tc.class_of.assign(n, -1);
    std::vector<int> root_to_class(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (root_to_class[r] < 0) {
            root_to_class[r] = int(tc.members.size());
            tc.members.emplace_back();
        }
        tc.class_of[v] = root_to_class[r];
        tc.members[root_to_class[r]].push_back(v);
    }
    return tc;
}

} // namespace voro
