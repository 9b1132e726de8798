#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "voro/metadata.hpp"

namespace voro {

// Immutable undirected graph. Construction validates simplicity, symmetry and
// connectivity; afterwards the object is safe to share across threads.
class Graph {
public:
    using Edge = std::pair<int, int>;

    Graph(int n, const std::vector<Edge>& edges,
          std::vector<std::string> labels = {},
          std::shared_ptr<const FamilyMetadata> meta = nullptr);

    int vertex_count() const { return n_; }
    int edge_count() const { return int(adj_flat_.size() / 2); }

    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return {adj_flat_.data() + adj_off_[v], size_t(adj_off_[v + 1] - adj_off_[v])};
    }
    int degree(int v) const {
        check_vertex(v);
        return adj_off_[v + 1] - adj_off_[v];
    }
    int max_degree() const { return max_degree_; }
    bool has_edge(int u, int v) const;

    // m == n-1 together with connectivity characterizes trees.
    bool is_tree() const { return edge_count() == n_ - 1; }

    const std::string& label(int v) const;
    const FamilyMetadata* family() const { return meta_.get(); }
    std::shared_ptr<const FamilyMetadata> family_ptr() const { return meta_; }

    std::vector<Edge> edges() const;

    // GraphViz output; highlight maps vertex -> fill color name.
    std::string to_dot(const std::vector<std::pair<int, std::string>>& highlight = {}) const;

    void check_vertex(int v) const;

private:
    int n_ = 0;
    int max_degree_ = 0;
    std::vector<int> adj_flat_;
    std::vector<int> adj_off_;
    std::vector<std::string> labels_;
    std::shared_ptr<const FamilyMetadata> meta_;
};

// Groups vertices that are interchangeable under an automorphism that fixes
// every other vertex (equal open or closed neighborhoods). Claiming any member
// of a class yields the same game value as claiming any other unclaimed one,
// which the solver exploits to collapse broom leaves.
struct TwinClasses {
    std::vector<int> class_of;            // vertex -> class id
    std::vector<std::vector<int>> members; // class id -> sorted vertex ids
};
TwinClasses twin_classes(const Graph& g);

} // namespace voro
