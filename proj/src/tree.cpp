#include "voro/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace voro {

namespace {

void require_tree(const Graph& g) {
    if (!g.is_tree()) throw std::invalid_argument("input is not a tree");
}

// parent array and a processing order with children before parents
struct Rooted {
    std::vector<int> parent, order, subtree;
};

Rooted root_at(const Graph& g, int root) {
    const int n = g.vertex_count();
    Rooted r;
    r.parent.assign(n, -1);
    r.order.reserve(n);
    std::vector<int> stack{root};
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        r.order.push_back(v);
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                r.parent[w] = v;
                stack.push_back(w);
            }
    }
    r.subtree.assign(n, 1);
    for (int i = n - 1; i > 0; --i) {
        int v = r.order[i];
        r.subtree[r.parent[v]] += r.subtree[v];
    }
    return r;
}

std::vector<int> path_between(const Graph& g, int u, int v) {
    Rooted r = root_at(g, u);
    std::vector<int> path;
    for (int x = v; x != -1; x = r.parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end()); // now u ... v
    return path;
}

// size of the component containing start once the edges along path are removed
long long side_tree_size(const Graph& g, int start, const std::vector<int>& path) {
    const int n = g.vertex_count();
    std::vector<int> on_path_pos(n, -1);
    for (size_t i = 0; i < path.size(); ++i) on_path_pos[path[i]] = int(i);
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    long long size = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++size;
        for (int w : g.neighbors(v)) {
            if (seen[w]) continue;
            // skip path edges (consecutive path vertices)
            if (on_path_pos[v] >= 0 && on_path_pos[w] >= 0 &&
                std::abs(on_path_pos[v] - on_path_pos[w]) == 1)
                continue;
            seen[w] = 1;
            stack.push_back(w);
        }
    }
    return size;
}

} // namespace

WeightedOrientation weight_and_orient(const Graph& tree) {
    require_tree(tree);
    const int n = tree.vertex_count();
    Rooted r = root_at(tree, 0);

    WeightedOrientation wo;
    wo.out_arc.assign(n, -1);
    std::vector<char> has_out(n, 0);
    for (int v = 1; v < n; ++v) {
        // one edge per non-root vertex: (v, parent)
        long long below = r.subtree[v];
        long long above = n - below;
        WeightedOrientation::EdgeInfo e;
        e.u = std::min(v, r.parent[v]);
        e.v = std::max(v, r.parent[v]);
        e.weight = std::min(below, above);
        int tail = -1;
        if (below < above) {
            e.to = r.parent[v];
            tail = v;
        } else if (below > above) {
            e.to = v;
            tail = r.parent[v];
        } else {
            e.to = -1; // central edge
        }
        int idx = int(wo.edges.size());
        wo.edges.push_back(e);
        if (tail >= 0) {
            if (has_out[tail]) throw std::logic_error("orientation: vertex with two outgoing arcs");
            has_out[tail] = 1;
            wo.out_arc[tail] = idx;
        }
    }
    for (int v = 0; v < n; ++v)
        if (!has_out[v]) wo.roots.push_back(v);
    if (wo.roots.size() > 2) throw std::logic_error("orientation: more than two roots");
    return wo;
}

ThresholdResult find_threshold(const Graph& tree) {
    require_tree(tree);
    const int n = tree.vertex_count();
    WeightedOrientation wo = weight_and_orient(tree);

    // incoming arcs per vertex, remembering the tail
    std::vector<std::vector<std::pair<long long, int>>> incoming(n); // (weight, tail)
    for (const auto& e : wo.edges) {
        if (e.to < 0) continue;
        int tail = e.to == e.u ? e.v : e.u;
        incoming[e.to].emplace_back(e.weight, tail);
    }

    // walk down every heavy incoming arc, starting from the roots; descent
    // stops exactly at the threshold vertices
    std::vector<int> thresholds;
    std::vector<int> stack(wo.roots.begin(), wo.roots.end());
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        bool heavy = false;
        for (auto [w, tail] : incoming[x])
            if (3 * w > n) {
                heavy = true;
                stack.push_back(tail);
            }
        if (!heavy) thresholds.push_back(x);
    }
    std::sort(thresholds.begin(), thresholds.end());
    if (thresholds.empty() || thresholds.size() > 2)
        throw std::logic_error("threshold walk found " + std::to_string(thresholds.size()) +
                               " vertices");

    ThresholdResult res;
    res.threshold_vertices = thresholds;
    if (thresholds.size() == 1) {
        if (!wo.has_central_edge() && thresholds[0] == wo.roots[0]) {
            res.single = true;
            res.c = thresholds[0];
            return res;
        }
        // single threshold away from the center: pair up with the central vertex
        if (wo.has_central_edge())
            throw std::logic_error("threshold walk: central edge with a single threshold vertex");
        res.u = thresholds[0];
        res.v = wo.roots[0];
    } else {
        res.u = thresholds[0];
        res.v = thresholds[1];
    }
    auto path = path_between(tree, res.u, res.v);
    res.tu_size = side_tree_size(tree, res.u, path);
    res.tv_size = side_tree_size(tree, res.v, path);
    return res;
}

CentralStrategy::CentralStrategy(const Graph& tree) {
    root_ = weight_and_orient(tree).roots.front();
}

int CentralStrategy::choose(const Graph& g, const Position& pos) const {
    if (pos.of(pos.to_move()).empty() && !pos.claimed(root_)) return root_;
    return greedy_move(g, pos);
}

TwoRoundTreeStrategy::TwoRoundTreeStrategy(const Graph& tree) : cert_(find_threshold(tree)) {
    if (cert_.single) {
        first_ = cert_.c;
        return;
    }
    // outer components of T - {u,v}; every child of u or v heads one
    auto path = path_between(tree, cert_.u, cert_.v);
    std::vector<char> on_path(tree.vertex_count(), 0);
    for (int x : path) on_path[x] = 1;

    const int n = tree.vertex_count();
    std::vector<char> dead(n, 0);
    dead[cert_.u] = dead[cert_.v] = 1;
    std::vector<long long> comp_size(n, 0);
    std::vector<int> comp_of(n, -1);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (dead[s] || comp_of[s] >= 0) continue;
        std::vector<int> stack{s};
        comp_of[s] = comps;
        long long size = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++size;
            for (int w : tree.neighbors(v))
                if (!dead[w] && comp_of[w] < 0) {
                    comp_of[w] = comps;
                    stack.push_back(w);
                }
        }
        comp_size[comps++] = size;
    }

    long long best = -1;
    int best_child = -1, best_parent = -1;
    for (int parent : {cert_.u, cert_.v})
        for (int child : tree.neighbors(parent)) {
            if (on_path[child]) continue;
            long long size = comp_size[comp_of[child]];
            if (size > best || (size == best && child < best_child)) {
                best = size;
                best_child = child;
                best_parent = parent;
            }
        }
    if (best_child < 0) {
        // no children at all (tiny trees); open on u and aim for v
        first_ = cert_.v;
        other_ = cert_.u;
        uprime_ = -1;
        return;
    }
    uprime_ = best_child;
    other_ = best_parent;                               // the vertex owning u'
    first_ = best_parent == cert_.u ? cert_.v : cert_.u; // A opens opposite it
}

int TwoRoundTreeStrategy::choose(const Graph& g, const Position& pos) const {
    size_t own = pos.a.size();
    if (own == 0) return first_;
    if (own == 1 && !cert_.single) {
        if (!pos.claimed(other_)) return other_;
        if (uprime_ >= 0 && !pos.claimed(uprime_)) return uprime_;
    }
    return greedy_move(g, pos);
}

LegDefenseStrategy::LegDefenseStrategy(const Graph& tree) : meta_(tree.family()) {
    if (!meta_ || meta_->family != "broom_leg_tree")
        throw std::invalid_argument("leg-defense: broom_leg_tree metadata missing");
    place_.resize(tree.vertex_count());
    place_[meta_->center] = {kCenter, -1, -1, -1};
    place_[meta_->head] = {kHeadBroom, -1, -1, -1};
    for (int leaf : meta_->head_leaves) place_[leaf] = {kHeadBroom, -1, -1, -1};
    for (int li = 0; li < int(meta_->legs.size()); ++li) {
        const auto& leg = meta_->legs[li];
        for (size_t i = 0; i < leg.path.size(); ++i) {
            int below = i + 1 < leg.path.size() ? leg.path[i + 1] : -1;
            place_[leg.path[i]] = {kLegPath, li, below, -1};
        }
        for (size_t bi = 0; bi < leg.anchors.size(); ++bi)
            for (int leaf : leg.broom_leaves[bi])
                place_[leaf] = {kLegLeaf, li, -1, leg.anchors[bi]};
    }
}

LegDefenseStrategy::Place LegDefenseStrategy::locate(int v) const { return place_[v]; }

// standard defense response inside a leg
int LegDefenseStrategy::defend(const Graph& g, const Position& pos, int a_move) const {
    Place p = locate(a_move);
    if (p.where == kLegPath && p.below >= 0 && !pos.claimed(p.below)) return p.below;
    if (p.where == kLegLeaf && !pos.claimed(p.anchor)) return p.anchor;
    return greedy_move(g, pos);
}

int LegDefenseStrategy::choose(const Graph& g, const Position& pos) const {
    const int c = meta_->center;
    Place opening = locate(pos.a.front());
    int a_last = pos.a.back();

    if (opening.where == kCenter) {
        if (pos.b.empty()) return meta_->head;
        // the leg B tops on move two and then keeps defending: the lowest-index
        // leg untouched by A's first two moves
        int defended = -1;
        for (int li = 0; li < int(meta_->legs.size()) && defended < 0; ++li) {
            bool touched = false;
            for (size_t j = 0; j < 2 && j < pos.a.size(); ++j)
                if (locate(pos.a[j]).leg == li) touched = true;
            if (!touched) defended = li;
        }
        if (pos.b.size() == 1) {
            if (defended >= 0 && !pos.claimed(meta_->legs[defended].path.front()))
                return meta_->legs[defended].path.front();
            return greedy_move(g, pos);
        }
        Place p = locate(a_last);
        if (defended >= 0 && p.leg == defended) return defend(g, pos, a_last);
        return greedy_move(g, pos);
    }

    if (pos.b.empty()) return c; // A avoided the center, B takes it

    if (opening.where == kHeadBroom) {
        // defend both legs
        Place p = locate(a_last);
        if (p.leg >= 0) return defend(g, pos, a_last);
        return greedy_move(g, pos);
    }

    // A opened inside a leg
    Place p = locate(a_last);
    if (p.leg >= 0) return defend(g, pos, a_last);
    if (p.where == kHeadBroom) {
        // answer A's first move instead
        if (opening.where == kLegPath && opening.below >= 0 && !pos.claimed(opening.below))
            return opening.below;
        if (opening.where == kLegLeaf && !pos.claimed(opening.anchor)) return opening.anchor;
    }
    return greedy_move(g, pos);
}

} // namespace voro
