#include "voro/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace voro {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_cap(long long vertices, long long cap) {
    if (vertices > cap)
        throw std::invalid_argument("generator: " + std::to_string(vertices) +
                                    " vertices exceeds cap " + std::to_string(cap));
}

long long binomial_capped(long long n, long long k, long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return (long long)r;
}

// All nonnegative integer d-tuples with the given coordinate sum, in
// lexicographic order.
void enumerate_compositions(int d, long long total, std::vector<int>& prefix,
                            std::vector<std::vector<int>>& out) {
    if (int(prefix.size()) == d - 1) {
        prefix.push_back(int(total));
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (long long v = 0; v <= total; ++v) {
        prefix.push_back(int(v));
        enumerate_compositions(d, total - v, prefix, out);
        prefix.pop_back();
    }
}

// Points of [0,L]^d with coordinate sum >= L, in lexicographic order.
void enumerate_cube_points(int d, int L, long long partial, std::vector<int>& prefix,
                           std::vector<std::vector<int>>& out) {
    int remaining = d - int(prefix.size());
    if (remaining == 0) {
        if (partial >= L) out.push_back(prefix);
        return;
    }
    for (int v = 0; v <= L; ++v) {
        if (partial + v + (long long)(remaining - 1) * L < L) continue;
        prefix.push_back(v);
        enumerate_cube_points(d, L, partial + v, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

Graph gen_star(int k) {
    require(k >= 1, "gen_star: k must be >= 1");
    std::vector<Graph::Edge> edges;
    std::vector<std::string> labels(k + 1);
    labels[0] = "hub";
    for (int i = 1; i <= k; ++i) {
        edges.emplace_back(0, i);
        labels[i] = "leaf";
    }
    auto meta = std::make_shared<FamilyMetadata>();
    meta->family = "star";
    meta->params["k"] = k;
    meta->center = 0;
    return Graph(k + 1, edges, std::move(labels), meta);
}

Graph gen_path(int n) {
    require(n >= 1, "gen_path: n must be >= 1");
    std::vector<Graph::Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    auto meta = std::make_shared<FamilyMetadata>();
    meta->family = "path";
    meta->params["n"] = n;
    return Graph(n, edges, {}, meta);
}

Graph gen_nine_vertex() {
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < 6; ++i) edges.emplace_back(i, (i + 1) % 6);
    edges.emplace_back(0, 6);
    edges.emplace_back(2, 7);
    edges.emplace_back(4, 8);
    std::vector<std::string> labels(9);
    for (int v : {6, 7, 8}) labels[v] = "leaf";
    auto meta = std::make_shared<FamilyMetadata>();
    meta->family = "nine_vertex";
    return Graph(9, edges, std::move(labels), meta);
}

Graph gen_spider(int k, int N) {
    require(k >= 1 && N >= 1, "gen_spider: k and N must be >= 1");
    int n = 1 + k * N;
    std::vector<Graph::Edge> edges;
    std::vector<std::string> labels(n);
    labels[0] = "hub";
    for (int arm = 0; arm < k; ++arm) {
        int prev = 0;
        for (int j = 0; j < N; ++j) {
            int v = 1 + arm * N + j;
            edges.emplace_back(prev, v);
            labels[v] = (j + 1 == N) ? "leaf" : "leg-path";
            prev = v;
        }
    }
    auto meta = std::make_shared<FamilyMetadata>();
    meta->family = "spider";
    meta->params["k"] = k;
    meta->params["N"] = N;
    meta->center = 0;
    return Graph(n, edges, std::move(labels), meta);
}

Graph gen_simplex(int d, int t0, int N, bool leaves_everywhere, long long max_vertices) {
    require(d >= 2, "gen_simplex: d must be >= 2");
    require(t0 >= 1, "gen_simplex: t0 must be >= 1");
    require(N >= 0, "gen_simplex: N must be >= 0");
    long long sum = (long long)d * d * t0;
    long long lattice = binomial_capped(sum + d - 1, d - 1, max_vertices);
    long long leaf_anchors = leaves_everywhere ? lattice : d;
    check_cap(lattice + leaf_anchors * N, max_vertices);

    std::vector<std::vector<int>> points;
    std::vector<int> prefix;
    enumerate_compositions(d, sum, prefix, points);

    std::map<std::vector<int>, int> id_of;
    for (int i = 0; i < int(points.size()); ++i) id_of[points[i]] = i;

    std::vector<Graph::Edge> edges;
    for (int p = 0; p < int(points.size()); ++p) {
        const auto& x = points[p];
        for (int i = 0; i < d; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < d; ++j) {
                if (i == j) continue;
                auto y = x;
                --y[i];
                ++y[j];
                int q = id_of.at(y);
                if (q > p) edges.emplace_back(p, q);
            }
        }
    }

    auto meta = std::make_shared<FamilyMetadata>();
    meta->family = "simplex";
    meta->params["d"] = d;
    meta->params["t0"] = t0;
    meta->params["N"] = N;
    meta->params["sum"] = sum;
    meta->lattice_count = int(points.size());
    meta->coords = points;

    int n = int(points.size());
    std::vector<std::string> labels(n + leaf_anchors * N);
    for (int i = 0; i < d; ++i) {
        std::vector<int> corner(d, 0);
        corner[i] = int(sum);
        int cid = id_of.at(corner);
        meta->corners.push_back(cid);
        labels[cid] = "corner";
    }
    std::vector<int> anchors = leaves_everywhere
        ? [&] { std::vector<int> all(n); for (int i = 0; i < n; ++i) all[i] = i; return all; }()
        : meta->corners;
    for (int anchor : anchors)
        for (int j = 0; j < N; ++j) {
            int leaf = n++;
            edges.emplace_back(anchor, leaf);
            labels[leaf] = "leaf";
            meta->leaf_corner[leaf] = anchor;
        }
    return Graph(n, edges, std::move(labels), meta);
}

Graph gen_cut_corner_cube(int d, int t, long long max_vertices) {
    require(t >= 1, "gen_cut_corner_cube: t must be >= 1");
    long long L = (long long)d * d * t;
    require(L <= 100'000, "gen_cut_corner_cube: side too large");
    return gen_cut_corner_cube_side(d, int(L), max_vertices);
}

Graph gen_cut_corner_cube_side(int d, int L, long long max_vertices) {
    require(d >= 2, "cut_corner_cube: d must be >= 2");
    require(L >= 1, "cut_corner_cube: L must be >= 1");
    // |[0,L]^d| minus the cut corner; reject early when the full cube already
    // exceeds the cap.
    __int128 full = 1;
    for (int i = 0; i < d; ++i) {
        full *= (L + 1);
        if (full > max_vertices * 4) break;
    }
    std::vector<std::vector<int>> points;
    std::vector<int> prefix;
    if (full > max_vertices * 4)
        throw std::invalid_argument("cut_corner_cube: cube too large");
    enumerate_cube_points(d, L, 0, prefix, points);
    check_cap((long long)points.size(), max_vertices);

    std::map<std::vector<int>, int> id_of;
    for (int i = 0; i < int(points.size()); ++i) id_of[points[i]] = i;

    std::vector<Graph::Edge> edges;
    for (int p = 0; p < int(points.size()); ++p) {
        auto x = points[p];
        for (int i = 0; i < d; ++i) {
            if (x[i] == L) continue;
            ++x[i];
            edges.emplace_back(p, id_of.at(x));
            --x[i];
        }
    }

    auto meta = std::make_shared<FamilyMetadata>();
    meta->family = "cut_corner_cube";
    meta->params["d"] = d;
    meta->params["L"] = L;
    meta->lattice_count = int(points.size());
    meta->coords = points;
    std::vector<std::string> labels(points.size());
    for (int i = 0; i < d; ++i) {
        std::vector<int> corner(d, 0);
        corner[i] = L;
        int cid = id_of.at(corner);
        meta->corners.push_back(cid);
        labels[cid] = "corner";
    }
    return Graph(int(points.size()), edges, std::move(labels), meta);
}

Graph gen_grid_connected_cycles(int d, int L, int N, long long max_vertices) {
    require(d >= 2, "grid_connected_cycles: d must be >= 2");
    require(L >= 1, "grid_connected_cycles: L must be >= 1");
    require(N >= 1, "grid_connected_cycles: N must be >= 1");

    std::vector<std::vector<int>> grid;
    std::vector<int> prefix;
    enumerate_cube_points(d, L, 0, prefix, grid);
    check_cap((long long)grid.size() * 2 * d, max_vertices);
    std::map<std::vector<int>, int> grid_id;
    for (int i = 0; i < int(grid.size()); ++i) grid_id[grid[i]] = i;

    const int ring_size = 2 * d;
    const int interior = 6 * d - 2;
    auto meta = std::make_shared<FamilyMetadata>();
    meta->family = "grid_connected_cycles";
    meta->params["d"] = d;
    meta->params["L"] = L;
    meta->params["N"] = N;
    meta->grid_points = grid;

    // ring nodes first, grid-point major, labels 1+,1-,...,d+,d- in order
    int n = int(grid.size()) * ring_size;
    auto ring_node = [&](int gi, int coord, bool plus) {
        return gi * ring_size + 2 * coord + (plus ? 0 : 1);
    };
    meta->ring_nodes.resize(grid.size());
    meta->interp_grid.assign(n, -1);
    meta->node_kind.assign(n, FamilyMetadata::kRing);
    std::vector<Graph::Edge> edges;
    for (int gi = 0; gi < int(grid.size()); ++gi) {
        for (int s = 0; s < ring_size; ++s) {
            int v = gi * ring_size + s;
            meta->ring_nodes[gi].push_back(v);
            meta->interp_grid[v] = gi;
            edges.emplace_back(v, gi * ring_size + (s + 1) % ring_size);
        }
    }

    std::vector<char> slot_used(n, 0);
    for (int gi = 0; gi < int(grid.size()); ++gi) {
        auto x = grid[gi];
        for (int i = 0; i < d; ++i) {
            if (x[i] == L) continue;
            ++x[i];
            int gj = grid_id.at(x); // always present: sum grows, coords stay in range
            --x[i];
            int from = ring_node(gi, i, true);
            int to = ring_node(gj, i, false);
            slot_used[from] = slot_used[to] = 1;
            int prev = from;
            for (int step = 0; step < interior; ++step) {
                check_cap(n + 1, max_vertices);
                int v = n++;
                meta->interp_grid.push_back(gi); // lower endpoint interpretation
                meta->node_kind.push_back(FamilyMetadata::kConnPath);
                edges.emplace_back(prev, v);
                prev = v;
            }
            edges.emplace_back(prev, to);
        }
    }

    std::vector<std::string> labels(n);
    for (int v = 0; v < int(grid.size()) * ring_size; ++v) labels[v] = "ring-node";

    for (int i = 0; i < d; ++i) {
        std::vector<int> corner(d, 0);
        corner[i] = L;
        int gi = grid_id.at(corner);
        meta->corner_grid.push_back(gi);
        int attach = -1;
        for (int v : meta->ring_nodes[gi])
            if (!slot_used[v]) {
                attach = v;
                break;
            }
        if (attach < 0) throw std::logic_error("grid_connected_cycles: corner ring has no free node");
        meta->tail_attach.push_back(attach);
        labels[attach] = "corner";
        std::vector<int> tail;
        int prev = attach;
        for (int j = 0; j < N; ++j) {
            check_cap(n + 1, max_vertices);
            int v = n++;
            meta->interp_grid.push_back(gi);
            meta->node_kind.push_back(FamilyMetadata::kTail);
            labels.push_back("leg-path");
            edges.emplace_back(prev, v);
            tail.push_back(v);
            prev = v;
        }
        meta->tails.push_back(std::move(tail));
    }
    return Graph(n, edges, std::move(labels), meta);
}

Graph gen_broom_leg_tree(int k, int N, long long max_vertices) {
    require(k >= 1 && N >= 1, "broom_leg_tree: k and N must be >= 1");
    require(k < 40, "broom_leg_tree: k too large");
    long long path_len = (1LL << k) - 1;
    long long total = 2 + (long long)k * N + 2 * (path_len + (long long)k * N);
    check_cap(total, max_vertices);

    auto meta = std::make_shared<FamilyMetadata>();
    meta->family = "broom_leg_tree";
    meta->params["k"] = k;
    meta->params["N"] = N;

    int n = 0;
    std::vector<Graph::Edge> edges;
    std::vector<std::string> labels(total);
    int c = n++;
    labels[c] = "hub";
    meta->center = c;
    int h = n++;
    labels[h] = "head";
    meta->head = h;
    edges.emplace_back(c, h);
    for (int j = 0; j < k * N; ++j) {
        int leaf = n++;
        labels[leaf] = "broom-leaf";
        edges.emplace_back(h, leaf);
        meta->head_leaves.push_back(leaf);
    }
    for (int side = 0; side < 2; ++side) {
        FamilyMetadata::Leg leg;
        int prev = c;
        for (long long depth = 1; depth <= path_len; ++depth) {
            int v = n++;
            labels[v] = "leg-path";
            edges.emplace_back(prev, v);
            leg.path.push_back(v);
            prev = v;
        }
        for (int j = 1; j <= k; ++j) {
            long long depth = (1LL << j) - 1; // gaps 1,2,4,...,2^(k-1) down the path
            int anchor = leg.path[depth - 1];
            leg.anchors.push_back(anchor);
            std::vector<int> leaves;
            for (int s = 0; s < N; ++s) {
                int leaf = n++;
                labels[leaf] = "broom-leaf";
                edges.emplace_back(anchor, leaf);
                leaves.push_back(leaf);
            }
            leg.broom_leaves.push_back(std::move(leaves));
        }
        meta->legs.push_back(std::move(leg));
    }
    return Graph(n, edges, std::move(labels), meta);
}

Graph gen_delta_copies(int delta, const Graph& inner, int max_degree, long long max_vertices) {
    require(delta >= 1, "delta_copies: delta must be >= 1");
    const int m = inner.vertex_count();
    check_cap(1 + (long long)delta * m, max_vertices);

    int attach = 0;
    for (int v = 1; v < m; ++v)
        if (inner.degree(v) < inner.degree(attach)) attach = v;

    if (max_degree > 0) {
        if (delta > max_degree || inner.degree(attach) + 1 > max_degree ||
            inner.max_degree() > max_degree)
            throw std::invalid_argument("delta_copies: attachment would exceed degree bound");
    }

    int n = 1 + delta * m;
    auto meta = std::make_shared<FamilyMetadata>();
    meta->family = "delta_copies";
    meta->params["delta"] = delta;
    meta->params["inner_n"] = m;
    meta->hub = 0;
    meta->copy_index.assign(n, -1);
    meta->inner_vertex.assign(n, -1);
    meta->inner = std::make_shared<Graph>(inner);

    std::vector<Graph::Edge> edges;
    std::vector<std::string> labels(n);
    labels[0] = "hub";
    auto inner_edges = inner.edges();
    for (int i = 0; i < delta; ++i) {
        int base = 1 + i * m;
        meta->attach.push_back(base + attach);
        edges.emplace_back(0, base + attach);
        for (auto [u, v] : inner_edges) edges.emplace_back(base + u, base + v);
        for (int u = 0; u < m; ++u) {
            meta->copy_index[base + u] = i;
            meta->inner_vertex[base + u] = u;
            labels[base + u] = inner.label(u);
        }
    }
    return Graph(n, edges, std::move(labels), meta);
}

} // namespace voro
