#include "voro/strategies.hpp"

#include <algorithm>
#include <stdexcept>

#include "voro/distance.hpp"
#include "voro/solver.hpp"
#include "voro/tree.hpp"

namespace voro {

std::vector<int> project_pi(const std::vector<int>& x, int i, ProjectionVariant variant, int L) {
    const int d = int(x.size());
    if (d < 2) throw std::invalid_argument("project_pi: need dimension >= 2");
    if (i < 0 || i >= d) throw std::invalid_argument("project_pi: bad coordinate index");
    std::vector<int> y(d);
    long long sum = 0;
    for (int j = 0; j < d; ++j) {
        if (j == i)
            y[j] = x[j] - (d - 1);
        else
            y[j] = variant == ProjectionVariant::Cube ? std::min(x[j] + 1, L) : x[j] + 1;
        if (y[j] < 0) throw std::invalid_argument("project_pi: left the vertex set");
        sum += y[j];
    }
    if (variant == ProjectionVariant::Cube && sum < L)
        throw std::invalid_argument("project_pi: left the vertex set");
    return y;
}

namespace {

// 10 bits per coordinate: enough for d <= 6 and coordinates up to 1023,
// which the vertex cap bounds long before
long long pack_coords(const std::vector<int>& x) {
    long long key = 0;
    for (int c : x) key = (key << 10) | (c & 0x3ff);
    return key;
}

void check_packable(int d, long long max_coord, const char* who) {
    if (d > 6 || max_coord > 1023)
        throw std::invalid_argument(std::string(who) + ": lattice too large to index");
}

int argmax_coord(const std::vector<int>& x) {
    int best = 0;
    for (int j = 1; j < int(x.size()); ++j)
        if (x[j] > x[best]) best = j;
    return best;
}

} // namespace

SimplexBStrategy::SimplexBStrategy(const Graph& g) : meta_(g.family()) {
    if (!meta_ || meta_->family != "simplex")
        throw std::invalid_argument("simplex-b: simplex metadata missing");
    d_ = int(meta_->param("d"));
    t0_ = meta_->param("t0");
    check_packable(d_, meta_->param("sum"), "simplex-b");
    for (int v = 0; v < meta_->lattice_count; ++v) point_id_[pack_coords(meta_->coords[v])] = v;
}

long long SimplexBStrategy::pack(const std::vector<int>& x) const { return pack_coords(x); }

std::vector<int> SimplexBStrategy::chain_response(
    const std::vector<int>& x, const std::vector<std::vector<int>>& occupied) const {
    int i = argmax_coord(x);
    std::vector<int> y = x;
    while (y[i] >= d_ - 1) {
        y = project_pi(y, i, ProjectionVariant::Simplex);
        if (std::find(occupied.begin(), occupied.end(), y) == occupied.end()) return y;
    }
    throw std::logic_error("simplex-b: projection chain exhausted without a free point");
}

int SimplexBStrategy::choose(const Graph& g, const Position& pos) const {
    // interpret A's latest move; a leaf counts as its corner
    int m = pos.a.back();
    int lattice = m < meta_->lattice_count ? m : meta_->leaf_corner.at(m);
    const std::vector<int>& x = meta_->coords[lattice];

    int i = argmax_coord(x);
    std::vector<char> taken(g.vertex_count(), 0);
    for (int v : pos.a) taken[v] = 1;
    for (int v : pos.b) taken[v] = 1;

    std::vector<int> y = x;
    while (y[i] >= d_ - 1) {
        y = project_pi(y, i, ProjectionVariant::Simplex);
        auto it = point_id_.find(pack(y));
        if (it == point_id_.end())
            throw std::logic_error("simplex-b: projected point is not a vertex");
        if (!taken[it->second]) return it->second;
    }
    throw std::logic_error("simplex-b: projection chain exhausted without a free point");
}

GccBStrategy::GccBStrategy(const Graph& g) : meta_(g.family()) {
    if (!meta_ || meta_->family != "grid_connected_cycles")
        throw std::invalid_argument("gcc-b: grid_connected_cycles metadata missing");
    d_ = int(meta_->param("d"));
    L_ = int(meta_->param("L"));
    check_packable(d_, L_, "gcc-b");
    for (int gi = 0; gi < int(meta_->grid_points.size()); ++gi)
        grid_id_[pack_coords(meta_->grid_points[gi])] = gi;
}

long long GccBStrategy::pack(const std::vector<int>& x) const { return pack_coords(x); }

int GccBStrategy::respond(const std::vector<int>& abs_a, const std::vector<int>& abs_b,
                          int interpreted) const {
    if (std::find(abs_a.begin(), abs_a.end(), interpreted) != abs_a.end())
        return -1; // repeat of an already-interpreted point: wasted
    const std::vector<int>& x = meta_->grid_points[interpreted];
    int i = argmax_coord(x);
    std::vector<int> y = x;
    while (true) {
        try {
            y = project_pi(y, i, ProjectionVariant::Cube, L_);
        } catch (const std::invalid_argument&) {
            throw std::logic_error("gcc-b: projection chain left the grid");
        }
        auto it = grid_id_.find(pack(y));
        if (it == grid_id_.end()) throw std::logic_error("gcc-b: projected point is not a grid point");
        int gi = it->second;
        if (std::find(abs_a.begin(), abs_a.end(), gi) == abs_a.end() &&
            std::find(abs_b.begin(), abs_b.end(), gi) == abs_b.end())
            return gi;
    }
}

int GccBStrategy::choose(const Graph& g, const Position& pos) const {
    // replay the history to rebuild the abstract game on the grid
    std::vector<int> abs_a, abs_b;
    int response = -1; // abstract response to A's newest move
    for (size_t round = 0; round < pos.a.size(); ++round) {
        int interpreted = meta_->interp_grid[pos.a[round]];
        int r = respond(abs_a, abs_b, interpreted);
        if (std::find(abs_a.begin(), abs_a.end(), interpreted) == abs_a.end())
            abs_a.push_back(interpreted);
        if (r >= 0) abs_b.push_back(r);
        response = r;
    }
    if (response < 0) return lowest_unclaimed(g, pos); // wasted move
    for (int node : meta_->ring_nodes[response])
        if (!pos.claimed(node)) return node;
    return lowest_unclaimed(g, pos); // ring fully occupied
}

int BestNeighborStrategy::choose(const Graph& g, const Position& pos) const {
    if (pos.a.empty()) throw std::invalid_argument("best-neighbor-b: A has not moved");
    int v = pos.a.back();
    int best = -1;
    size_t best_size = 0;
    for (int x : g.neighbors(v)) {
        if (pos.claimed(x)) continue;
        size_t size = dominance_region(g, x, v).size();
        if (best < 0 || size > best_size) {
            best = x;
            best_size = size;
        }
    }
    if (best < 0) return lowest_unclaimed(g, pos);
    return best;
}

HubMirrorStrategy::HubMirrorStrategy(const Graph& g, const InnerStrategyFactory& factory,
                                     int rounds)
    : meta_(g.family()) {
    if (!meta_ || meta_->family != "delta_copies")
        throw std::invalid_argument("hub-mirror-a: delta_copies metadata missing");
    inner_ = factory(*meta_->inner, rounds);
    int delta = int(meta_->param("delta"));
    int m = meta_->inner->vertex_count();
    composite_id_.assign(delta, std::vector<int>(m, -1));
    for (int v = 0; v < g.vertex_count(); ++v)
        if (meta_->copy_index[v] >= 0)
            composite_id_[meta_->copy_index[v]][meta_->inner_vertex[v]] = v;
}

int HubMirrorStrategy::choose(const Graph& g, const Position& pos) const {
    (void)g;
    if (pos.a.empty()) return meta_->hub;
    int w = pos.b.back();
    int copy = meta_->copy_index[w];
    if (copy < 0) throw std::logic_error("hub-mirror-a: B on the hub");

    // project the history into the copy; B is the inner first player
    Position inner_pos;
    for (int v : pos.b)
        if (meta_->copy_index[v] == copy) inner_pos.a.push_back(meta_->inner_vertex[v]);
    for (int v : pos.a)
        if (meta_->copy_index[v] == copy) inner_pos.b.push_back(meta_->inner_vertex[v]);
    int inner_move = inner_->choose(*meta_->inner, inner_pos);
    return composite_id_[copy][inner_move];
}

std::vector<std::string> strategy_names() {
    return {"central",         "two-round", "leg-defense", "simplex-b",
            "gcc-b",           "best-neighbor-b", "hub-mirror-a", "hub-mirror-a:greedy",
            "hub-mirror-a:solver", "greedy",  "solver",      "fixed:<v1,v2,...>"};
}

std::unique_ptr<Strategy> make_strategy(const std::string& name, const Graph& g, int rounds) {
    if (name == "central") return std::make_unique<CentralStrategy>(g);
    if (name == "two-round") return std::make_unique<TwoRoundTreeStrategy>(g);
    if (name == "leg-defense") return std::make_unique<LegDefenseStrategy>(g);
    if (name == "simplex-b") return std::make_unique<SimplexBStrategy>(g);
    if (name == "gcc-b") return std::make_unique<GccBStrategy>(g);
    if (name == "best-neighbor-b") return std::make_unique<BestNeighborStrategy>();
    if (name == "greedy") return std::make_unique<GreedyStrategy>();
    if (name == "solver") return std::make_unique<SolverStrategy>(rounds);
    if (name == "hub-mirror-a" || name == "hub-mirror-a:solver")
        return std::make_unique<HubMirrorStrategy>(
            g, [](const Graph&, int t) -> std::unique_ptr<Strategy> {
                return std::make_unique<SolverStrategy>(t);
            },
            rounds);
    if (name == "hub-mirror-a:greedy")
        return std::make_unique<HubMirrorStrategy>(
            g, [](const Graph&, int) -> std::unique_ptr<Strategy> {
                return std::make_unique<GreedyStrategy>();
            },
            rounds);
    if (name.rfind("fixed:", 0) == 0) {
        std::vector<int> moves;
        std::string rest = name.substr(6);
        size_t pos = 0;
        while (pos < rest.size()) {
            size_t comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            moves.push_back(std::stoi(rest.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return std::make_unique<FixedStrategy>(std::move(moves));
    }
    throw std::invalid_argument("unknown strategy: " + name);
}

} // namespace voro
