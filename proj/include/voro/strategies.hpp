#pragma once

#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "voro/graph.hpp"
#include "voro/strategy.hpp"

namespace voro {

// The projection move: subtract d-1 from coordinate i and add 1 to the rest.
// The cube variant clamps the additions at L. Either way every corner except
// the i-th gets strictly closer. Throws if the result leaves the vertex set.
enum class ProjectionVariant { Simplex, Cube };
std::vector<int> project_pi(const std::vector<int>& x, int i, ProjectionVariant variant,
                            int L = 0);

// B on gen_simplex graphs: respond to A's point x (leaves count as their
// corner) with the first free point of pi_i(x), pi_i(pi_i(x)), ... where i is
// the largest coordinate. Keeps B strictly closer to at least d-r corners
// after round r.
class SimplexBStrategy : public Strategy {
public:
    explicit SimplexBStrategy(const Graph& g);
    std::string name() const override { return "simplex-b"; }
    int choose(const Graph& g, const Position& pos) const override;

    // abstract response point for a given interpreted move; exposed for tests
    std::vector<int> chain_response(const std::vector<int>& x,
                                    const std::vector<std::vector<int>>& occupied) const;

private:
    const FamilyMetadata* meta_;
    int d_;
    long long t0_;
    std::unordered_map<long long, int> point_id_;
    long long pack(const std::vector<int>& x) const;
};

// B on gen_grid_connected_cycles graphs: interpret A's move as a grid point
// (connection-path nodes map to the lower endpoint, tail nodes to their
// corner, ring repeats are wasted), answer with the cube-variant projection
// chain, and claim the lowest-id free node on the responding ring.
class GccBStrategy : public Strategy {
public:
    explicit GccBStrategy(const Graph& g);
    std::string name() const override { return "gcc-b"; }
    int choose(const Graph& g, const Position& pos) const override;

private:
    const FamilyMetadata* meta_;
    int d_, L_;
    std::unordered_map<long long, int> grid_id_;
    long long pack(const std::vector<int>& x) const;
    // grid index of the abstract response, or -1 for a wasted move
    int respond(const std::vector<int>& abs_a, const std::vector<int>& abs_b,
                int interpreted) const;
};

// B, one round: against A's vertex v claim the neighbor x with the largest
// dominance region H(x). Guarantees at least (n-1)/max_degree vertices.
class BestNeighborStrategy : public Strategy {
public:
    std::string name() const override { return "best-neighbor-b"; }
    int choose(const Graph& g, const Position& pos) const override;
};

// A on gen_delta_copies graphs: open on the hub, then always answer inside
// the copy B just played, using a second-player strategy for the inner game.
using InnerStrategyFactory =
    std::function<std::unique_ptr<Strategy>(const Graph& inner, int rounds)>;

class HubMirrorStrategy : public Strategy {
public:
    HubMirrorStrategy(const Graph& g, const InnerStrategyFactory& factory, int rounds);
    std::string name() const override { return "hub-mirror-a"; }
    int choose(const Graph& g, const Position& pos) const override;

private:
    const FamilyMetadata* meta_;
    std::unique_ptr<Strategy> inner_;
    std::vector<std::vector<int>> composite_id_; // copy x inner vertex -> id
};

} // namespace voro
