#pragma once

#include <vector>

#include "voro/graph.hpp"
#include "voro/strategy.hpp"

namespace voro {

// Every tree edge splits the tree into two sides; the edge weighs the smaller
// side, and points from the smaller to the larger one. An edge whose sides
// both have n/2 vertices stays undirected (the central edge). The vertices
// without an outgoing arc are the roots: one central vertex, or the two
// central-edge endpoints.
struct WeightedOrientation {
    struct EdgeInfo {
        int u = -1, v = -1;   // endpoints, u < v
        long long weight = 0; // size of the smaller side
        int to = -1;          // head of the arc, or -1 when undirected
    };
    std::vector<EdgeInfo> edges;
    std::vector<int> roots;   // ascending; size 1 or 2
    std::vector<int> out_arc; // per vertex: index into edges, or -1

    bool has_central_edge() const { return roots.size() == 2; }
};

WeightedOrientation weight_and_orient(const Graph& tree);

// Certificate behind the two-round lower bound. Single: every component of
// T - {c} has at most n/3 vertices. Pair: every component of T - {u,v} has at
// most n/3 vertices, while the side trees T_u and T_v (components of u and v
// once the u-v path edges are removed) both exceed n/3.
struct ThresholdResult {
    bool single = false;
    int c = -1;
    int u = -1, v = -1;
    long long tu_size = 0, tv_size = 0;
    std::vector<int> threshold_vertices; // ascending; always 1 or 2 entries
};

ThresholdResult find_threshold(const Graph& tree);

// A, one round: claim a central vertex. Keeps at least half the tree.
class CentralStrategy : public Strategy {
public:
    explicit CentralStrategy(const Graph& tree);
    std::string name() const override { return "central"; }
    int choose(const Graph& g, const Position& pos) const override;

private:
    int root_;
};

// A, two rounds: play the threshold certificate. Single certificate: take c.
// Pair certificate: open on the vertex opposite the largest outer component,
// grab the other one if it is still free, otherwise take the best child.
// Histories outside that analysis fall back to the greedy move.
class TwoRoundTreeStrategy : public Strategy {
public:
    explicit TwoRoundTreeStrategy(const Graph& tree);
    std::string name() const override { return "two-round"; }
    int choose(const Graph& g, const Position& pos) const override;

    const ThresholdResult& certificate() const { return cert_; }

private:
    ThresholdResult cert_;
    int first_ = -1;   // A's opening move
    int other_ = -1;   // the partner vertex to grab next (pair case)
    int uprime_ = -1;  // best child of other_
};

// B's defense on gen_broom_leg_tree graphs, valid for any t >= 2.
class LegDefenseStrategy : public Strategy {
public:
    explicit LegDefenseStrategy(const Graph& tree);
    std::string name() const override { return "leg-defense"; }
    int choose(const Graph& g, const Position& pos) const override;

private:
    enum Where { kCenter, kHeadBroom, kLegPath, kLegLeaf };
    struct Place {
        Where where = kCenter;
        int leg = -1;
        int below = -1;  // next path vertex down, -1 at the bottom
        int anchor = -1; // broom anchor of a leaf
    };
    Place locate(int v) const;
    int defend(const Graph& g, const Position& pos, int a_move) const;

    const FamilyMetadata* meta_;
    std::vector<Place> place_;
};

} // namespace voro
