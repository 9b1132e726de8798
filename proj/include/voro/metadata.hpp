#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace voro {

class Graph;

// Per-vertex structural roles emitted by the family generators. Strategies
// that were designed for a specific construction consume these instead of
// re-deriving the structure from the adjacency lists.
//
// Only the fields that make sense for a family are populated; everything
// else stays empty/-1.
struct FamilyMetadata {
    std::string family;                      // "star", "simplex", "broom_leg_tree", ...
    std::map<std::string, long long> params; // k, N, t0, d, delta, L as applicable

    // --- lattice families (simplex slice, cut-corner cube, grid skeleton) ---
    // Vertices [0, lattice_count) are lattice points; coords[v] is the point.
    int lattice_count = 0;
    std::vector<std::vector<int>> coords;
    std::vector<int> corners;                 // corner vertex ids (lattice families)
    std::unordered_map<int, int> leaf_corner; // attached leaf -> its corner vertex

    // --- grid-connected cycles ---
    // grid_points[i] is a point of the underlying cut-corner cube; ring_nodes[i]
    // lists its 2d ring vertices in label order 1+,1-,2+,2-,...,d+,d-.
    std::vector<std::vector<int>> grid_points;
    std::vector<std::vector<int>> ring_nodes;
    // Interpretation map: every vertex -> index into grid_points. Ring nodes map
    // to their own point, connection-path interiors to the endpoint with the
    // smaller changing coordinate, tail vertices to their corner's point.
    std::vector<int> interp_grid;
    enum NodeKind : unsigned char { kRing = 0, kConnPath = 1, kTail = 2 };
    std::vector<unsigned char> node_kind;
    std::vector<int> corner_grid;    // grid-point indices of the d corners
    std::vector<int> tail_attach;    // ring node carrying each corner's tail
    std::vector<std::vector<int>> tails; // tail vertex ids per corner, near to far

    // --- trees with brooms ---
    struct Leg {
        std::vector<int> path;                     // top (adjacent to c) to bottom
        std::vector<int> anchors;                  // broom anchor vertices, top to bottom
        std::vector<std::vector<int>> broom_leaves; // leaves per anchor
    };
    int center = -1; // c
    int head = -1;   // h
    std::vector<int> head_leaves;
    std::vector<Leg> legs;

    // --- hub-and-copies composite ---
    int hub = -1;
    std::vector<int> copy_index;  // vertex -> copy (hub gets -1)
    std::vector<int> inner_vertex; // vertex -> id inside its copy (hub gets -1)
    std::vector<int> attach;       // composite vertex joined to the hub, per copy
    std::shared_ptr<const Graph> inner; // one copy, with its own metadata

    long long param(const std::string& key, long long fallback = -1) const {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    }
};

} // namespace voro
