#pragma once

#include "voro/graph.hpp"

namespace voro {

// Generators for every graph family used by the strategies and verifiers.
// Each returns a connected Graph carrying FamilyMetadata; all of them reject
// non-positive parameters and anything that would exceed max_vertices.

inline constexpr long long kDefaultVertexCap = 1'000'000;

Graph gen_star(int k);
Graph gen_path(int n);

// Six-cycle with a leaf on every other cycle vertex; the smallest known graph
// where the second player wins the one-round game.
Graph gen_nine_vertex();

// Star with every leaf replaced by a path of N edges.
Graph gen_spider(int k, int N);

// Lattice slice {x >= 0, sum x_i = d^2*t0} with edges between points at
// L1-distance 2, plus N leaves on each of the d corners. Graph distance
// between lattice points is half their L1 distance.
// leaves_everywhere attaches the N leaves to every lattice vertex instead of
// the corners only; exposed for experimentation.
Graph gen_simplex(int d, int t0, int N, bool leaves_everywhere = false,
                  long long max_vertices = kDefaultVertexCap);

// Cube [0,L]^d with the low corner cut off: {0 <= x_i <= L, sum x_i >= L},
// edges at L1-distance 1. L = d^2*t.
Graph gen_cut_corner_cube(int d, int t, long long max_vertices = kDefaultVertexCap);
Graph gen_cut_corner_cube_side(int d, int L, long long max_vertices = kDefaultVertexCap);

// Degree-3 realization of the cut-corner cube: each grid point becomes a ring
// of 2d nodes, adjacent grid points are joined by connection paths of 6d-1
// edges, and a path of N vertices hangs off one free ring node per corner.
Graph gen_grid_connected_cycles(int d, int L, int N,
                                long long max_vertices = kDefaultVertexCap);

// Degree-3 center with two legs (k brooms of size N each, at successive gaps
// 1,2,4,...,2^(k-1) down the leg path) and a head vertex carrying a broom of
// size k*N.
Graph gen_broom_leg_tree(int k, int N, long long max_vertices = kDefaultVertexCap);

// delta disjoint copies of inner, each joined by one edge to a fresh hub
// vertex. The attachment point is the lowest-id minimum-degree inner vertex.
// If max_degree > 0, the construction refuses to exceed it.
Graph gen_delta_copies(int delta, const Graph& inner, int max_degree = 0,
                       long long max_vertices = kDefaultVertexCap);

} // namespace voro
