#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "voro/graph.hpp"
#include "voro/rational.hpp"
#include "voro/solver.hpp"

namespace voro {

// One verified inequality (or equality). pass is always recomputed from the
// exact rational sides, never from floating point.
struct BoundReport {
    std::string bound;    // bound id, e.g. "star-formula"
    std::string instance; // enough to reproduce the check
    Rational lhs, rhs;
    std::string relation; // "==", "<=", "<"
    bool pass = false;
    std::vector<int> witness; // principal variation or adversary line on failure
    std::uint64_t seed = 0;

    static BoundReport make(std::string bound, std::string instance, Rational lhs,
                            std::string relation, Rational rhs, std::vector<int> witness = {},
                            std::uint64_t seed = 0);
};

bool all_pass(const std::vector<BoundReport>& reports);

enum class ReportFormat { Json, Text, Csv };
void write_reports(std::ostream& os, const std::vector<BoundReport>& reports, ReportFormat fmt);

// --- single-instance verifiers ---

// VR(S_k, t) == 1 - t/(k+1)
BoundReport verify_star(int k, int t);
// VR(P_n, t) == 1/2, except odd n with t = 1 where it is (n+1)/(2n).
// Only defined for t < n/2.
BoundReport verify_path(int n, int t);
// VR = 4/9 on the nine-vertex example at t = 1.
BoundReport verify_nine_vertex();
// VR(G,1)/2 <= VR(G,t) <= (VR(G,1)+1)/2
std::vector<BoundReport> verify_sandwich(const Graph& g, int t, const std::string& instance);
// VR(T,1) >= 1/2, VR(T,2) > 1/3, VR(T,t) >= 1/4
std::vector<BoundReport> verify_tree_bounds(const Graph& tree, int t, const std::string& instance);
// VR(G,1) <= 1 - 1/D + 1/(nD) and VR(G,t) <= 1 - 1/(2D) + 1/(2nD)
std::vector<BoundReport> verify_degree_bounds(const Graph& g, int t, const std::string& instance);

// --- corpus sweeps (used by the CLI and the acceptance suite) ---

std::vector<BoundReport> verify_star_sweep(int max_k, int max_t);
std::vector<BoundReport> verify_path_sweep(int max_n, int max_t);
std::vector<BoundReport> verify_sandwich_corpus(int max_n, int t);
std::vector<BoundReport> verify_tree_corpus(int max_n, int t);

// find_threshold certificates re-checked by direct component counting, on all
// trees up to exhaustive_max_n plus random_count seeded random trees of up to
// random_max_n vertices. Also asserts the 1-or-2 threshold-vertex count.
std::vector<BoundReport> verify_threshold_corpus(int exhaustive_max_n, int random_count,
                                                 int random_max_n, std::uint64_t seed);

std::vector<BoundReport> verify_degree_corpus(int max_n, int t, int random_count,
                                              std::uint64_t seed);

// ring-pair distance bounds and the L1 recovery formula on
// gen_grid_connected_cycles(d, L) for every L up to max_L
std::vector<BoundReport> verify_gcc_metric(int d, int max_L);

// exploit(simplex-b) share bound at (d, t0=1, N) and the per-round
// "d-r corners" guarantee at (d2, t0_2, N2)
std::vector<BoundReport> verify_simplex_guarantee(int d, int N, int d2, int t0_2, int N2);

// exploit(leg-defense) keeps at least 2kN - tN broom vertices
BoundReport verify_leg_defense(int k, int N, int t);

// plain minimax == memoized == alpha-beta, and PV replay reproduces the value
std::vector<BoundReport> verify_self_consistency(int max_n, int t);

// exploit(two-round) > 1/3 on all trees up to max_n, and the broom-leg tree
// solve stays below 1/3 + 1/9 at (k, N)
std::vector<BoundReport> verify_two_round_strategy(int max_n, int broom_k, int broom_N);

} // namespace voro
