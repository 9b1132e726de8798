#pragma once

#include <span>
#include <vector>

#include "voro/graph.hpp"
#include "voro/rational.hpp"

namespace voro {

enum class Player : int { A = 0, B = 1 };
inline Player opponent(Player p) { return p == Player::A ? Player::B : Player::A; }

// Claimed vertices of both players, in move order. A moves first and the
// players strictly alternate, so |a| == |b| or |a| == |b| + 1.
struct Position {
    std::vector<int> a;
    std::vector<int> b;

    int plies() const { return int(a.size() + b.size()); }
    Player to_move() const { return a.size() == b.size() ? Player::A : Player::B; }
    std::vector<int>& of(Player p) { return p == Player::A ? a : b; }
    const std::vector<int>& of(Player p) const { return p == Player::A ? a : b; }
    bool claimed(int v) const;
    void push(int v) { of(to_move()).push_back(v); }
    void pop();
};

// Throws std::invalid_argument if ids are bad, a vertex is claimed twice, or
// alternation is violated.
void validate_position(const Graph& g, const Position& pos);

// A's payoff in half-vertices: 2 per owned vertex, 1 per tied vertex.
// Always 0 <= a_half_units <= 2n, and the two players' payoffs sum to 2n.
struct Score {
    long long a_half_units = 0;
    long long n = 0;

    long long b_half_units() const { return 2 * n - a_half_units; }
    Rational ratio() const { return {a_half_units, 2 * n}; }
    Rational ratio_for(Player p) const {
        return p == Player::A ? ratio() : Rational{b_half_units(), 2 * n};
    }
    friend bool operator==(const Score&, const Score&) = default;
};

enum class Owner : unsigned char { A, B, Tied };

struct PartitionResult {
    Score score;
    std::vector<Owner> owner;
};

// Nearest-claimant labeling: v goes to the player with the strictly smaller
// distance to their claimed set, and is tied on equality.
PartitionResult partition(const Graph& g, const Position& pos);

// Allocation-free scoring path for search loops.
struct PartitionScratch {
    std::vector<int> dist_a, dist_b, queue;
};
long long partition_a_half(const Graph& g, std::span<const int> claimed_a,
                           std::span<const int> claimed_b, PartitionScratch& scratch);

// H(x) from the max-degree argument: all vertices strictly closer to x than
// to v, excluding ties.
std::vector<int> dominance_region(const Graph& g, int x, int v);

} // namespace voro
