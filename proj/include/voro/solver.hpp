#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "voro/graph.hpp"
#include "voro/partition.hpp"
#include "voro/strategy.hpp"

namespace voro {

struct GameSpec {
    const Graph* graph = nullptr;
    int rounds = 1;

    const Graph& g() const { return *graph; }
    void validate() const;
};

struct Budget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
};

// Exceeding a budget is an error, never a silent approximation.
struct BudgetExceeded : std::runtime_error {
    std::uint64_t nodes;
    explicit BudgetExceeded(std::uint64_t nodes_)
        : std::runtime_error("solver budget exceeded after " + std::to_string(nodes_) + " nodes"),
          nodes(nodes_) {}
};

// Raised when a Strategy emits an occupied or out-of-range vertex; carries the
// offending history.
struct StrategyError : std::runtime_error {
    Position history;
    int move;
    StrategyError(const Position& history_, int move_);
};

struct SolveOptions {
    bool memo = true;
    bool alpha_beta = true;
    bool twin_reduction = true;
    // Role swap: the first player minimizes A-half-units instead of maximizing.
    bool first_player_minimizes = false;
    Budget budget;
};

struct SolveResult {
    Score value;
    std::vector<int> principal_variation; // length 2t, lowest-id tie-breaks
    std::uint64_t nodes_searched = 0;
};

// Exact game value with A maximizing half-units, B minimizing, strict
// alternation for 2t plies.
SolveResult solve(const GameSpec& spec, const SolveOptions& opt = {});

// Same, starting from a partially played position. The principal variation
// covers only the remaining plies.
SolveResult solve_from(const GameSpec& spec, const Position& start, const SolveOptions& opt = {});

struct ExploitOptions {
    Budget budget;
    // Holder's payoff of a finished game; defaults to the holder's half-units.
    std::function<long long(const Graph&, const Position&)> payoff;
};

struct ExploitResult {
    Score value;                     // partition score of the worst line found
    long long guaranteed_payoff = 0; // exact min of the payoff over adversary play
    std::vector<int> witness_line;   // adversary moves only; strategy moves replay
    std::uint64_t nodes_searched = 0;

    Rational holder_ratio(Player holder) const { return value.ratio_for(holder); }
};

// Worst case of a fixed strategy: branches only over adversary moves, the
// holder's moves come from the strategy.
ExploitResult exploit(const GameSpec& spec, const Strategy& strat, Player holder,
                      const ExploitOptions& opt = {});

// Reconstructs the full game of witness_line against the strategy.
Position replay_exploit(const GameSpec& spec, const Strategy& strat, Player holder,
                        const std::vector<int>& witness_line);

using RoundPredicate = std::function<bool(const Graph&, const Position&, int round)>;

struct RoundCheckResult {
    bool pass = true;
    int failed_round = -1;
    Position witness;          // position at the first failure
    std::uint64_t lines = 0;   // completed adversary lines
    std::uint64_t nodes_searched = 0;
};

// Runs the exploit search and evaluates the predicate after every completed
// round on every adversary line; stops at the first failure.
RoundCheckResult per_round_check(const GameSpec& spec, const Strategy& strat, Player holder,
                                 const RoundPredicate& predicate, const Budget& budget = {});

} // namespace voro
