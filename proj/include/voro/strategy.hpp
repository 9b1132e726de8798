#pragma once

#include <memory>
#include <string>
#include <vector>

#include "voro/graph.hpp"
#include "voro/partition.hpp"

namespace voro {

// A deterministic move rule: same graph and history always produce the same
// move, and the move is always an unclaimed vertex. Implementations may
// consume FamilyMetadata carried by the graph.
class Strategy {
public:
    virtual ~Strategy() = default;
    virtual std::string name() const = 0;
    // Move for the side to move in pos.
    virtual int choose(const Graph& g, const Position& pos) const = 0;
};

// Plays a scripted move list (one entry per own move); falls back to the
// lowest-id unclaimed vertex when the script runs out or the target is taken.
class FixedStrategy : public Strategy {
public:
    explicit FixedStrategy(std::vector<int> moves) : moves_(std::move(moves)) {}
    std::string name() const override;
    int choose(const Graph& g, const Position& pos) const override;

private:
    std::vector<int> moves_;
};

// Maximizes the mover's immediate half-unit score, ties by lowest id.
class GreedyStrategy : public Strategy {
public:
    std::string name() const override { return "greedy"; }
    int choose(const Graph& g, const Position& pos) const override;
};

int greedy_move(const Graph& g, const Position& pos);
int lowest_unclaimed(const Graph& g, const Position& pos);

// Exact play: solves the remaining game and follows the principal variation.
class SolverStrategy : public Strategy {
public:
    explicit SolverStrategy(int rounds) : rounds_(rounds) {}
    std::string name() const override { return "solver"; }
    int choose(const Graph& g, const Position& pos) const override;

private:
    int rounds_;
};

// Looks up a strategy by name, e.g. "central", "leg-defense", "simplex-b",
// "fixed:0,3,5". Throws std::invalid_argument for unknown names or when the
// graph lacks the metadata the strategy needs.
std::unique_ptr<Strategy> make_strategy(const std::string& name, const Graph& g, int rounds);
std::vector<std::string> strategy_names();

} // namespace voro
