#include "voro/strategy.hpp"

#include <sstream>
#include <stdexcept>

#include "voro/solver.hpp"

namespace voro {

std::string FixedStrategy::name() const {
    std::ostringstream os;
    os << "fixed:";
    for (size_t i = 0; i < moves_.size(); ++i) os << (i ? "," : "") << moves_[i];
    return os.str();
}

int lowest_unclaimed(const Graph& g, const Position& pos) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!pos.claimed(v)) return v;
    throw std::logic_error("no unclaimed vertex left");
}

int greedy_move(const Graph& g, const Position& pos) {
    Player me = pos.to_move();
    const auto& opp = pos.of(opponent(me));
    if (opp.empty()) return lowest_unclaimed(g, pos);
    PartitionScratch scratch;
    int best = -1;
    long long best_score = -1;
    Position next = pos;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (pos.claimed(v)) continue;
        next.of(me).push_back(v);
        long long a = partition_a_half(g, next.a, next.b, scratch);
        next.of(me).pop_back();
        long long mine = me == Player::A ? a : 2LL * g.vertex_count() - a;
        if (mine > best_score) {
            best_score = mine;
            best = v;
        }
    }
    return best;
}

int FixedStrategy::choose(const Graph& g, const Position& pos) const {
    size_t k = pos.of(pos.to_move()).size();
    if (k < moves_.size() && moves_[k] >= 0 && moves_[k] < g.vertex_count() &&
        !pos.claimed(moves_[k]))
        return moves_[k];
    return lowest_unclaimed(g, pos);
}

int GreedyStrategy::choose(const Graph& g, const Position& pos) const {
    return greedy_move(g, pos);
}

int SolverStrategy::choose(const Graph& g, const Position& pos) const {
    GameSpec spec{&g, rounds_};
    auto res = solve_from(spec, pos);
    if (res.principal_variation.empty())
        throw std::logic_error("SolverStrategy: game already complete");
    return res.principal_variation.front();
}

} // namespace voro
