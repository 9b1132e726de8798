#include "voro/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace voro {

void GameSpec::validate() const {
    if (!graph) throw std::invalid_argument("GameSpec: missing graph");
    if (rounds < 1) throw std::invalid_argument("GameSpec: rounds must be >= 1");
    if (2LL * rounds > graph->vertex_count())
        throw std::invalid_argument("GameSpec: t too large, need 2t <= n");
}

StrategyError::StrategyError(const Position& history_, int move_)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "strategy produced illegal move " << move_ << " at history A=[";
          for (size_t i = 0; i < history_.a.size(); ++i) os << (i ? "," : "") << history_.a[i];
          os << "] B=[";
          for (size_t i = 0; i < history_.b.size(); ++i) os << (i ? "," : "") << history_.b[i];
          os << "]";
          return os.str();
      }()),
      history(history_), move(move_) {}

namespace {

using Clock = std::chrono::steady_clock;

struct MaskKey {
    std::vector<std::uint64_t> w;
    bool operator==(const MaskKey&) const = default;
};

struct MaskKeyHash {
    size_t operator()(const MaskKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : k.w) {
            h ^= x;
            h *= 1099511628211ull;
            h ^= h >> 29;
        }
        return size_t(h);
    }
};

struct Bounds {
    long long lo, hi;
};

struct BudgetClock {
    const Budget& budget;
    std::uint64_t nodes = 0;
    Clock::time_point start = Clock::now();

    explicit BudgetClock(const Budget& b) : budget(b) {}

    void tick() {
        ++nodes;
        if (nodes > budget.max_nodes) throw BudgetExceeded(nodes);
        if ((nodes & 0xfff) == 0 && std::isfinite(budget.max_seconds)) {
            double s = std::chrono::duration<double>(Clock::now() - start).count();
            if (s > budget.max_seconds) throw BudgetExceeded(nodes);
        }
    }
};

class Searcher {
public:
    Searcher(const Graph& g, int t, const SolveOptions& opt)
        : g_(g), t_(t), opt_(opt), n_(g.vertex_count()),
          words_((n_ + 63) / 64), clock_(opt_.budget) {
        amask_.assign(words_, 0);
        bmask_.assign(words_, 0);
        probe_.w.resize(2 * words_);
        if (opt_.twin_reduction) {
            twins_ = twin_classes(g_);
        } else {
            // singleton classes
            twins_.class_of.resize(n_);
            twins_.members.resize(n_);
            for (int v = 0; v < n_; ++v) {
                twins_.class_of[v] = v;
                twins_.members[v] = {v};
            }
        }
        // highest degree first is the move-ordering heuristic; value-neutral
        class_order_.resize(twins_.members.size());
        for (size_t i = 0; i < class_order_.size(); ++i) class_order_[i] = int(i);
        std::sort(class_order_.begin(), class_order_.end(), [&](int a, int b) {
            int da = g_.degree(twins_.members[a][0]);
            int db = g_.degree(twins_.members[b][0]);
            if (da != db) return da > db;
            return twins_.members[a][0] < twins_.members[b][0];
        });
    }

    void load(const Position& pos) {
        amask_.assign(words_, 0);
        bmask_.assign(words_, 0);
        amoves_ = pos.a;
        bmoves_ = pos.b;
        for (int v : pos.a) set_bit(amask_, v);
        for (int v : pos.b) set_bit(bmask_, v);
    }

    bool claimed(int v) const {
        return ((amask_[v >> 6] | bmask_[v >> 6]) >> (v & 63)) & 1;
    }

    void apply(int ply, int v) {
        if (side_a(ply)) {
            set_bit(amask_, v);
            amoves_.push_back(v);
        } else {
            set_bit(bmask_, v);
            bmoves_.push_back(v);
        }
    }

    void undo(int ply, int v) {
        if (side_a(ply)) {
            clear_bit(amask_, v);
            amoves_.pop_back();
        } else {
            clear_bit(bmask_, v);
            bmoves_.pop_back();
        }
    }

    long long search(int ply, long long alpha, long long beta) {
        clock_.tick();
        if (ply == 2 * t_)
            return partition_a_half(g_, amoves_, bmoves_, scratch_);

        const bool maximizing = side_a(ply) != opt_.first_player_minimizes;
        const long long alpha0 = alpha, beta0 = beta;

        Bounds* entry = nullptr;
        if (opt_.memo) {
            entry = &lookup();
            if (entry->lo == entry->hi) return entry->lo;
            if (opt_.alpha_beta) {
                if (entry->lo >= beta) return entry->lo;
                if (entry->hi <= alpha) return entry->hi;
                alpha = std::max(alpha, entry->lo);
                beta = std::min(beta, entry->hi);
            }
        }

        long long best = maximizing ? -1 : 4LL * n_ + 1;
        for (int ci : class_order_) {
            int v = first_unclaimed(twins_.members[ci]);
            if (v < 0) continue;
            apply(ply, v);
            long long val = search(ply + 1, alpha, beta);
            undo(ply, v);
            if (maximizing) {
                if (val > best) best = val;
                if (opt_.alpha_beta) {
                    alpha = std::max(alpha, best);
                    if (best >= beta) break;
                }
            } else {
                if (val < best) best = val;
                if (opt_.alpha_beta) {
                    beta = std::min(beta, best);
                    if (best <= alpha) break;
                }
            }
        }

        if (opt_.memo) {
            // entry may have been invalidated by rehash during recursion
            Bounds& e = lookup();
            if (best <= alpha0)
                e.hi = std::min(e.hi, best);
            else if (best >= beta0)
                e.lo = std::max(e.lo, best);
            else
                e.lo = e.hi = best;
        }
        return best;
    }

    // Exact full-window value of the position currently loaded.
    long long exact(int ply) { return search(ply, -1, 4LL * n_ + 1); }

    std::vector<int> extract_pv(int start_ply, long long root_value) {
        std::vector<int> pv;
        long long value = root_value;
        for (int ply = start_ply; ply < 2 * t_; ++ply) {
            bool found = false;
            for (int v = 0; v < n_ && !found; ++v) {
                if (claimed(v)) continue;
                apply(ply, v);
                long long child = exact(ply + 1);
                if (child == value) {
                    pv.push_back(v);
                    found = true; // keep the move applied
                } else {
                    undo(ply, v);
                }
            }
            if (!found) throw std::logic_error("principal variation extraction failed");
        }
        // rewind
        for (int ply = 2 * t_ - 1; ply >= start_ply; --ply) undo(ply, pv[ply - start_ply]);
        return pv;
    }

    std::uint64_t nodes() const { return clock_.nodes; }

private:
    static bool side_a(int ply) { return (ply & 1) == 0; }

    static void set_bit(std::vector<std::uint64_t>& m, int v) { m[v >> 6] |= 1ull << (v & 63); }
    static void clear_bit(std::vector<std::uint64_t>& m, int v) { m[v >> 6] &= ~(1ull << (v & 63)); }

    int first_unclaimed(const std::vector<int>& members) const {
        for (int v : members)
            if (!claimed(v)) return v;
        return -1;
    }

    Bounds& lookup() {
        for (int i = 0; i < words_; ++i) {
            probe_.w[i] = amask_[i];
            probe_.w[words_ + i] = bmask_[i];
        }
        auto [it, inserted] = tt_.try_emplace(probe_, Bounds{-1, 4LL * n_ + 1});
        return it->second;
    }

    const Graph& g_;
    int t_;
    SolveOptions opt_;
    int n_, words_;
    std::vector<std::uint64_t> amask_, bmask_;
    std::vector<int> amoves_, bmoves_;
    PartitionScratch scratch_;
    TwinClasses twins_;
    std::vector<int> class_order_;
    BudgetClock clock_;
    std::unordered_map<MaskKey, Bounds, MaskKeyHash> tt_;
    MaskKey probe_;
};

} // namespace

SolveResult solve(const GameSpec& spec, const SolveOptions& opt) {
    return solve_from(spec, Position{}, opt);
}

SolveResult solve_from(const GameSpec& spec, const Position& start, const SolveOptions& opt) {
    spec.validate();
    validate_position(spec.g(), start);
    if (start.plies() > 2 * spec.rounds)
        throw std::invalid_argument("solve_from: position longer than the game");

    Searcher searcher(spec.g(), spec.rounds, opt);
    searcher.load(start);
    long long value = searcher.exact(start.plies());
    SolveResult res;
    res.value = Score{value, spec.g().vertex_count()};
    res.principal_variation = searcher.extract_pv(start.plies(), value);
    res.nodes_searched = searcher.nodes();
    return res;
}

namespace {

// Exhaustive adversary walk shared by exploit and per_round_check.
struct AdversaryWalk {
    const Graph& g;
    int t;
    const Strategy& strat;
    Player holder;
    BudgetClock clock;
    Position pos;
    std::vector<int> adversary_moves;
    std::vector<char> taken;

    AdversaryWalk(const GameSpec& spec, const Strategy& s, Player h, const Budget& b)
        : g(spec.g()), t(spec.rounds), strat(s), holder(h), clock(b),
          taken(spec.g().vertex_count(), 0) {}

    int holder_move() {
        int v = strat.choose(g, pos);
        if (v < 0 || v >= g.vertex_count() || taken[v]) throw StrategyError(pos, v);
        return v;
    }

    void push(int v) {
        taken[v] = 1;
        pos.push(v);
    }
    void pop(int v) {
        taken[v] = 0;
        pos.pop();
    }
};

} // namespace

ExploitResult exploit(const GameSpec& spec, const Strategy& strat, Player holder,
                      const ExploitOptions& opt) {
    spec.validate();
    AdversaryWalk walk(spec, strat, holder, opt.budget);
    PartitionScratch scratch;
    ExploitResult res;
    res.guaranteed_payoff = std::numeric_limits<long long>::max();

    auto leaf_payoff = [&]() -> long long {
        if (opt.payoff) return opt.payoff(walk.g, walk.pos);
        long long a = partition_a_half(walk.g, walk.pos.a, walk.pos.b, scratch);
        return holder == Player::A ? a : 2LL * walk.g.vertex_count() - a;
    };

    auto rec = [&](auto&& self, int ply) -> void {
        walk.clock.tick();
        if (ply == 2 * spec.rounds) {
            long long payoff = leaf_payoff();
            if (payoff < res.guaranteed_payoff) {
                res.guaranteed_payoff = payoff;
                res.witness_line = walk.adversary_moves;
                long long a = partition_a_half(walk.g, walk.pos.a, walk.pos.b, scratch);
                res.value = Score{a, walk.g.vertex_count()};
            }
            return;
        }
        if (walk.pos.to_move() == holder) {
            int v = walk.holder_move();
            walk.push(v);
            self(self, ply + 1);
            walk.pop(v);
        } else {
            for (int v = 0; v < walk.g.vertex_count(); ++v) {
                if (walk.taken[v]) continue;
                walk.adversary_moves.push_back(v);
                walk.push(v);
                self(self, ply + 1);
                walk.pop(v);
                walk.adversary_moves.pop_back();
            }
        }
    };
    rec(rec, 0);
    res.nodes_searched = walk.clock.nodes;
    return res;
}

Position replay_exploit(const GameSpec& spec, const Strategy& strat, Player holder,
                        const std::vector<int>& witness_line) {
    spec.validate();
    Position pos;
    size_t next = 0;
    for (int ply = 0; ply < 2 * spec.rounds; ++ply) {
        if (pos.to_move() == holder) {
            int v = strat.choose(spec.g(), pos);
            if (v < 0 || v >= spec.g().vertex_count() || pos.claimed(v))
                throw StrategyError(pos, v);
            pos.push(v);
        } else {
            if (next >= witness_line.size())
                throw std::invalid_argument("replay_exploit: witness line too short");
            pos.push(witness_line[next++]);
        }
    }
    validate_position(spec.g(), pos);
    return pos;
}

RoundCheckResult per_round_check(const GameSpec& spec, const Strategy& strat, Player holder,
                                 const RoundPredicate& predicate, const Budget& budget) {
    spec.validate();
    AdversaryWalk walk(spec, strat, holder, budget);
    RoundCheckResult res;

    auto rec = [&](auto&& self, int ply) -> bool {
        walk.clock.tick();
        if (ply == 2 * spec.rounds) {
            ++res.lines;
            return true;
        }
        auto step = [&](int v) -> bool {
            walk.push(v);
            bool ok = true;
            if (walk.pos.plies() % 2 == 0) {
                int round = walk.pos.plies() / 2;
                if (!predicate(walk.g, walk.pos, round)) {
                    res.pass = false;
                    res.failed_round = round;
                    res.witness = walk.pos;
                    ok = false;
                }
            }
            if (ok) ok = self(self, ply + 1);
            walk.pop(v);
            return ok;
        };
        if (walk.pos.to_move() == holder) return step(walk.holder_move());
        for (int v = 0; v < walk.g.vertex_count(); ++v) {
            if (walk.taken[v]) continue;
            if (!step(v)) return false;
        }
        return true;
    };
    rec(rec, 0);
    res.nodes_searched = walk.clock.nodes;
    return res;
}

} // namespace voro
