#include "voro/verify.hpp"

#include <atomic>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "voro/distance.hpp"
#include "voro/enumerate.hpp"
#include "voro/families.hpp"
#include "voro/partition.hpp"
#include "voro/strategies.hpp"
#include "voro/tree.hpp"

namespace voro {

namespace {

bool relation_holds(const Rational& lhs, const std::string& rel, const Rational& rhs) {
    if (rel == "==") return lhs == rhs;
    if (rel == "<=") return lhs <= rhs;
    if (rel == "<") return lhs < rhs;
    throw std::invalid_argument("unknown relation " + rel);
}

std::vector<int> interleave(const Position& pos) {
    std::vector<int> moves;
    for (size_t i = 0; i < pos.a.size(); ++i) {
        moves.push_back(pos.a[i]);
        if (i < pos.b.size()) moves.push_back(pos.b[i]);
    }
    return moves;
}

// index-ordered parallel map over a corpus; results land by instance id
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
    int threads = int(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, count));
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

Rational solve_ratio(const Graph& g, int t, std::vector<int>* pv = nullptr) {
    GameSpec spec{&g, t};
    auto res = solve(spec);
    if (pv) *pv = res.principal_variation;
    return res.value.ratio();
}

} // namespace

BoundReport BoundReport::make(std::string bound, std::string instance, Rational lhs,
                              std::string relation, Rational rhs, std::vector<int> witness,
                              std::uint64_t seed) {
    BoundReport r;
    r.bound = std::move(bound);
    r.instance = std::move(instance);
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = std::move(relation);
    r.pass = relation_holds(lhs, r.relation, rhs);
    if (!r.pass) r.witness = std::move(witness);
    r.seed = seed;
    return r;
}

bool all_pass(const std::vector<BoundReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

void write_reports(std::ostream& os, const std::vector<BoundReport>& reports, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        for (const auto& r : reports) {
            nlohmann::json j{{"bound", r.bound},   {"instance", r.instance},
                             {"lhs", r.lhs.str()}, {"relation", r.relation},
                             {"rhs", r.rhs.str()}, {"pass", r.pass},
                             {"witness", r.witness}, {"seed", r.seed}};
            os << j.dump() << "\n";
        }
        return;
    }
    if (fmt == ReportFormat::Csv) {
        os << "bound,instance,lhs,relation,rhs,pass,seed\n";
        for (const auto& r : reports)
            os << r.bound << ",\"" << r.instance << "\"," << r.lhs.str() << "," << r.relation
               << "," << r.rhs.str() << "," << (r.pass ? "1" : "0") << "," << r.seed << "\n";
        return;
    }
    size_t bound_w = 5, inst_w = 8;
    for (const auto& r : reports) {
        bound_w = std::max(bound_w, r.bound.size());
        inst_w = std::max(inst_w, r.instance.size());
    }
    for (const auto& r : reports) {
        os << std::left << std::setw(int(bound_w) + 2) << r.bound << std::setw(int(inst_w) + 2)
           << r.instance << (r.pass ? "PASS  " : "FAIL  ") << r.lhs.str() << " " << r.relation
           << " " << r.rhs.str();
        if (!r.pass && !r.witness.empty()) {
            os << "  witness:";
            for (int v : r.witness) os << " " << v;
        }
        os << "\n";
    }
}

BoundReport verify_star(int k, int t) {
    if (2 * t > k + 1) throw std::invalid_argument("verify_star: need 2t <= k+1");
    Graph g = gen_star(k);
    std::vector<int> pv;
    Rational vr = solve_ratio(g, t, &pv);
    return BoundReport::make("star-formula", "S_" + std::to_string(k) + " t=" + std::to_string(t),
                             vr, "==", Rational(k + 1 - t, k + 1), pv);
}

BoundReport verify_path(int n, int t) {
    if (2 * t >= n) throw std::invalid_argument("verify_path: only defined for t < n/2");
    Graph g = gen_path(n);
    std::vector<int> pv;
    Rational vr = solve_ratio(g, t, &pv);
    Rational expected = (n % 2 == 1 && t == 1) ? Rational(n + 1, 2 * n) : Rational(1, 2);
    return BoundReport::make("path-draw", "P_" + std::to_string(n) + " t=" + std::to_string(t),
                             vr, "==", expected, pv);
}

BoundReport verify_nine_vertex() {
    Graph g = gen_nine_vertex();
    std::vector<int> pv;
    Rational vr = solve_ratio(g, 1, &pv);
    return BoundReport::make("nine-vertex", "C6-with-leaves t=1", vr, "==", Rational(4, 9), pv);
}

std::vector<BoundReport> verify_sandwich(const Graph& g, int t, const std::string& instance) {
    Rational vr1 = solve_ratio(g, 1);
    std::vector<int> pv;
    Rational vrt = solve_ratio(g, t, &pv);
    Rational half(1, 2);
    return {BoundReport::make("sandwich-lower", instance, vr1 * half, "<=", vrt, pv),
            BoundReport::make("sandwich-upper", instance, vrt, "<=",
                              (vr1 + Rational(1, 1)) * half, pv)};
}

std::vector<BoundReport> verify_tree_bounds(const Graph& tree, int t, const std::string& instance) {
    std::vector<BoundReport> out;
    const int n = tree.vertex_count();
    if (n >= 2) {
        std::vector<int> pv;
        Rational vr1 = solve_ratio(tree, 1, &pv);
        out.push_back(BoundReport::make("tree-one-round", instance, Rational(1, 2), "<=", vr1, pv));
    }
    if (n >= 4) {
        std::vector<int> pv;
        Rational vr2 = solve_ratio(tree, 2, &pv);
        out.push_back(BoundReport::make("tree-two-round", instance, Rational(1, 3), "<", vr2, pv));
        out.push_back(BoundReport::make("tree-quarter", instance, Rational(1, 4), "<=", vr2, pv));
    }
    if (t > 2 && n >= 2 * t) {
        std::vector<int> pv;
        Rational vrt = solve_ratio(tree, t, &pv);
        out.push_back(BoundReport::make("tree-quarter", instance + " t=" + std::to_string(t),
                                        Rational(1, 4), "<=", vrt, pv));
    }
    return out;
}

std::vector<BoundReport> verify_degree_bounds(const Graph& g, int t, const std::string& instance) {
    std::vector<BoundReport> out;
    const long long n = g.vertex_count();
    const long long D = g.max_degree();
    if (n >= 2) {
        std::vector<int> pv;
        Rational vr1 = solve_ratio(g, 1, &pv);
        out.push_back(BoundReport::make("degree-one-round", instance, vr1, "<=",
                                        Rational(n * D - n + 1, n * D), pv));
    }
    if (n >= 2 * t) {
        std::vector<int> pv;
        Rational vrt = solve_ratio(g, t, &pv);
        out.push_back(BoundReport::make("degree-many-rounds", instance, vrt, "<=",
                                        Rational(2 * n * D - n + 1, 2 * n * D), pv));
    }
    return out;
}

std::vector<BoundReport> verify_star_sweep(int max_k, int max_t) {
    std::vector<BoundReport> out;
    for (int k = 1; k <= max_k; ++k)
        for (int t = 1; t <= max_t && 2 * t <= k + 1; ++t) out.push_back(verify_star(k, t));
    return out;
}

std::vector<BoundReport> verify_path_sweep(int max_n, int max_t) {
    std::vector<BoundReport> out;
    for (int n = 2; n <= max_n; ++n)
        for (int t = 1; t <= max_t && 2 * t < n; ++t) out.push_back(verify_path(n, t));
    return out;
}

std::vector<BoundReport> verify_sandwich_corpus(int max_n, int t) {
    std::vector<BoundReport> out;
    for (int n = 2 * t; n <= max_n; ++n) {
        auto graphs = enumerate_connected(n);
        std::vector<std::vector<BoundReport>> results(graphs.size());
        parallel_for(int(graphs.size()), [&](int i) {
            std::string instance = "connected n=" + std::to_string(n) + " idx=" + std::to_string(i);
            results[i] = verify_sandwich(graphs[i], t, instance);
        });
        for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

std::vector<BoundReport> verify_tree_corpus(int max_n, int t) {
    std::vector<BoundReport> out;
    for (int n = 2; n <= max_n; ++n) {
        auto trees = enumerate_trees(n);
        std::vector<std::vector<BoundReport>> results(trees.size());
        parallel_for(int(trees.size()), [&](int i) {
            std::string instance = "tree n=" + std::to_string(n) + " idx=" + std::to_string(i);
            results[i] = verify_tree_bounds(trees[i], t, instance);
        });
        for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

namespace {

// Independent certificate check by direct component counting: 3*size vs n in
// integers, never via division.
bool threshold_certificate_ok(const Graph& tree, const ThresholdResult& res) {
    const int n = tree.vertex_count();
    if (res.threshold_vertices.empty() || res.threshold_vertices.size() > 2) return false;

    auto component_sizes = [&](const std::vector<int>& removed) {
        std::vector<char> blocked(n, 0), seen(n, 0);
        for (int v : removed) blocked[v] = seen[v] = 1;
        std::vector<long long> sizes;
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            long long size = 0;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++size;
                for (int w : tree.neighbors(v))
                    if (!seen[w] && !blocked[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            sizes.push_back(size);
        }
        return sizes;
    };

    if (res.single) {
        for (long long s : component_sizes({res.c}))
            if (3 * s > n) return false;
        return true;
    }

    // C2
    for (long long s : component_sizes({res.u, res.v}))
        if (3 * s > n) return false;

    // C2': side trees after deleting the u-v path edges
    auto parent = [&] {
        std::vector<int> par(n, -2);
        std::vector<int> stack{res.u};
        par[res.u] = -1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : tree.neighbors(v))
                if (par[w] == -2) {
                    par[w] = v;
                    stack.push_back(w);
                }
        }
        return par;
    }();
    std::vector<char> on_path(n, 0);
    for (int x = res.v; x != -1; x = parent[x]) on_path[x] = 1;
    auto side_size = [&](int start) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        long long size = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++size;
            for (int w : tree.neighbors(v)) {
                if (seen[w]) continue;
                if (on_path[v] && on_path[w]) continue; // path edge removed
                seen[w] = 1;
                stack.push_back(w);
            }
        }
        return size;
    };
    long long tu = side_size(res.u), tv = side_size(res.v);
    if (tu != res.tu_size || tv != res.tv_size) return false;
    return 3 * tu > n && 3 * tv > n;
}

} // namespace

std::vector<BoundReport> verify_threshold_corpus(int exhaustive_max_n, int random_count,
                                                 int random_max_n, std::uint64_t seed) {
    std::vector<BoundReport> out;
    for (int n = 1; n <= exhaustive_max_n; ++n) {
        auto trees = enumerate_trees(n);
        std::atomic<long long> violations{0};
        std::atomic<int> first_bad{-1};
        parallel_for(int(trees.size()), [&](int i) {
            auto res = find_threshold(trees[i]);
            if (!threshold_certificate_ok(trees[i], res)) {
                ++violations;
                int expect = -1;
                first_bad.compare_exchange_strong(expect, i);
            }
        });
        std::vector<int> witness;
        if (first_bad >= 0) witness.push_back(first_bad);
        out.push_back(BoundReport::make("threshold-certificate",
                                        "all trees n=" + std::to_string(n),
                                        Rational::integer(violations), "==", Rational::integer(0),
                                        witness));
    }
    if (random_count > 0) {
        std::atomic<long long> violations{0};
        std::atomic<long long> first_bad{-1};
        parallel_for(random_count, [&](int i) {
            std::uint64_t s = seed + std::uint64_t(i);
            int n = 1 + int(s * 2654435761u % std::uint64_t(random_max_n));
            Graph tree = random_tree(n, s);
            auto res = find_threshold(tree);
            if (!threshold_certificate_ok(tree, res)) {
                ++violations;
                long long expect = -1;
                first_bad.compare_exchange_strong(expect, (long long)s);
            }
        });
        std::vector<int> witness;
        if (first_bad >= 0) witness.push_back(int(first_bad));
        out.push_back(BoundReport::make(
            "threshold-certificate",
            "random trees count=" + std::to_string(random_count) + " max_n=" +
                std::to_string(random_max_n),
            Rational::integer(violations), "==", Rational::integer(0), witness, seed));
    }
    return out;
}

std::vector<BoundReport> verify_degree_corpus(int max_n, int t, int random_count,
                                              std::uint64_t seed) {
    std::vector<BoundReport> out;
    for (int n = 2; n <= max_n; ++n) {
        auto graphs = enumerate_connected(n);
        std::vector<std::vector<BoundReport>> results(graphs.size());
        parallel_for(int(graphs.size()), [&](int i) {
            std::string instance = "connected n=" + std::to_string(n) + " idx=" + std::to_string(i);
            results[i] = verify_degree_bounds(graphs[i], t, instance);
        });
        for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    }
    // seeded random max-degree-3 graphs on 8..10 vertices
    int produced = 0;
    std::uint64_t s = seed;
    while (produced < random_count) {
        int n = 8 + int(s % 3);
        Graph g = random_bounded_degree_graph(n, 3, s);
        if (g.max_degree() == 3) {
            auto reports = verify_degree_bounds(
                g, t, "random-d3 n=" + std::to_string(n) + " seed=" + std::to_string(s));
            for (auto& r : reports) {
                r.seed = s;
                out.push_back(std::move(r));
            }
            ++produced;
        }
        ++s;
    }
    return out;
}

std::vector<BoundReport> verify_gcc_metric(int d, int max_L) {
    std::vector<BoundReport> out;
    for (int L = 1; L <= max_L; ++L) {
        Graph g = gen_grid_connected_cycles(d, L, 2);
        const auto& meta = *g.family();
        long long bound_violations = 0, recovery_violations = 0;
        std::vector<int> witness;
        const int rings = int(meta.grid_points.size());
        std::vector<std::vector<int>> dist(rings * 2 * d);
        std::vector<int> ring_of;
        std::vector<int> nodes;
        for (int gi = 0; gi < rings; ++gi)
            for (int v : meta.ring_nodes[gi]) {
                nodes.push_back(v);
                ring_of.push_back(gi);
            }
        parallel_for(int(nodes.size()), [&](int i) { dist[i] = all_distances_from(g, nodes[i]); });
        for (size_t i = 0; i < nodes.size(); ++i) {
            for (size_t j = i; j < nodes.size(); ++j) {
                long long l1 = 0;
                const auto& x = meta.grid_points[ring_of[i]];
                const auto& y = meta.grid_points[ring_of[j]];
                for (int c = 0; c < d; ++c) l1 += std::abs(x[c] - y[c]);
                long long dd = dist[i][nodes[j]];
                bool bad_bounds = dd < 6 * d * l1 - 1 || dd > 6 * d * l1 + 5 * d;
                bool bad_recovery = (dd + 1) / (6 * d) != l1;
                if ((bad_bounds || bad_recovery) && witness.empty())
                    witness = {nodes[i], nodes[j], int(dd)};
                bound_violations += bad_bounds;
                recovery_violations += bad_recovery;
            }
        }
        std::string instance = "gcc d=" + std::to_string(d) + " L=" + std::to_string(L);
        out.push_back(BoundReport::make("gcc-metric-bounds", instance,
                                        Rational::integer(bound_violations), "==",
                                        Rational::integer(0), witness));
        out.push_back(BoundReport::make("gcc-metric-recovery", instance,
                                        Rational::integer(recovery_violations), "==",
                                        Rational::integer(0), witness));
    }
    return out;
}

std::vector<BoundReport> verify_simplex_guarantee(int d, int N, int d2, int t0_2, int N2) {
    std::vector<BoundReport> out;
    {
        Graph g = gen_simplex(d, 1, N);
        const long long S = g.family()->lattice_count;
        const long long n = g.vertex_count();
        SimplexBStrategy strat(g);
        GameSpec spec{&g, 1};
        auto res = exploit(spec, strat, Player::B);
        Rational a_share(2 * n - res.guaranteed_payoff, 2 * n);
        out.push_back(BoundReport::make(
            "simplex-share",
            "simplex d=" + std::to_string(d) + " t0=1 N=" + std::to_string(N), a_share, "<=",
            Rational(N + S, n), res.witness_line));
    }
    {
        Graph g = gen_simplex(d2, t0_2, N2);
        auto meta = g.family_ptr();
        auto corner_dist = std::make_shared<std::vector<std::vector<int>>>();
        for (int c : meta->corners) corner_dist->push_back(all_distances_from(g, c));
        SimplexBStrategy strat(g);
        GameSpec spec{&g, t0_2};
        auto predicate = [corner_dist, d2](const Graph&, const Position& pos, int round) {
            int closer = 0;
            for (const auto& row : *corner_dist) {
                int da = row[pos.a[0]], db = row[pos.b[0]];
                for (int v : pos.a) da = std::min(da, row[v]);
                for (int v : pos.b) db = std::min(db, row[v]);
                if (db < da) ++closer;
            }
            return closer >= d2 - round;
        };
        auto res = per_round_check(spec, strat, Player::B, predicate);
        out.push_back(BoundReport::make(
            "simplex-corner-guarantee",
            "simplex d=" + std::to_string(d2) + " t0=" + std::to_string(t0_2) + " N=" +
                std::to_string(N2),
            Rational::integer(res.pass ? 0 : 1), "==", Rational::integer(0),
            interleave(res.witness)));
    }
    return out;
}

BoundReport verify_leg_defense(int k, int N, int t) {
    Graph g = gen_broom_leg_tree(k, N);
    auto meta = g.family_ptr();
    std::vector<int> broom_leaves = meta->head_leaves;
    for (const auto& leg : meta->legs)
        for (const auto& leaves : leg.broom_leaves)
            broom_leaves.insert(broom_leaves.end(), leaves.begin(), leaves.end());

    ExploitOptions opt;
    opt.payoff = [broom_leaves](const Graph& graph, const Position& pos) {
        auto part = partition(graph, pos);
        long long half = 0;
        for (int leaf : broom_leaves) {
            if (part.owner[leaf] == Owner::B)
                half += 2;
            else if (part.owner[leaf] == Owner::Tied)
                half += 1;
        }
        return half;
    };
    LegDefenseStrategy strat(g);
    GameSpec spec{&g, t};
    auto res = exploit(spec, strat, Player::B, opt);
    long long target = 2LL * k * N - (long long)t * N;
    return BoundReport::make("leg-defense",
                             "broom k=" + std::to_string(k) + " N=" + std::to_string(N) +
                                 " t=" + std::to_string(t),
                             Rational::integer(target), "<=", Rational(res.guaranteed_payoff, 2),
                             res.witness_line);
}

std::vector<BoundReport> verify_self_consistency(int max_n, int t) {
    std::vector<BoundReport> out;
    for (int n = 2 * t; n <= max_n; ++n) {
        auto graphs = enumerate_connected(n);
        std::vector<BoundReport> results(graphs.size());
        parallel_for(int(graphs.size()), [&](int i) {
            const Graph& g = graphs[i];
            GameSpec spec{&g, t};
            SolveOptions plain;
            plain.memo = false;
            plain.alpha_beta = false;
            plain.twin_reduction = false;
            SolveOptions memo = plain;
            memo.memo = true;
            auto r_plain = solve(spec, plain);
            auto r_memo = solve(spec, memo);
            auto r_ab = solve(spec); // memo + alpha-beta + twin reduction
            Position replayed;
            for (int v : r_ab.principal_variation) replayed.push(v);
            long long replay_half = partition(g, replayed).score.a_half_units;
            std::string instance = "connected n=" + std::to_string(n) + " idx=" + std::to_string(i);
            BoundReport rep = BoundReport::make("solver-consistency", instance,
                                                r_plain.value.ratio(), "==", r_ab.value.ratio(),
                                                r_ab.principal_variation);
            if (r_memo.value.a_half_units != r_plain.value.a_half_units ||
                replay_half != r_ab.value.a_half_units) {
                rep.pass = false;
                rep.witness = r_ab.principal_variation;
            }
            results[i] = std::move(rep);
        });
        out.insert(out.end(), results.begin(), results.end());
    }
    return out;
}

std::vector<BoundReport> verify_two_round_strategy(int max_n, int broom_k, int broom_N) {
    std::vector<BoundReport> out;
    for (int n = 4; n <= max_n; ++n) {
        auto trees = enumerate_trees(n);
        std::vector<BoundReport> results(trees.size());
        parallel_for(int(trees.size()), [&](int i) {
            TwoRoundTreeStrategy strat(trees[i]);
            GameSpec spec{&trees[i], 2};
            auto res = exploit(spec, strat, Player::A);
            results[i] = BoundReport::make(
                "two-round-exploit", "tree n=" + std::to_string(n) + " idx=" + std::to_string(i),
                Rational(1, 3), "<", res.holder_ratio(Player::A), res.witness_line);
        });
        out.insert(out.end(), results.begin(), results.end());
    }
    {
        Graph g = gen_broom_leg_tree(broom_k, broom_N);
        std::vector<int> pv;
        Rational vr = solve_ratio(g, 2, &pv);
        out.push_back(BoundReport::make("broom-upper-bound",
                                        "broom k=" + std::to_string(broom_k) + " N=" +
                                            std::to_string(broom_N) + " t=2",
                                        vr, "<", Rational(1, 3) + Rational(1, 9), pv));
    }
    return out;
}

} // namespace voro
