#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "voro/enumerate.hpp"
#include "voro/families.hpp"
#include "voro/json_io.hpp"
#include "voro/solver.hpp"
#include "voro/strategies.hpp"
#include "voro/tree.hpp"
#include "voro/verify.hpp"

using namespace voro;

namespace {

struct OutputOpts {
    std::string format = "text";
    std::string out_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text", "csv"}));
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    }

    ReportFormat report_format() const {
        if (format == "json") return ReportFormat::Json;
        if (format == "csv") return ReportFormat::Csv;
        return ReportFormat::Text;
    }

    template <typename Fn>
    void emit(Fn&& fn) const {
        if (out_path.empty()) {
            fn(std::cout);
        } else {
            std::ofstream os(out_path);
            if (!os) throw std::runtime_error("cannot open " + out_path);
            fn(os);
        }
    }
};

Budget make_budget(std::uint64_t nodes, double seconds) {
    Budget b;
    if (nodes > 0) b.max_nodes = nodes;
    if (seconds > 0) b.max_seconds = seconds;
    return b;
}

int emit_reports(const std::vector<BoundReport>& reports, const OutputOpts& out) {
    out.emit([&](std::ostream& os) { write_reports(os, reports, out.report_format()); });
    return all_pass(reports) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and verifier for the discrete Voronoi game on graphs"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a family graph as JSON");
    gen->require_subcommand(1);
    std::string gen_out = "graph.json", gen_dot;
    int p_k = 4, p_n = 5, p_N = 1, p_d = 2, p_t0 = 1, p_L = 1, p_t = 1, p_delta = 2;
    int p_maxdeg = 0;
    bool p_everywhere = false;
    std::string p_inner;

    auto add_gen_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", gen_out, "output JSON path");
        cmd->add_option("--dot", gen_dot, "also write a DOT rendering");
    };
    auto* g_star = gen->add_subcommand("star", "star with k leaves");
    g_star->add_option("--k", p_k)->required();
    add_gen_common(g_star);
    auto* g_path = gen->add_subcommand("path", "path on n vertices");
    g_path->add_option("--n", p_n)->required();
    add_gen_common(g_path);
    auto* g_nine = gen->add_subcommand("nine", "the 9-vertex second-player-win example");
    add_gen_common(g_nine);
    auto* g_spider = gen->add_subcommand("spider", "star with legs of length N");
    g_spider->add_option("--k", p_k)->required();
    g_spider->add_option("--N", p_N)->required();
    add_gen_common(g_spider);
    auto* g_simplex = gen->add_subcommand("simplex", "lattice simplex slice with corner leaves");
    g_simplex->add_option("--d", p_d)->required();
    g_simplex->add_option("--t0", p_t0)->required();
    g_simplex->add_option("--N", p_N)->required();
    g_simplex->add_flag("--leaves-everywhere", p_everywhere);
    add_gen_common(g_simplex);
    auto* g_cube = gen->add_subcommand("cube", "cut-corner cube lattice");
    g_cube->add_option("--d", p_d)->required();
    g_cube->add_option("--t", p_t, "rounds parameter; side length is d^2*t");
    g_cube->add_option("--side", p_L, "explicit side length (overrides --t)");
    add_gen_common(g_cube);
    auto* g_gcc = gen->add_subcommand("gcc", "grid-connected cycles with corner tails");
    g_gcc->add_option("--d", p_d)->required();
    g_gcc->add_option("--L", p_L)->required();
    g_gcc->add_option("--N", p_N)->required();
    add_gen_common(g_gcc);
    auto* g_broom = gen->add_subcommand("broom", "two-leg broom tree with a head");
    g_broom->add_option("--k", p_k)->required();
    g_broom->add_option("--N", p_N)->required();
    add_gen_common(g_broom);
    auto* g_copies = gen->add_subcommand("copies", "hub joined to delta copies of an inner graph");
    g_copies->add_option("--delta", p_delta)->required();
    g_copies->add_option("--inner", p_inner, "inner graph JSON path")->required();
    g_copies->add_option("--max-degree", p_maxdeg, "refuse to exceed this degree");
    add_gen_common(g_copies);

    // ---- solve ----
    auto* solve_cmd = app.add_subcommand("solve", "exact game value of a graph");
    std::string graph_path;
    int rounds = 1;
    std::uint64_t budget_nodes = 0;
    double budget_seconds = 0;
    bool no_memo = false, no_ab = false;
    OutputOpts solve_out;
    solve_cmd->add_option("--graph", graph_path, "graph JSON path")->required();
    solve_cmd->add_option("--rounds", rounds)->required();
    solve_cmd->add_option("--budget-nodes", budget_nodes);
    solve_cmd->add_option("--budget-seconds", budget_seconds);
    solve_cmd->add_flag("--no-memo", no_memo);
    solve_cmd->add_flag("--no-alphabeta", no_ab);
    solve_out.attach(solve_cmd);

    // ---- exploit ----
    auto* exploit_cmd = app.add_subcommand("exploit", "worst case of a fixed strategy");
    std::string strategy_name, holder_name = "A";
    OutputOpts exploit_out;
    exploit_cmd->add_option("--graph", graph_path, "graph JSON path")->required();
    exploit_cmd->add_option("--strategy", strategy_name, "strategy name")->required();
    exploit_cmd->add_option("--holder", holder_name)->check(CLI::IsMember({"A", "B"}));
    exploit_cmd->add_option("--rounds", rounds)->required();
    exploit_cmd->add_option("--budget-nodes", budget_nodes);
    exploit_cmd->add_option("--budget-seconds", budget_seconds);
    exploit_out.attach(exploit_cmd);

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "check a bound from the write-up");
    verify_cmd->require_subcommand(1);
    OutputOpts verify_out;
    int v_max_k = 8, v_max_t = 3, v_max_n = 7, v_rounds = 2;
    int v_random = 25, v_random_max_n = 200;
    int v_d = 3, v_N = 50, v_d2 = 4, v_t02 = 2, v_N2 = 10, v_maxL = 6, v_k = 4;
    std::uint64_t v_seed = 20240101;

    auto* v_star = verify_cmd->add_subcommand("star", "VR(S_k,t) == 1 - t/(k+1)");
    v_star->add_option("--max-k", v_max_k);
    v_star->add_option("--max-t", v_max_t);
    auto* v_path = verify_cmd->add_subcommand("path", "paths draw except odd n, t=1");
    v_path->add_option("--max-n", v_max_n);
    v_path->add_option("--max-t", v_max_t);
    auto* v_nine = verify_cmd->add_subcommand("nine", "VR = 4/9 on the 9-vertex example");
    auto* v_sandwich =
        verify_cmd->add_subcommand("sandwich", "VR(G,1)/2 <= VR(G,t) <= (VR(G,1)+1)/2");
    v_sandwich->add_option("--max-n", v_max_n);
    v_sandwich->add_option("--rounds", v_rounds);
    auto* v_trees = verify_cmd->add_subcommand("trees", "tree lower bounds");
    v_trees->add_option("--max-n", v_max_n);
    v_trees->add_option("--rounds", v_rounds);
    auto* v_thresh = verify_cmd->add_subcommand("thresholds", "threshold certificates");
    v_thresh->add_option("--max-n", v_max_n);
    v_thresh->add_option("--random-count", v_random);
    v_thresh->add_option("--random-max-n", v_random_max_n);
    v_thresh->add_option("--seed", v_seed);
    auto* v_degree = verify_cmd->add_subcommand("degree", "max-degree upper bounds");
    v_degree->add_option("--max-n", v_max_n);
    v_degree->add_option("--rounds", v_rounds);
    v_degree->add_option("--random-count", v_random);
    v_degree->add_option("--seed", v_seed);
    auto* v_gcc = verify_cmd->add_subcommand("gcc-metric", "ring distance bounds and recovery");
    v_gcc->add_option("--d", v_d);
    v_gcc->add_option("--max-L", v_maxL);
    auto* v_simplex = verify_cmd->add_subcommand("simplex", "simplex strategy guarantees");
    v_simplex->add_option("--d", v_d);
    v_simplex->add_option("--N", v_N);
    v_simplex->add_option("--d2", v_d2);
    v_simplex->add_option("--t02", v_t02);
    v_simplex->add_option("--N2", v_N2);
    auto* v_leg = verify_cmd->add_subcommand("leg-defense", "B keeps 2kN - tN broom vertices");
    v_leg->add_option("--k", v_k);
    v_leg->add_option("--N", v_N);
    v_leg->add_option("--rounds", v_rounds);
    auto* v_cons = verify_cmd->add_subcommand("consistency", "solver self-consistency");
    v_cons->add_option("--max-n", v_max_n);
    v_cons->add_option("--rounds", v_rounds);
    auto* v_two = verify_cmd->add_subcommand("two-round", "two-round strategy exploits");
    v_two->add_option("--max-n", v_max_n);
    v_two->add_option("--k", v_k);
    v_two->add_option("--N", v_N);
    for (auto* sub : verify_cmd->get_subcommands({})) verify_out.attach(sub);

    // ---- bench ----
    auto* bench_cmd = app.add_subcommand("bench", "solver throughput on pinned instances");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            std::unique_ptr<Graph> g;
            if (g_star->parsed()) g = std::make_unique<Graph>(gen_star(p_k));
            if (g_path->parsed()) g = std::make_unique<Graph>(gen_path(p_n));
            if (g_nine->parsed()) g = std::make_unique<Graph>(gen_nine_vertex());
            if (g_spider->parsed()) g = std::make_unique<Graph>(gen_spider(p_k, p_N));
            if (g_simplex->parsed())
                g = std::make_unique<Graph>(gen_simplex(p_d, p_t0, p_N, p_everywhere));
            if (g_cube->parsed())
                g = std::make_unique<Graph>(g_cube->count("--side")
                                                ? gen_cut_corner_cube_side(p_d, p_L)
                                                : gen_cut_corner_cube(p_d, p_t));
            if (g_gcc->parsed()) g = std::make_unique<Graph>(gen_grid_connected_cycles(p_d, p_L, p_N));
            if (g_broom->parsed()) g = std::make_unique<Graph>(gen_broom_leg_tree(p_k, p_N));
            if (g_copies->parsed()) {
                Graph inner = load_graph(p_inner);
                g = std::make_unique<Graph>(gen_delta_copies(p_delta, inner, p_maxdeg));
            }
            save_graph(*g, gen_out);
            if (!gen_dot.empty()) {
                std::ofstream os(gen_dot);
                os << g->to_dot();
            }
            std::cerr << "wrote " << gen_out << " (" << g->vertex_count() << " vertices, "
                      << g->edge_count() << " edges)\n";
            return 0;
        }

        if (solve_cmd->parsed()) {
            Graph g = load_graph(graph_path);
            GameSpec spec{&g, rounds};
            SolveOptions opt;
            opt.memo = !no_memo;
            opt.alpha_beta = !no_ab;
            opt.budget = make_budget(budget_nodes, budget_seconds);
            auto res = solve(spec, opt);
            solve_out.emit([&](std::ostream& os) {
                if (solve_out.format == "json")
                    os << solve_result_to_json(res).dump(2) << "\n";
                else {
                    os << "value: " << res.value.a_half_units << "/" << 2 * res.value.n
                       << " half-units, ratio " << res.value.ratio().str() << "\n";
                    os << "pv:";
                    for (int v : res.principal_variation) os << " " << v;
                    os << "\nnodes: " << res.nodes_searched << "\n";
                }
            });
            return 0;
        }

        if (exploit_cmd->parsed()) {
            Graph g = load_graph(graph_path);
            GameSpec spec{&g, rounds};
            Player holder = holder_name == "A" ? Player::A : Player::B;
            auto strat = make_strategy(strategy_name, g, rounds);
            ExploitOptions opt;
            opt.budget = make_budget(budget_nodes, budget_seconds);
            auto res = exploit(spec, *strat, holder, opt);
            exploit_out.emit([&](std::ostream& os) {
                if (exploit_out.format == "json")
                    os << exploit_result_to_json(res, holder).dump(2) << "\n";
                else {
                    os << "holder " << holder_name << " guarantees "
                       << res.holder_ratio(holder).str() << " (payoff "
                       << res.guaranteed_payoff << ")\nwitness:";
                    for (int v : res.witness_line) os << " " << v;
                    os << "\nnodes: " << res.nodes_searched << "\n";
                }
            });
            return 0;
        }

        if (verify_cmd->parsed()) {
            std::vector<BoundReport> reports;
            if (v_star->parsed()) reports = verify_star_sweep(v_max_k, v_max_t);
            if (v_path->parsed()) reports = verify_path_sweep(v_max_n, v_max_t);
            if (v_nine->parsed()) reports = {verify_nine_vertex()};
            if (v_sandwich->parsed()) reports = verify_sandwich_corpus(v_max_n, v_rounds);
            if (v_trees->parsed()) reports = verify_tree_corpus(v_max_n, v_rounds);
            if (v_thresh->parsed())
                reports = verify_threshold_corpus(v_max_n, v_random, v_random_max_n, v_seed);
            if (v_degree->parsed()) reports = verify_degree_corpus(v_max_n, v_rounds, v_random, v_seed);
            if (v_gcc->parsed()) reports = verify_gcc_metric(v_d, v_maxL);
            if (v_simplex->parsed())
                reports = verify_simplex_guarantee(v_d, v_N, v_d2, v_t02, v_N2);
            if (v_leg->parsed()) reports = {verify_leg_defense(v_k, v_N, v_rounds)};
            if (v_cons->parsed()) reports = verify_self_consistency(v_max_n, v_rounds);
            if (v_two->parsed()) reports = verify_two_round_strategy(v_max_n, v_k, v_N);
            return emit_reports(reports, verify_out);
        }

        if (bench_cmd->parsed()) {
            struct Pin {
                std::string name;
                Graph graph;
                int rounds;
            };
            std::vector<Pin> pins;
            pins.push_back({"path n=12 t=3", gen_path(12), 3});
            pins.push_back({"nine-vertex t=2", gen_nine_vertex(), 2});
            pins.push_back({"star k=8 t=3", gen_star(8), 3});
            pins.push_back({"broom k=4 N=5 t=2", gen_broom_leg_tree(4, 5), 2});
            for (auto& pin : pins) {
                GameSpec spec{&pin.graph, pin.rounds};
                auto start = std::chrono::steady_clock::now();
                auto res = solve(spec);
                double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                               .count();
                std::cout << pin.name << ": value " << res.value.ratio().str() << ", "
                          << res.nodes_searched << " nodes in " << std::fixed
                          << std::setprecision(3) << s << "s ("
                          << std::uint64_t(res.nodes_searched / std::max(s, 1e-9))
                          << " nodes/s)\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
