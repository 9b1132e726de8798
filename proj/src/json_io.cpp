#include "voro/json_io.hpp"

#include <fstream>

namespace voro {

using nlohmann::json;

namespace {

json meta_to_json(const FamilyMetadata& m) {
    json j;
    j["name"] = m.family;
    j["params"] = m.params;
    if (m.lattice_count) j["lattice_count"] = m.lattice_count;
    if (!m.coords.empty()) j["coords"] = m.coords;
    if (!m.corners.empty()) j["corners"] = m.corners;
    if (!m.leaf_corner.empty()) {
        json lc = json::object();
        for (auto [leaf, corner] : m.leaf_corner) lc[std::to_string(leaf)] = corner;
        j["leaf_corner"] = lc;
    }
    if (!m.grid_points.empty()) {
        j["grid_points"] = m.grid_points;
        j["ring_nodes"] = m.ring_nodes;
        j["interp_grid"] = m.interp_grid;
        j["node_kind"] = m.node_kind;
        j["corner_grid"] = m.corner_grid;
        j["tail_attach"] = m.tail_attach;
        j["tails"] = m.tails;
    }
    if (m.center >= 0) j["center"] = m.center;
    if (m.head >= 0) {
        j["head"] = m.head;
        j["head_leaves"] = m.head_leaves;
    }
    if (!m.legs.empty()) {
        json legs = json::array();
        for (const auto& leg : m.legs)
            legs.push_back({{"path", leg.path},
                            {"anchors", leg.anchors},
                            {"broom_leaves", leg.broom_leaves}});
        j["legs"] = legs;
    }
    if (m.hub >= 0) {
        j["hub"] = m.hub;
        j["copy_index"] = m.copy_index;
        j["inner_vertex"] = m.inner_vertex;
        j["attach"] = m.attach;
        if (m.inner) j["inner"] = graph_to_json(*m.inner);
    }
    return j;
}

std::shared_ptr<FamilyMetadata> meta_from_json(const json& j) {
    auto m = std::make_shared<FamilyMetadata>();
    m->family = j.at("name").get<std::string>();
    if (j.contains("params"))
        m->params = j.at("params").get<std::map<std::string, long long>>();
    m->lattice_count = j.value("lattice_count", 0);
    if (j.contains("coords")) m->coords = j.at("coords").get<std::vector<std::vector<int>>>();
    if (j.contains("corners")) m->corners = j.at("corners").get<std::vector<int>>();
    if (j.contains("leaf_corner"))
        for (auto& [key, value] : j.at("leaf_corner").items())
            m->leaf_corner[std::stoi(key)] = value.get<int>();
    if (j.contains("grid_points")) {
        m->grid_points = j.at("grid_points").get<std::vector<std::vector<int>>>();
        m->ring_nodes = j.at("ring_nodes").get<std::vector<std::vector<int>>>();
        m->interp_grid = j.at("interp_grid").get<std::vector<int>>();
        m->node_kind = j.at("node_kind").get<std::vector<unsigned char>>();
        m->corner_grid = j.at("corner_grid").get<std::vector<int>>();
        m->tail_attach = j.at("tail_attach").get<std::vector<int>>();
        m->tails = j.at("tails").get<std::vector<std::vector<int>>>();
    }
    m->center = j.value("center", -1);
    if (j.contains("head")) {
        m->head = j.at("head").get<int>();
        m->head_leaves = j.at("head_leaves").get<std::vector<int>>();
    }
    if (j.contains("legs"))
        for (const auto& lj : j.at("legs")) {
            FamilyMetadata::Leg leg;
            leg.path = lj.at("path").get<std::vector<int>>();
            leg.anchors = lj.at("anchors").get<std::vector<int>>();
            leg.broom_leaves = lj.at("broom_leaves").get<std::vector<std::vector<int>>>();
            m->legs.push_back(std::move(leg));
        }
    if (j.contains("hub")) {
        m->hub = j.at("hub").get<int>();
        m->copy_index = j.at("copy_index").get<std::vector<int>>();
        m->inner_vertex = j.at("inner_vertex").get<std::vector<int>>();
        m->attach = j.at("attach").get<std::vector<int>>();
        if (j.contains("inner"))
            m->inner = std::make_shared<Graph>(graph_from_json(j.at("inner")));
    }
    return m;
}

} // namespace

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    json labels = json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.label(v).empty()) labels[std::to_string(v)] = g.label(v);
    if (!labels.empty()) j["labels"] = labels;
    if (g.family()) j["family"] = meta_to_json(*g.family());
    return j;
}

Graph graph_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<Graph::Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels.assign(n, "");
        for (auto& [key, value] : j.at("labels").items())
            labels[std::stoi(key)] = value.get<std::string>();
    }
    std::shared_ptr<const FamilyMetadata> meta;
    if (j.contains("family")) meta = meta_from_json(j.at("family"));
    return Graph(n, edges, std::move(labels), meta);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return graph_from_json(j);
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << graph_to_json(g).dump(2) << "\n";
}

json score_to_json(const Score& s) {
    return {{"half_units", s.a_half_units}, {"n", s.n}, {"ratio", s.ratio().str()}};
}

json solve_result_to_json(const SolveResult& r) {
    return {{"value", score_to_json(r.value)},
            {"pv", r.principal_variation},
            {"nodes", r.nodes_searched}};
}

json exploit_result_to_json(const ExploitResult& r, Player holder) {
    return {{"value", score_to_json(r.value)},
            {"holder", holder == Player::A ? "A" : "B"},
            {"holder_ratio", r.holder_ratio(holder).str()},
            {"guaranteed_payoff", r.guaranteed_payoff},
            {"witness_line", r.witness_line},
            {"nodes", r.nodes_searched}};
}

} // namespace voro
