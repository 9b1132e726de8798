#pragma once

#include <string>

#include <json.hpp>

#include "voro/graph.hpp"
#include "voro/solver.hpp"

namespace voro {

// Graph wire format: { "n": int, "edges": [[u,v],...], "labels": {"3": tag},
// "family": {...} }. Vertex ids are 0-based. The family block carries enough
// of the generator metadata to rebuild family-aware strategies.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

nlohmann::json score_to_json(const Score& s);
nlohmann::json solve_result_to_json(const SolveResult& r);
nlohmann::json exploit_result_to_json(const ExploitResult& r, Player holder);

} // namespace voro
