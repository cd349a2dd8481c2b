#pragma once

#include <fstream>

#include <json.hpp>

#include "planar_ramsey/arrows.hpp"
#include "planar_ramsey/avoid.hpp"
#include "planar_ramsey/plane_graph.hpp"

namespace ramsey {

using nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

// Graph file format:
//   { "n": int, "edges": [[u,v],...], "labels": {"v": "text"},
//     "faces": [[...],...], "outer": int, "rank": {"v": int} }
// labels/faces/outer/rank are optional. Edge keys elsewhere are "u-v" with
// u < v; vertices are 0-based.

inline std::string edge_key(const Edge& e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

inline Edge parse_edge_key(const std::string& key) {
    auto dash = key.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("bad edge key: " + key);
    int u = std::stoi(key.substr(0, dash));
    int v = std::stoi(key.substr(dash + 1));
    if (u >= v) throw std::invalid_argument("edge key not in u<v form: " + key);
    return {u, v};
}

inline json plane_graph_to_json(const PlaneGraph& pg) {
    json j;
    j["n"] = pg.graph.vertex_count();
    json edges = json::array();
    for (const auto& [u, v] : pg.graph.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    if (!pg.graph.labels().empty()) {
        json labels;
        for (const auto& [v, s] : pg.graph.labels()) labels[std::to_string(v)] = s;
        j["labels"] = labels;
    }
    if (pg.has_faces()) {
        j["faces"] = pg.faces;
        j["outer"] = pg.outer_face;
    }
    if (pg.has_rank()) {
        json rank;
        for (int v = 0; v < pg.graph.vertex_count(); ++v) rank[std::to_string(v)] = pg.rank[v];
        j["rank"] = rank;
    }
    return j;
}

inline json graph_to_json(const Graph& g) {
    PlaneGraph pg;
    pg.graph = g;
    return plane_graph_to_json(pg);
}

inline PlaneGraph plane_graph_from_json(const json& j) {
    PlaneGraph pg;
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("bad edge entry");
        edges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
    }
    std::map<int, std::string> labels;
    if (j.contains("labels"))
        for (auto it = j["labels"].begin(); it != j["labels"].end(); ++it)
            labels[std::stoi(it.key())] = it.value().get<std::string>();
    pg.graph = Graph(n, std::move(edges), std::move(labels));
    if (j.contains("faces")) {
        pg.faces = j["faces"].get<std::vector<std::vector<int>>>();
        pg.outer_face = j.at("outer").get<int>();
    }
    if (j.contains("rank")) {
        pg.rank.assign(n, 0);
        for (auto it = j["rank"].begin(); it != j["rank"].end(); ++it)
            pg.rank.at(std::stoi(it.key())) = it.value().get<int>();
    }
    validate_plane_graph(pg);
    return pg;
}

// Coloring format: { "k": int, "colors": { "u-v": int } }.
inline json coloring_to_json(const EdgeColoring& c) {
    json j;
    j["k"] = c.k;
    json colors;
    for (const auto& [e, col] : c.color_of) colors[edge_key(e)] = col;
    j["colors"] = colors;
    return j;
}

inline EdgeColoring coloring_from_json(const json& j) {
    EdgeColoring c;
    c.k = j.at("k").get<int>();
    for (auto it = j.at("colors").begin(); it != j.at("colors").end(); ++it)
        c.color_of[parse_edge_key(it.key())] = it.value().get<int>();
    return c;
}

inline json orientation_to_json(const Graph& g, const Orientation& o) {
    json j;
    j["bound"] = o.bound;
    json dir;
    for (int i = 0; i < g.edge_count(); ++i)
        dir[edge_key(g.edge_at(i))] = {o.dir[i].first, o.dir[i].second};
    j["edges"] = dir;
    return j;
}

inline json avoidance_to_json(const Graph& g, const AvoidanceColoring& ac) {
    json j = coloring_to_json(ac.coloring);
    json prov;
    prov["scheme"] = ac.scheme;
    prov["parts"] = ac.partition.parts;
    prov["orientation"] = orientation_to_json(g, ac.orientation);
    json rules;
    for (int i = 0; i < g.edge_count(); ++i) {
        const char* r = ac.rule[i] == EdgeRule::CrossDirected ? "cross"
                        : ac.rule[i] == EdgeRule::IntraColor4 ? "intra4"
                                                              : "intra";
        rules[edge_key(g.edge_at(i))] = r;
    }
    prov["rule"] = rules;
    if (ac.per_pair_bound > 0) prov["perPairBound"] = ac.per_pair_bound;
    j["provenance"] = prov;
    return j;
}

inline json embedding_to_json(const Embedding& e) {
    json j;
    j["map"] = e.map;
    return j;
}

inline json path_to_json(int color, const std::vector<int>& path) {
    json j;
    j["color"] = color;
    j["path"] = path;
    j["length"] = path.empty() ? 0 : static_cast<int>(path.size()) - 1;
    return j;
}

inline json verdict_to_json(const ::ramsey::Verdict& v, bool with_wall_time) {
    json j;
    j["outcome"] = outcome_name(v.outcome);
    j["method"] = v.method;
    json stats;
    stats["detectorNodes"] = v.stats.detector_nodes;
    stats["solverConflicts"] = v.stats.solver_conflicts;
    stats["embeddingsBlocked"] = v.stats.embeddings_blocked;
    if (v.stats.colorings_checked > 0) stats["coloringsChecked"] = v.stats.colorings_checked;
    if (with_wall_time) stats["wallMs"] = v.stats.wall_ms;
    j["stats"] = stats;
    if (v.outcome == ArrowOutcome::NotArrows) j["certificate"] = coloring_to_json(v.certificate);
    return j;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace ramsey
