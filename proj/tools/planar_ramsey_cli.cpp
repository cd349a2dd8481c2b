// Command-line front end: generators, avoidance colorings, detectors,
// extractors, the arrow engine, and the pattern classifier, all speaking the
// JSON formats of the library. Exit codes are part of the contract:
//   arrow:   0 ARROWS, 1 NOT_ARROWS, 2 UNDECIDED
//   verify:  0 certificate valid, 1 invalid, 3 inconclusive (budget)
//   find:    0 found, 1 not found, 2 budget exceeded
//   any usage/parse/IO error: 10

#include <CLI11.hpp>

#include <iostream>

#include "planar_ramsey/classify.hpp"
#include "planar_ramsey/crossing.hpp"
#include "planar_ramsey/json_io.hpp"
#include "planar_ramsey/uop_path.hpp"

using namespace ramsey;

namespace {

constexpr int kErrExit = 10;

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::uint64_t budget = 50'000'000;
    int jobs = 1;
    long long cap_edges = kDefaultEdgeCap;
    std::string output;
    bool timings = false;
};

json make_manifest(const GlobalOpts& g, const std::string& command,
                   const std::vector<std::string>& arguments,
                   const std::vector<std::string>& inputs) {
    json m;
    m["command"] = command;
    m["arguments"] = arguments;
    m["seed"] = g.seed;
    m["budget"] = g.budget;
    m["inputs"] = inputs;
    m["output"] = g.output.empty() ? "-" : g.output;
    m["toolVersion"] = kToolVersion;
    return m;
}

void emit(const GlobalOpts& g, json j) {
    if (g.output.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(g.output, j);
}

PlaneGraph load_graph(const std::string& path) { return plane_graph_from_json(load_json_file(path)); }

int cmd_gen(const GlobalOpts& g, const std::string& family, const std::vector<std::string>& params) {
    auto num = [&](size_t i) -> int {
        if (i >= params.size()) throw std::invalid_argument("gen " + family + ": missing parameter");
        return std::stoi(params[i]);
    };
    PlaneGraph pg;
    if (family == "tr") pg = iterated_triangulation(num(0), g.cap_edges);
    else if (family == "uop") pg = universal_outerplanar(num(0), g.cap_edges);
    else if (family == "grid") pg = triangulated_grid(num(0), g.cap_edges);
    else if (family == "fish") pg = fish(num(0), g.cap_edges);
    else if (family == "c4witness") pg = c4_witness();
    else if (family == "random") pg = random_stacked_triangulation(num(0), g.seed, g.cap_edges);
    else if (family == "tree") {
        if (params.empty()) throw std::invalid_argument("gen tree: expected id T1..T4");
        pg.graph = named_tree(params[0]).to_graph({{named_tree(params[0]).root, "root"}});
    } else if (family == "broom") {
        auto t = generalized_broom(num(0), num(1));
        pg.graph = t.to_graph({{t.root, "root"}});
    } else if (family == "kary") {
        auto t = perfect_kary_tree(num(0), num(1), g.cap_edges);
        pg.graph = t.to_graph({{t.root, "root"}});
    } else if (family == "complete") pg.graph = complete_graph(num(0));
    else if (family == "path") pg.graph = path_graph(num(0));
    else if (family == "cycle") pg.graph = cycle_graph(num(0));
    else throw std::invalid_argument("gen: unknown family " + family);

    validate_plane_graph(pg);
    json out = plane_graph_to_json(pg);
    std::vector<std::string> args = {family};
    args.insert(args.end(), params.begin(), params.end());
    out["manifest"] = make_manifest(g, "gen", args, {});
    emit(g, out);
    return 0;
}

int cmd_arrow(const GlobalOpts& g, const std::string& hostFile, const std::string& patternFile,
              int k) {
    Graph host = load_graph(hostFile).graph;
    Graph pattern = load_graph(patternFile).graph;
    Verdict v = decide_arrows(host, pattern, k, g.budget, g.jobs);
    json out = verdict_to_json(v, g.timings);
    out["manifest"] = make_manifest(g, "arrow", {hostFile, patternFile, std::to_string(k)},
                                    {hostFile, patternFile});
    emit(g, out);
    std::cerr << "arrow: " << outcome_name(v.outcome) << " (conflicts=" << v.stats.solver_conflicts
              << ", detector nodes=" << v.stats.detector_nodes << ", " << v.stats.wall_ms
              << " ms)\n";
    switch (v.outcome) {
        case ArrowOutcome::Arrows: return 0;
        case ArrowOutcome::NotArrows: return 1;
        default: return 2;
    }
}

int cmd_color(const GlobalOpts& g, const std::string& scheme, const std::string& graphFile) {
    PlaneGraph pg = load_graph(graphFile);
    AvoidanceColoring ac;
    if (scheme == "avoidT1") ac = coloring_avoid_T1(pg);
    else if (scheme == "avoidT2") ac = coloring_avoid_T2(pg);
    else if (scheme == "c3") ac = coloring_c3(pg);
    else if (scheme == "c4") ac = coloring_c4(pg);
    else throw std::invalid_argument("color: unknown scheme " + scheme);
    std::string why;
    if (!check_avoidance_invariants(pg.graph, ac, &why))
        throw std::logic_error("avoidance invariants failed: " + why);
    json out = avoidance_to_json(pg.graph, ac);
    out["manifest"] = make_manifest(g, "color", {scheme, graphFile}, {graphFile});
    emit(g, out);
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& graphFile, const std::string& patternFile,
               int k, const std::string& coloringFile) {
    Graph host = load_graph(graphFile).graph;
    Graph pattern = load_graph(patternFile).graph;
    EdgeColoring c = coloring_from_json(load_json_file(coloringFile));
    Embedding counterexample;
    int badColor = -1;
    json out;
    int code;
    try {
        bool ok = verify_certificate(host, pattern, k, c, g.budget, &counterexample, &badColor);
        out["valid"] = ok;
        if (!ok && !counterexample.map.empty()) {
            out["embedding"] = embedding_to_json(counterexample);
            out["color"] = badColor;
        }
        code = ok ? 0 : 1;
    } catch (const VerificationInconclusive& e) {
        out["valid"] = nullptr;
        out["error"] = e.what();
        code = 3;
    }
    out["manifest"] = make_manifest(
        g, "verify", {graphFile, patternFile, std::to_string(k), coloringFile},
        {graphFile, patternFile, coloringFile});
    emit(g, out);
    return code;
}

int cmd_extract(const GlobalOpts& g, const std::string& mode, const std::string& graphFile,
                const std::string& coloringFile, const std::vector<int>& corners, int target) {
    PlaneGraph pg = load_graph(graphFile);
    EdgeColoring c = coloring_from_json(load_json_file(coloringFile));
    json out;
    if (mode == "crossing") {
        int a, b, cc, d;
        if (corners.size() == 4) {
            a = corners[0];
            b = corners[1];
            cc = corners[2];
            d = corners[3];
        } else {
            // grids carry "row,col" labels; default to their corners
            auto byLabel = [&](const std::string& s) {
                auto v = pg.graph.vertices_with_label(s);
                if (v.size() != 1)
                    throw std::invalid_argument("extract crossing: pass --corners a b c d");
                return v[0];
            };
            int n = static_cast<int>(std::lround(std::sqrt(double(pg.graph.vertex_count()))));
            a = byLabel("1,1");
            b = byLabel("1," + std::to_string(n));
            cc = byLabel(std::to_string(n) + "," + std::to_string(n));
            d = byLabel(std::to_string(n) + ",1");
        }
        CrossingResult r = crossing_path(pg, a, b, cc, d, c);
        if (!verify_crossing_path(pg, a, b, cc, d, c, r))
            throw std::logic_error("extract crossing: output failed verification");
        out = path_to_json(r.color, r.path);
    } else if (mode == "uop") {
        if (target < 2) throw std::invalid_argument("extract uop: pass --target n (n >= 2)");
        UopExtractResult r = uop_extract_path(pg, c, target);
        if (!verify_mono_path(pg.graph, c, r.color, r.path, target))
            throw std::logic_error("extract uop: output failed verification");
        out = path_to_json(r.color, r.path);
    } else {
        throw std::invalid_argument("extract: unknown mode " + mode);
    }
    out["manifest"] =
        make_manifest(g, "extract", {mode, graphFile, coloringFile}, {graphFile, coloringFile});
    emit(g, out);
    return 0;
}

int cmd_find(const GlobalOpts& g, const std::string& graphFile, const std::string& coloringFile,
             const std::string& patternFile, int color) {
    Graph host = load_graph(graphFile).graph;
    EdgeColoring c = coloring_from_json(load_json_file(coloringFile));
    Graph pattern = load_graph(patternFile).graph;
    DetectResult r = find_mono_copy(host, c, color, pattern, g.budget);
    json out;
    out["status"] = r.status == DetectStatus::Found        ? "found"
                    : r.status == DetectStatus::NotFound   ? "not-found"
                                                           : "budget-exceeded";
    out["nodes"] = r.nodes;
    if (r.found()) out["embedding"] = embedding_to_json(r.embedding);
    out["manifest"] = make_manifest(g, "find",
                                    {graphFile, coloringFile, patternFile, std::to_string(color)},
                                    {graphFile, coloringFile, patternFile});
    emit(g, out);
    return r.status == DetectStatus::Found ? 0 : r.status == DetectStatus::NotFound ? 1 : 2;
}

const char* verdict_text(Verdict3 v) {
    switch (v) {
        case Verdict3::Avoidable: return "avoidable";
        case Verdict3::Unavoidable: return "unavoidable";
        default: return "unknown";
    }
}

int cmd_classify(const GlobalOpts& g, const std::string& patternFile) {
    Graph h = load_graph(patternFile).graph;
    ClassificationReport rep = classify(h);
    json out;
    out["bipartite"] = rep.bipartite;
    out["outerplanar"] = rep.outerplanar == 1 ? json(true)
                         : rep.outerplanar == 0 ? json(false)
                                                : json(nullptr);
    out["forest"] = rep.forest;
    out["caterpillarForest"] = rep.caterpillar_forest;
    out["starForest"] = rep.star_forest;
    out["deg4CorePredicate"] = rep.pred_deg4_core;
    out["oddPathPredicate"] = rep.pred_odd_path;
    json classes;
    classes["path"] = rep.is_path;
    classes["c4"] = rep.is_c4;
    classes["radius2Tree"] = rep.radius2_tree;
    classes["generalizedBroom"] = rep.gen_broom;
    out["hostClasses"] = classes;
    json verdicts;
    for (int k = 2; k <= 5; ++k) {
        json v;
        v["verdict"] = verdict_text(rep.verdict[k]);
        if (!rep.reason[k].empty()) v["reason"] = rep.reason[k];
        verdicts[std::to_string(k)] = v;
    }
    out["verdicts"] = verdicts;
    out["manifest"] = make_manifest(g, "classify", {patternFile}, {patternFile});
    emit(g, out);
    for (int k = 2; k <= 5; ++k)
        std::cerr << "k=" << k << ": " << verdict_text(rep.verdict[k])
                  << (rep.reason[k].empty() ? "" : " (" + rep.reason[k] + ")") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar-ramsey: generators, avoidance colorings, and arrowing decisions"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for randomized constructions");
    app.add_option("--budget", g.budget, "search budget (solver conflicts + detector nodes)");
    app.add_option("--jobs", g.jobs, "portfolio width for the arrow engine");
    app.add_option("--cap-edges", g.cap_edges, "size cap for generators");
    app.add_option("--output,-o", g.output, "output file (stdout when omitted)");
    app.add_flag("--timings", g.timings, "include wall time in output files");

    auto* gen = app.add_subcommand("gen", "generate a graph family member");
    std::string family;
    std::vector<std::string> params;
    gen->add_option("family", family,
                    "tr|uop|grid|fish|c4witness|tree|broom|kary|random|complete|path|cycle")
        ->required();
    gen->add_option("params", params, "family parameters");

    auto* arrow = app.add_subcommand("arrow", "decide whether host k-arrows pattern");
    std::string hostFile, patternFile, coloringFile, graphFile;
    int k = 2, color = 0, target = 0;
    std::vector<int> corners;
    arrow->add_option("host", hostFile)->required();
    arrow->add_option("pattern", patternFile)->required();
    arrow->add_option("-k", k, "number of colors (default 2)");

    auto* colorCmd = app.add_subcommand("color", "produce an avoidance coloring");
    std::string scheme;
    colorCmd->add_option("scheme", scheme, "avoidT1|avoidT2|c3|c4")->required();
    colorCmd->add_option("graph", graphFile)->required();

    auto* verify = app.add_subcommand("verify", "check an avoidance certificate");
    verify->add_option("graph", hostFile)->required();
    verify->add_option("pattern", patternFile)->required();
    verify->add_option("-k", k, "number of colors (default 2)");
    verify->add_option("coloring", coloringFile)->required();

    auto* extract = app.add_subcommand("extract", "run a constructive path extractor");
    std::string mode;
    extract->add_option("mode", mode, "crossing|uop")->required();
    extract->add_option("graph", graphFile)->required();
    extract->add_option("coloring", coloringFile)->required();
    extract->add_option("--corners", corners, "four outer-cycle corners (crossing mode)")
        ->expected(4);
    extract->add_option("--target", target, "required path length in edges (uop mode)");

    auto* find = app.add_subcommand("find", "search one color class for a pattern copy");
    find->add_option("graph", graphFile)->required();
    find->add_option("coloring", coloringFile)->required();
    find->add_option("pattern", patternFile)->required();
    find->add_option("--color", color, "color class index")->required();

    auto* classifyCmd = app.add_subcommand("classify", "recognition predicates and verdicts");
    classifyCmd->add_option("pattern", patternFile)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(g, family, params);
        if (arrow->parsed()) return cmd_arrow(g, hostFile, patternFile, k);
        if (colorCmd->parsed()) return cmd_color(g, scheme, graphFile);
        if (verify->parsed()) return cmd_verify(g, hostFile, patternFile, k, coloringFile);
        if (extract->parsed()) return cmd_extract(g, mode, graphFile, coloringFile, corners, target);
        if (find->parsed()) return cmd_find(g, graphFile, coloringFile, patternFile, color);
        if (classifyCmd->parsed()) return cmd_classify(g, patternFile);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kErrExit;
    }
    return kErrExit;
}
