#include <catch2/catch_amalgamated.hpp>

#include "planar_ramsey/classify.hpp"
#include "planar_ramsey/constructions.hpp"

using namespace ramsey;

namespace {

Graph k23() { return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

Graph subdivide_all(const Graph& g) {
    std::vector<Edge> edges;
    int next = g.vertex_count();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back(make_edge(u, next));
        edges.push_back(make_edge(next, v));
        ++next;
    }
    return Graph(next, edges);
}

}  // namespace

TEST_CASE("outerplanarity recognition") {
    CHECK(outerplanarity(path_graph(6)) == 1);
    CHECK(outerplanarity(cycle_graph(7)) == 1);
    CHECK(outerplanarity(named_tree("T1").to_graph()) == 1);
    CHECK(outerplanarity(complete_graph(4)) == 0);
    CHECK(outerplanarity(k23()) == 0);
    CHECK(outerplanarity(triangulated_grid(2).graph) == 1);  // C4 + one diagonal
    CHECK(outerplanarity(universal_outerplanar(4).graph) == 1);
    CHECK(outerplanarity(fish(4).graph) == 0);          // K4 minor via spine
    CHECK(outerplanarity(triangulated_grid(3).graph) == 0);
    // subdivisions preserve both answers
    CHECK(outerplanarity(subdivide_all(complete_graph(4))) == 0);
    CHECK(outerplanarity(subdivide_all(k23())) == 0);
    CHECK(outerplanarity(subdivide_all(cycle_graph(5))) == 1);
    // beyond the cap: unknown (cycle short-circuit dodged with a chord)
    {
        std::vector<Edge> edges;
        for (int v = 0; v + 1 < 60; ++v) edges.push_back({v, v + 1});
        edges.push_back({0, 59});
        edges.push_back({0, 30});
        edges.push_back({1, 31});
        CHECK(outerplanarity(Graph(60, edges)) == -1);
    }
}

TEST_CASE("forest family recognizers") {
    CHECK(is_caterpillar_forest(path_graph(7)));
    CHECK(is_caterpillar_forest(named_tree("T4").to_graph()));
    CHECK_FALSE(is_caterpillar_forest(named_tree("T3").to_graph()));  // spider core
    CHECK_FALSE(is_caterpillar_forest(cycle_graph(4)));

    CHECK(is_star_forest(Graph(6, {{0, 1}, {0, 2}, {3, 4}, {3, 5}})));
    CHECK_FALSE(is_star_forest(path_graph(4)));
    CHECK(is_star_forest(path_graph(3)));

    CHECK(is_generalized_broom(path_graph(9)));
    CHECK(is_generalized_broom(generalized_broom(5, 3).to_graph()));
    CHECK(is_generalized_broom(Graph(4, {{0, 1}, {0, 2}, {0, 3}})));
    CHECK_FALSE(is_generalized_broom(named_tree("T3").to_graph()));  // 3 long legs
    // double star: two degree-3 vertices
    CHECK_FALSE(is_generalized_broom(named_tree("T4").to_graph()));

    CHECK(is_radius2_tree(named_tree("T3").to_graph()));
    CHECK(is_radius2_tree(named_tree("T4").to_graph()));
    CHECK_FALSE(is_radius2_tree(named_tree("T1").to_graph()));
    CHECK(is_radius2_tree(path_graph(5)));
    CHECK_FALSE(is_radius2_tree(path_graph(6)));
}

TEST_CASE("odd path predicate") {
    CHECK(odd_path_between_deg3(named_tree("T4").to_graph()));      // adjacent centers
    CHECK_FALSE(odd_path_between_deg3(named_tree("T3").to_graph()));  // single center
    // two stars joined by an even path: parity says no
    Graph evenGap(9, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {5, 8}});
    CHECK_FALSE(odd_path_between_deg3(evenGap));
    // odd gap
    Graph oddGap(8, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}, {4, 7}});
    CHECK(odd_path_between_deg3(oddGap));
}

TEST_CASE("classifier verdicts on the paper patterns") {
    SECTION("C3: 2-avoidable, not bipartite") {
        auto rep = classify(cycle_graph(3));
        CHECK(rep.verdict[2] == Verdict3::Avoidable);
        CHECK_FALSE(rep.bipartite);
    }
    SECTION("C4: 2-unavoidable, 3-avoidable") {
        auto rep = classify(cycle_graph(4));
        CHECK(rep.verdict[2] == Verdict3::Unavoidable);
        CHECK(rep.verdict[3] == Verdict3::Avoidable);  // not a forest
    }
    SECTION("K23: 2-avoidable because not outerplanar") {
        auto rep = classify(k23());
        CHECK(rep.outerplanar == 0);
        CHECK(rep.bipartite);
        CHECK(rep.verdict[2] == Verdict3::Avoidable);
    }
    SECTION("T4: 2-unavoidable radius-2 tree, 4-avoidable by odd path") {
        auto rep = classify(named_tree("T4").to_graph());
        CHECK(rep.verdict[2] == Verdict3::Unavoidable);
        CHECK(rep.pred_odd_path);
        CHECK(rep.verdict[4] == Verdict3::Avoidable);
        CHECK(rep.verdict[5] == Verdict3::Avoidable);  // propagated
    }
    SECTION("paths are 2-unavoidable") {
        auto rep = classify(path_graph(9));
        CHECK(rep.verdict[2] == Verdict3::Unavoidable);
    }
    SECTION("T1 stays unknown at k=2") {
        auto rep = classify(named_tree("T1").to_graph());
        CHECK(rep.verdict[2] == Verdict3::Unknown);
        CHECK(rep.pred_deg4_core);  // degree-5 internals induce a big-degree subgraph
        CHECK(rep.verdict[3] == Verdict3::Avoidable);
    }
}

TEST_CASE("classifier consistency over a pattern corpus") {
    std::vector<Graph> corpus = {
        path_graph(2),  path_graph(5),  path_graph(10), cycle_graph(3), cycle_graph(4),
        cycle_graph(6), complete_graph(4), complete_graph(5), k23(),
        named_tree("T1").to_graph(), named_tree("T2").to_graph(),
        named_tree("T3").to_graph(), named_tree("T4").to_graph(),
        generalized_broom(7, 3).to_graph(), perfect_kary_tree(3, 2).to_graph(),
        Graph(6, {{0, 1}, {0, 2}, {3, 4}, {3, 5}}),  // star forest
        triangulated_grid(3).graph, fish(5).graph};
    for (const auto& h : corpus) {
        auto rep = classify(h);  // classify() itself asserts verdict consistency
        // monotone boolean facts
        if (rep.star_forest) CHECK(rep.caterpillar_forest);
        if (rep.caterpillar_forest) CHECK(rep.forest);
        // avoidability propagates upward
        for (int k = 2; k < 5; ++k)
            if (rep.verdict[k] == Verdict3::Avoidable)
                CHECK(rep.verdict[k + 1] == Verdict3::Avoidable);
    }
}

TEST_CASE("classifier size cap") {
    // 10k-edge cap
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < 10'050; ++v) edges.push_back({v, v + 1});
    CHECK_THROWS_AS(classify(Graph(10'050, edges)), SizeCapExceeded);
}
