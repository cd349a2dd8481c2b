#include <catch2/catch_amalgamated.hpp>

#include "planar_ramsey/avoid.hpp"

using namespace ramsey;

namespace {

PlaneGraph octahedron() {
    PlaneGraph pg;
    pg.graph = Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5}, {2, 4}, {2, 5},
                         {3, 4}, {3, 5}, {4, 5}});
    pg.faces = {{5, 3, 1}, {0, 1, 2}, {0, 2, 4}, {0, 4, 3}, {0, 3, 1},
                {5, 1, 2}, {5, 2, 4}, {5, 4, 3}};
    pg.outer_face = 0;
    return pg;
}

PlaneGraph as_plane(Graph g) {
    PlaneGraph pg;
    pg.graph = std::move(g);
    return pg;
}

}  // namespace

TEST_CASE("bounded out-degree orientation") {
    auto tri = cycle_graph(3);
    auto o = bounded_outdegree_orientation(tri, 1);
    CHECK(validate_orientation(tri, o));

    auto k4 = complete_graph(4);
    auto o2 = bounded_outdegree_orientation(k4, 2);
    CHECK(validate_orientation(k4, o2));

    try {
        bounded_outdegree_orientation(k4, 1);
        FAIL("expected DensityViolation");
    } catch (const DensityViolation& e) {
        // 6 edges > 1 * 4 vertices: the witness set must certify that
        CHECK(e.violating_set.size() == 4);
    }

    // planar graphs always orient with d=3, bipartite planar with d=2
    for (int seed = 1; seed <= 5; ++seed) {
        auto g = random_stacked_triangulation(200, seed).graph;
        CHECK(validate_orientation(g, bounded_outdegree_orientation(g, 3)));
    }
}

TEST_CASE("poh partition: three linear forests") {
    SECTION("K4") {
        auto p = poh_linear_forest_partition(iterated_triangulation(1));
        CHECK(p.parts.size() == 3);
        CHECK(validate_partition(iterated_triangulation(1).graph, p, true));
    }
    SECTION("Tr(4)") {
        auto pg = iterated_triangulation(4);
        auto p = poh_linear_forest_partition(pg);
        CHECK(validate_partition(pg.graph, p, true));
    }
    SECTION("octahedron") {
        auto pg = octahedron();
        validate_plane_graph(pg);
        auto p = poh_linear_forest_partition(pg);
        CHECK(validate_partition(pg.graph, p, true));
    }
    SECTION("random stacked triangulations") {
        for (int seed = 10; seed < 25; ++seed) {
            auto pg = random_stacked_triangulation(150 + seed * 13, seed);
            auto p = poh_linear_forest_partition(pg);
            INFO("seed " << seed);
            CHECK(validate_partition(pg.graph, p, true));
        }
    }
    SECTION("near-triangulations with big outer face") {
        for (int n : {3, 5, 7}) {
            auto pg = triangulated_grid(n);
            auto p = poh_linear_forest_partition(pg);
            CHECK(validate_partition(pg.graph, p, true));
        }
        for (int n : {3, 5}) {
            auto pg = universal_outerplanar(n);
            auto p = poh_linear_forest_partition(pg);
            CHECK(validate_partition(pg.graph, p, true));
        }
    }
    SECTION("forest shortcut") {
        auto p2 = as_plane(path_graph(2));
        auto p = poh_linear_forest_partition(p2);
        CHECK(validate_partition(p2.graph, p, true));
        auto star = as_plane(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
        CHECK(validate_partition(star.graph, poh_linear_forest_partition(star), true));
    }
    SECTION("missing embedding") {
        CHECK_THROWS_AS(poh_linear_forest_partition(as_plane(complete_graph(4))),
                        std::invalid_argument);
    }
}

TEST_CASE("outerplanar partition: two linear forests") {
    SECTION("triangle") {
        auto pg = universal_outerplanar(1);
        auto p = outerplanar_linear_forest_partition(pg);
        CHECK(p.parts.size() == 2);
        CHECK(validate_partition(pg.graph, p, true));
    }
    SECTION("UOP(3..7)") {
        for (int n = 3; n <= 7; ++n) {
            auto pg = universal_outerplanar(n);
            auto p = outerplanar_linear_forest_partition(pg);
            INFO("UOP(" << n << ")");
            CHECK(validate_partition(pg.graph, p, true));
        }
    }
    SECTION("path P10 goes in one part") {
        PlaneGraph pg;
        pg.graph = path_graph(10);
        std::vector<int> walk;
        for (int v = 0; v < 10; ++v) walk.push_back(v);
        for (int v = 8; v >= 1; --v) walk.push_back(v);
        pg.faces = {walk};
        pg.outer_face = 0;
        auto p = outerplanar_linear_forest_partition(pg);
        CHECK(p.parts[0].size() == 10);
        CHECK(p.parts[1].empty());
    }
    SECTION("not outerplanar: interior vertex") {
        CHECK_THROWS_AS(outerplanar_linear_forest_partition(iterated_triangulation(2)),
                        std::invalid_argument);
    }
}

TEST_CASE("avoidance scheme for planar hosts (two colors)") {
    auto pg = iterated_triangulation(4);
    auto ac = coloring_avoid_T1(pg);
    std::string why;
    CHECK(check_avoidance_invariants(pg.graph, ac, &why));
    INFO(why);

    // local consequence of the rules: nobody in the first part reaches
    // color-degree 5 in either class
    ColorView cv(pg.graph, ac.coloring);
    auto partOf = ac.partition.part_of(pg.graph.vertex_count());
    for (int v = 0; v < pg.graph.vertex_count(); ++v)
        if (partOf[v] == 0)
            for (int c = 0; c < 2; ++c) CHECK(cv.color_degree(v, c) <= 4);
}

TEST_CASE("single-edge host gets the alternation start color") {
    auto pg = as_plane(path_graph(2));
    auto ac = coloring_avoid_T1(pg);
    CHECK(ac.coloring.at(0, 1) == kRed);
    std::string why;
    CHECK(check_avoidance_invariants(pg.graph, ac, &why));
}

TEST_CASE("avoidance scheme for outerplanar hosts") {
    for (int n : {1, 4, 5}) {
        auto pg = universal_outerplanar(n);
        auto ac = coloring_avoid_T2(pg);
        std::string why;
        INFO("UOP(" << n << "): " << why);
        CHECK(check_avoidance_invariants(pg.graph, ac, &why));
    }
    CHECK_THROWS_AS(coloring_avoid_T2(iterated_triangulation(3)), std::invalid_argument);
}

TEST_CASE("three- and four-color schemes") {
    auto pg = iterated_triangulation(4);
    auto partCheck = [&](const AvoidanceColoring& ac) {
        std::string why;
        bool ok = check_avoidance_invariants(pg.graph, ac, &why);
        INFO(why);
        CHECK(ok);
    };
    auto c3 = coloring_c3(pg);
    partCheck(c3);
    // vertices with >= 3 incident edges of color i sit in part i
    {
        ColorView cv(pg.graph, c3.coloring);
        auto partOf = c3.partition.part_of(pg.graph.vertex_count());
        for (int v = 0; v < pg.graph.vertex_count(); ++v)
            for (int i = 0; i < 3; ++i)
                if (cv.color_degree(v, i) >= 3) CHECK(partOf[v] == i);
    }

    auto c4 = coloring_c4(pg);
    partCheck(c4);
    // color class 4 is a disjoint union of paths
    {
        std::vector<Edge> support;
        for (const auto& [e, col] : c4.coloring.color_of)
            if (col == 3) support.push_back(e);
        Graph class4(pg.graph.vertex_count(), support);
        std::vector<int> all(pg.graph.vertex_count());
        for (int v = 0; v < pg.graph.vertex_count(); ++v) all[v] = v;
        CHECK(is_linear_forest(class4, all));
        CHECK(class4.max_degree() <= 2);
    }

    // triangle with all vertices in distinct parts has no color-4 edge
    {
        auto tri = universal_outerplanar(1);
        auto ac = coloring_c4(tri);
        auto partOf = ac.partition.part_of(3);
        std::set<int> parts(partOf.begin(), partOf.end());
        if (parts.size() == 3)
            for (const auto& [e, col] : ac.coloring.color_of) CHECK(col != 3);
    }
}

TEST_CASE("alternation colors consecutive path edges differently") {
    for (int seed : {3, 4}) {
        auto pg = random_stacked_triangulation(120, seed);
        auto ac = coloring_avoid_T1(pg);
        auto partOf = ac.partition.part_of(pg.graph.vertex_count());
        for (int v = 0; v < pg.graph.vertex_count(); ++v) {
            std::vector<int> intra;
            for (int w : pg.graph.neighbors(v))
                if (partOf[w] == partOf[v]) intra.push_back(w);
            if (intra.size() == 2)
                CHECK(ac.coloring.at(v, intra[0]) != ac.coloring.at(v, intra[1]));
        }
    }
}
