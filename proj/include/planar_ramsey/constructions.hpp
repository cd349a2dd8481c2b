#pragma once

#include <cstdint>
#include <deque>

#include "planar_ramsey/plane_graph.hpp"

namespace ramsey {

constexpr long long kDefaultEdgeCap = 2'000'000;

namespace detail {

inline void check_edge_cap(long long edges, long long cap, const char* who) {
    if (edges > cap)
        throw SizeCapExceeded(std::string(who) + ": would create " + std::to_string(edges) +
                              " edges, cap is " + std::to_string(cap));
}

// Deterministic 64-bit generator (splitmix64); used instead of std
// distributions so outputs are identical across standard libraries.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0, m) by rejection.
    std::uint64_t bounded(std::uint64_t m) {
        detail::require(m > 0, "Rng::bounded: empty range");
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % m);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % m;
    }
};

}  // namespace detail

// Rooted tree as a parent array; parent[root] = -1. Radius is the
// eccentricity of the root.
struct TreeSpec {
    std::vector<int> parent;
    int root = 0;
    int radius = 0;

    int vertex_count() const { return static_cast<int>(parent.size()); }

    Graph to_graph(std::map<int, std::string> labels = {}) const {
        std::vector<Edge> edges;
        for (int v = 0; v < vertex_count(); ++v)
            if (parent[v] >= 0) edges.push_back(make_edge(v, parent[v]));
        return Graph(vertex_count(), std::move(edges), std::move(labels));
    }

    std::vector<int> depths() const {
        std::vector<int> d(vertex_count(), -1);
        d[root] = 0;
        // parents always precede children in the generators below, but be safe
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < vertex_count(); ++v)
                if (d[v] < 0 && parent[v] >= 0 && d[parent[v]] >= 0) {
                    d[v] = d[parent[v]] + 1;
                    changed = true;
                }
        }
        detail::require(std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; }),
                        "TreeSpec: disconnected parent array");
        return d;
    }
};

struct FishSpec {
    int spine_length = 0;
    int x = 0, y = 1;              // anchor vertices
    std::vector<int> spine;        // s_1..s_k
};

// Iterated triangulation: start from a triangle and, for n rounds, insert a
// vertex into every inner face and join it to the face's three corners.
// Vertex rank records the insertion round (initial triangle has rank 0).
// Faces of each round are processed in creation order, which fixes the
// vertex numbering.
inline PlaneGraph iterated_triangulation(int n, long long edge_cap = kDefaultEdgeCap) {
    if (n < 0) throw std::invalid_argument("iterated_triangulation: n must be >= 0");
    // v = 3 + (3^n - 1)/2, e = 3v - 6
    long long pow3 = 1;
    for (int i = 0; i < n; ++i) {
        pow3 *= 3;
        detail::check_edge_cap(3 * (3 + (pow3 - 1) / 2) - 6, edge_cap, "iterated_triangulation");
    }
    detail::check_edge_cap(3 * (3 + (pow3 - 1) / 2) - 6, edge_cap, "iterated_triangulation");

    std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<int> rank = {0, 0, 0};
    std::vector<std::vector<int>> inner = {{0, 1, 2}};
    int next = 3;
    for (int round = 1; round <= n; ++round) {
        std::vector<std::vector<int>> created;
        created.reserve(inner.size() * 3);
        for (const auto& f : inner) {
            int v = next++;
            rank.push_back(round);
            int a = f[0], b = f[1], c = f[2];
            edges.push_back(make_edge(v, a));
            edges.push_back(make_edge(v, b));
            edges.push_back(make_edge(v, c));
            created.push_back({a, b, v});
            created.push_back({b, c, v});
            created.push_back({c, a, v});
        }
        inner = std::move(created);
    }
    PlaneGraph pg;
    pg.graph = Graph(next, std::move(edges));
    pg.faces.push_back({0, 1, 2});  // outer
    for (auto& f : inner) pg.faces.push_back(std::move(f));
    pg.outer_face = 0;
    pg.rank = std::move(rank);
    return pg;
}

// Universal outerplanar graph: a triangle grown n-1 rounds by hanging one
// new vertex on every current outer edge. Rank r means the vertex first
// appears in round r (the initial triangle has rank 1, matching the
// 1-indexed family).
inline PlaneGraph universal_outerplanar(int n, long long edge_cap = kDefaultEdgeCap) {
    if (n < 1) throw std::invalid_argument("universal_outerplanar: n must be >= 1");
    // v = 3 * 2^(n-1), e = 2v - 3; refuse absurd n before computing sizes
    if (n > 40) throw SizeCapExceeded("universal_outerplanar: n too large");
    long long v_final = 3LL << (n - 1);
    detail::check_edge_cap(2 * v_final - 3, edge_cap, "universal_outerplanar");

    std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<int> rank = {1, 1, 1};
    std::vector<std::vector<int>> inner = {{0, 1, 2}};
    std::vector<int> outer = {0, 1, 2};
    int next = 3;
    for (int round = 2; round <= n; ++round) {
        std::vector<int> grown;
        grown.reserve(outer.size() * 2);
        for (size_t i = 0; i < outer.size(); ++i) {
            int x = outer[i], y = outer[(i + 1) % outer.size()];
            int v = next++;
            rank.push_back(round);
            edges.push_back(make_edge(v, x));
            edges.push_back(make_edge(v, y));
            inner.push_back({x, y, v});
            grown.push_back(x);
            grown.push_back(v);
        }
        outer = std::move(grown);
    }
    PlaneGraph pg;
    pg.graph = Graph(next, std::move(edges));
    pg.faces.push_back(outer);
    for (auto& f : inner) pg.faces.push_back(std::move(f));
    pg.outer_face = 0;
    pg.rank = std::move(rank);
    return pg;
}

// Outer edges of round r in a universal outerplanar graph are exactly the
// edges whose higher-ranked endpoint has rank r (both endpoints for r = 1).
inline int uop_edge_round(const PlaneGraph& pg, int edge_idx) {
    const auto& [u, v] = pg.graph.edge_at(edge_idx);
    return std::max(pg.rank.at(u), pg.rank.at(v));
}

// Triangulated grid on [n] x [n]: row/column edges plus the down-right
// diagonal of every cell. Labels carry 1-based "row,col" coordinates.
inline PlaneGraph triangulated_grid(int n, long long edge_cap = kDefaultEdgeCap) {
    if (n < 2) throw std::invalid_argument("triangulated_grid: n must be >= 2");
    long long e = 2LL * n * (n - 1) + static_cast<long long>(n - 1) * (n - 1);
    detail::check_edge_cap(e, edge_cap, "triangulated_grid");
    auto id = [n](int r, int c) { return (r - 1) * n + (c - 1); };  // 1-based coords
    std::vector<Edge> edges;
    std::map<int, std::string> labels;
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            labels[id(r, c)] = std::to_string(r) + "," + std::to_string(c);
            if (c < n) edges.push_back(make_edge(id(r, c), id(r, c + 1)));
            if (r < n) edges.push_back(make_edge(id(r, c), id(r + 1, c)));
            if (r < n && c < n) edges.push_back(make_edge(id(r, c), id(r + 1, c + 1)));
        }
    PlaneGraph pg;
    pg.graph = Graph(n * n, std::move(edges), std::move(labels));
    std::vector<int> outer;
    for (int c = 1; c <= n; ++c) outer.push_back(id(1, c));
    for (int r = 2; r <= n; ++r) outer.push_back(id(r, n));
    for (int c = n - 1; c >= 1; --c) outer.push_back(id(n, c));
    for (int r = n - 1; r >= 2; --r) outer.push_back(id(r, 1));
    pg.faces.push_back(std::move(outer));
    for (int r = 1; r < n; ++r)
        for (int c = 1; c < n; ++c) {
            pg.faces.push_back({id(r, c), id(r, c + 1), id(r + 1, c + 1)});
            pg.faces.push_back({id(r, c), id(r + 1, c + 1), id(r + 1, c)});
        }
    pg.outer_face = 0;
    return pg;
}

// Side subsets of the grid, by the 1-based coordinate convention:
// top = {1} x [n], bottom = {n} x [n], left = [n] x {1}, right = [n] x {n}.
inline std::vector<int> grid_side(int n, const std::string& side) {
    auto id = [n](int r, int c) { return (r - 1) * n + (c - 1); };
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        if (side == "top") out.push_back(id(1, i));
        else if (side == "bottom") out.push_back(id(n, i));
        else if (side == "left") out.push_back(id(i, 1));
        else if (side == "right") out.push_back(id(i, n));
        else throw std::invalid_argument("grid_side: unknown side " + side);
    }
    return out;
}

// Fish on anchors x,y: edge xy, a spine path s_1..s_k, and both anchors
// joined to every spine vertex. k+2 vertices, 3k edges.
inline PlaneGraph fish(int k, long long edge_cap = kDefaultEdgeCap) {
    if (k < 1) throw std::invalid_argument("fish: spine length must be >= 1");
    detail::check_edge_cap(3LL * k, edge_cap, "fish");
    std::vector<Edge> edges;
    std::map<int, std::string> labels = {{0, "x"}, {1, "y"}};
    auto s = [](int i) { return 1 + i; };  // s_i, 1-based i
    edges.push_back({0, 1});
    for (int i = 1; i <= k; ++i) {
        labels[s(i)] = "s" + std::to_string(i);
        edges.push_back(make_edge(0, s(i)));
        edges.push_back(make_edge(1, s(i)));
        if (i < k) edges.push_back(make_edge(s(i), s(i + 1)));
    }
    PlaneGraph pg;
    pg.graph = Graph(k + 2, std::move(edges), std::move(labels));
    pg.faces.push_back({0, s(k), 1});  // outer: x, s_k, y
    pg.faces.push_back({0, 1, s(1)});
    for (int i = 1; i < k; ++i) {
        pg.faces.push_back({0, s(i), s(i + 1)});
        pg.faces.push_back({1, s(i), s(i + 1)});
    }
    pg.outer_face = 0;
    return pg;
}

inline FishSpec fish_spec(int k) {
    FishSpec f;
    f.spine_length = k;
    f.x = 0;
    f.y = 1;
    for (int i = 1; i <= k; ++i) f.spine.push_back(1 + i);
    return f;
}

// Host witnessing that C4 cannot be avoided: a fish with 15 spine vertices
// plus one degree-3 vertex inside every inner face bounded by two
// consecutive spine vertices — 14 such faces on the x side and 14 on the y
// side. 45 vertices, 129 edges (again a triangulation).
inline PlaneGraph c4_witness() {
    PlaneGraph f = fish(15);
    int k = 15;
    auto s = [](int i) { return 1 + i; };
    std::vector<Edge> edges = f.graph.edges();
    std::map<int, std::string> labels = f.graph.labels();
    std::vector<std::vector<int>> faces = f.faces;
    int next = f.graph.vertex_count();
    for (int i = 1; i <= k - 1; ++i) {
        for (int anchor : {0, 1}) {
            int z = next++;
            labels[z] = (anchor == 0 ? "zx" : "zy") + std::to_string(i);
            edges.push_back(make_edge(z, anchor));
            edges.push_back(make_edge(z, s(i)));
            edges.push_back(make_edge(z, s(i + 1)));
            std::vector<int> host = {anchor, s(i), s(i + 1)};
            std::sort(host.begin(), host.end());
            auto it = std::find_if(faces.begin(), faces.end(), [&](const std::vector<int>& fc) {
                auto sorted = fc;
                std::sort(sorted.begin(), sorted.end());
                return fc.size() == 3 && sorted == host;
            });
            detail::require(it != faces.end() &&
                                static_cast<int>(it - faces.begin()) != f.outer_face,
                            "c4_witness: host face not found");
            std::vector<int> fc = *it;
            faces.erase(it);
            faces.push_back({fc[0], fc[1], z});
            faces.push_back({fc[1], fc[2], z});
            faces.push_back({fc[2], fc[0], z});
        }
    }
    PlaneGraph pg;
    pg.graph = Graph(next, std::move(edges), std::move(labels));
    pg.faces = std::move(faces);
    pg.outer_face = 0;
    return pg;
}

// Union of a path on p vertices and a star with q edges sharing only the
// star's center, which sits at 1-based path position ceil(p/2).
inline TreeSpec generalized_broom(int p, int q) {
    if (p < 1 || q < 0) throw std::invalid_argument("generalized_broom: need p >= 1, q >= 0");
    int center = (p + 1) / 2 - 1;
    TreeSpec t;
    t.parent.assign(p + q, -1);
    t.root = center;
    for (int i = center - 1; i >= 0; --i) t.parent[i] = i + 1;
    for (int i = center + 1; i < p; ++i) t.parent[i] = i - 1;
    for (int i = 0; i < q; ++i) t.parent[p + i] = center;
    t.radius = std::max({center, p - 1 - center, q > 0 ? 1 : 0});
    return t;
}

// Perfect k-ary tree of the given radius: every non-leaf has exactly k
// children, all leaves at depth r.
inline TreeSpec perfect_kary_tree(int k, int r, long long edge_cap = kDefaultEdgeCap) {
    if (k < 2 || r < 0) throw std::invalid_argument("perfect_kary_tree: need k >= 2, r >= 0");
    long long total = 1, layer = 1;
    for (int d = 0; d < r; ++d) {
        layer *= k;
        total += layer;
        detail::check_edge_cap(total - 1, edge_cap, "perfect_kary_tree");
    }
    TreeSpec t;
    t.parent.assign(static_cast<size_t>(total), -1);
    t.root = 0;
    t.radius = r;
    int next = 1;
    std::vector<int> frontier = {0};
    for (int d = 0; d < r; ++d) {
        std::vector<int> nf;
        for (int v : frontier)
            for (int c = 0; c < k; ++c) {
                t.parent[next] = v;
                nf.push_back(next++);
            }
        frontier = std::move(nf);
    }
    return t;
}

// The four named avoidance trees:
//   T1: radius 3, root with 5 children, every depth-1/2 vertex with 4 more
//       children (degree 5); 106 vertices.
//   T2: radius 2, root with 4 children, each with 4 children; 21 vertices.
//   T3: radius 2, root with 3 children, each with 2 children; 10 vertices.
//   T4: symmetric double star, two adjacent degree-3 vertices plus 4 leaves.
inline TreeSpec named_tree(const std::string& id) {
    auto layered = [](std::vector<int> children_per_depth) {
        TreeSpec t;
        t.parent.assign(1, -1);
        t.root = 0;
        t.radius = static_cast<int>(children_per_depth.size());
        std::vector<int> frontier = {0};
        int next = 1;
        for (int c : children_per_depth) {
            std::vector<int> nf;
            for (int v : frontier)
                for (int i = 0; i < c; ++i) {
                    t.parent.push_back(v);
                    nf.push_back(next++);
                }
            frontier = std::move(nf);
        }
        return t;
    };
    if (id == "T1") return layered({5, 4, 4});
    if (id == "T2") return layered({4, 4});
    if (id == "T3") return layered({3, 2});
    if (id == "T4") {
        TreeSpec t;
        t.parent = {-1, 0, 0, 0, 1, 1};
        t.root = 0;
        t.radius = 2;
        return t;
    }
    throw std::invalid_argument("named_tree: unknown id " + id);
}

// Stacked triangulation grown by inserting each new vertex into a uniformly
// chosen inner face (seeded, deterministic). Mirrors the iterated
// triangulation insertion rule at random faces; always passes
// check_triangulation.
inline PlaneGraph random_stacked_triangulation(int n_vertices, std::uint64_t seed,
                                               long long edge_cap = kDefaultEdgeCap) {
    if (n_vertices < 3)
        throw std::invalid_argument("random_stacked_triangulation: need >= 3 vertices");
    detail::check_edge_cap(3LL * n_vertices - 6, edge_cap, "random_stacked_triangulation");
    detail::Rng rng(seed);
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::vector<int>> inner = {{0, 1, 2}};
    std::vector<int> rank = {0, 0, 0};
    for (int v = 3; v < n_vertices; ++v) {
        size_t pick = static_cast<size_t>(rng.bounded(inner.size()));
        std::vector<int> f = inner[pick];
        inner[pick] = inner.back();
        inner.pop_back();
        edges.push_back(make_edge(v, f[0]));
        edges.push_back(make_edge(v, f[1]));
        edges.push_back(make_edge(v, f[2]));
        inner.push_back({f[0], f[1], v});
        inner.push_back({f[1], f[2], v});
        inner.push_back({f[2], f[0], v});
        rank.push_back(v - 2);
    }
    PlaneGraph pg;
    pg.graph = Graph(n_vertices, std::move(edges));
    pg.faces.push_back({0, 1, 2});
    for (auto& f : inner) pg.faces.push_back(std::move(f));
    pg.outer_face = 0;
    pg.rank = std::move(rank);
    return pg;
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

}  // namespace ramsey
