#pragma once

#include "planar_ramsey/detect.hpp"
#include "planar_ramsey/plane_graph.hpp"

namespace ramsey {

// State carried along the outer-edge sequence of the universal-outerplanar
// path extractor: the tracked red path ends at the current edge's
// higher-ranked endpoint, the tracked blue path lives inside the region on
// the old side of the current edge. (redLen, blueLen) strictly increases
// lexicographically step by step, which is what forces termination.
struct UopStepTrace {
    Edge edge;
    int red_len = 0;
    int blue_len = 0;
};

struct UopExtractResult {
    int color = -1;
    std::vector<int> path;
    std::vector<UopStepTrace> trace;  // empty when the one-blue-component shortcut fired
};

namespace detail {

struct UopStructure {
    int max_round = 0;
    std::vector<int> rank;                       // per vertex
    std::vector<std::pair<int, int>> parents;    // creation neighbors, rank >= 2 only
    std::map<Edge, int> child_of;                // edge -> vertex hung on it next round
};

// Recovers the construction structure of a universal outerplanar graph from
// its rank metadata. Throws when the metadata does not describe one.
inline UopStructure uop_structure(const PlaneGraph& pg) {
    const Graph& g = pg.graph;
    if (!pg.has_rank()) throw std::invalid_argument("uop: rank metadata missing");
    UopStructure s;
    s.rank = pg.rank;
    s.parents.assign(g.vertex_count(), {-1, -1});
    std::vector<int> base;
    for (int v = 0; v < g.vertex_count(); ++v) {
        s.max_round = std::max(s.max_round, pg.rank[v]);
        if (pg.rank[v] == 1) base.push_back(v);
        if (pg.rank[v] < 1) throw std::invalid_argument("uop: ranks must be >= 1");
    }
    if (base.size() != 3 || !g.has_edge(base[0], base[1]) || !g.has_edge(base[0], base[2]) ||
        !g.has_edge(base[1], base[2]))
        throw std::invalid_argument("uop: rank-1 vertices do not form a triangle");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (pg.rank[v] == 1) continue;
        std::vector<int> lower;
        for (int w : g.neighbors(v))
            if (pg.rank[w] < pg.rank[v]) lower.push_back(w);
        if (lower.size() != 2 || !g.has_edge(lower[0], lower[1]))
            throw std::invalid_argument("uop: vertex " + std::to_string(v) +
                                        " lacks two adjacent lower-ranked neighbors");
        s.parents[v] = {lower[0], lower[1]};
        Edge pe = make_edge(lower[0], lower[1]);
        if (s.child_of.count(pe))
            throw std::invalid_argument("uop: two vertices hung on one edge");
        s.child_of[pe] = v;
    }
    return s;
}

// Vertices of the region hanging outside edge e (inclusive of e's
// endpoints): e plus everything recursively hung on it.
inline std::vector<int> uop_outside_region(const UopStructure& s, Edge e) {
    std::vector<int> verts = {e.first, e.second};
    std::vector<Edge> stack = {e};
    while (!stack.empty()) {
        Edge cur = stack.back();
        stack.pop_back();
        auto it = s.child_of.find(cur);
        if (it == s.child_of.end()) continue;
        int w = it->second;
        verts.push_back(w);
        stack.push_back(make_edge(cur.first, w));
        stack.push_back(make_edge(cur.second, w));
    }
    return verts;
}

}  // namespace detail

// Extracts a monochromatic path with at least n edges from a 2-colored
// universal outerplanar graph UOP(m) with n*n <= m.
//
// Mirrors the constructive proof: if every round-n outer edge has both ends
// in one blue component, all of UOP(n) is blue-connected, so a blue path
// between two round-n vertices at graph distance >= n suffices. Otherwise a
// sequence of outer edges is grown round by round. With e = uv the current
// edge (v the new end) and w the vertex hung on e next round, either v and w
// are blue-separated — then vw is red and extends the red path — or u and w
// are, in which case uw is red, the red path is rerouted through uw at equal
// length, and the blue path gains the blue w-v connection, which always
// exists inside the region hanging outside vw. Pigeonhole on the
// lexicographically increasing (redLen, blueLen) pairs bounds the sequence
// by n^2 - n + 1 edges.
inline UopExtractResult uop_extract_path(const PlaneGraph& pg, const EdgeColoring& coloring,
                                         int n) {
    const Graph& g = pg.graph;
    if (coloring.k != 2) throw std::invalid_argument("uop_extract_path: k must be 2");
    if (n < 2) throw std::invalid_argument("uop_extract_path: n must be >= 2");
    detail::UopStructure s = detail::uop_structure(pg);
    if (static_cast<long long>(n) * n > s.max_round)
        throw std::invalid_argument("uop_extract_path: need n^2 <= construction rounds");
    ColorView cv(g, coloring);

    DisjointSets blue(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i)
        if (cv.color_by_edge[i] == kBlue) {
            auto [u, v] = g.edge_at(i);
            blue.unite(u, v);
        }

    auto blue_bfs_path = [&](int from, int to, const std::vector<char>* allow) {
        std::vector<int> par(g.vertex_count(), -2);
        std::vector<int> q = {from};
        par[from] = -1;
        for (size_t head = 0; head < q.size(); ++head) {
            int v = q[head];
            if (v == to) break;
            for (int w : cv.adj[kBlue][v])
                if (par[w] == -2 && (!allow || (*allow)[w])) {
                    par[w] = v;
                    q.push_back(w);
                }
        }
        detail::require(par[to] != -2, "uop_extract_path: expected blue connection missing");
        std::vector<int> path;
        for (int v = to; v != -1; v = par[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
    };

    // Round-n outer edges and their blue-component split.
    Edge start{-1, -1};
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edge_at(i);
        if (std::max(s.rank[u], s.rank[v]) != n) continue;
        if (blue.find(u) != blue.find(v)) {
            start = g.edge_at(i);
            break;
        }
    }

    if (start.first < 0) {
        // Everything in UOP(n) sits in one blue component: find two round-n
        // vertices at distance >= n and connect them in blue.
        std::vector<int> rankN;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (s.rank[v] == n) rankN.push_back(v);
        for (int src : rankN) {
            auto dist = bfs_distances(g, src);
            for (int t : rankN)
                if (t != src && dist[t] >= n) {
                    UopExtractResult res;
                    res.color = kBlue;
                    res.path = blue_bfs_path(src, t, nullptr);
                    detail::require(static_cast<int>(res.path.size()) > n,
                                    "uop_extract_path: blue shortcut too short");
                    return res;
                }
        }
        throw std::logic_error("uop_extract_path: no distant rank-n pair found");
    }

    // Orient the start edge: v is the rank-n endpoint.
    int u = start.first, v = start.second;
    if (s.rank[u] > s.rank[v]) std::swap(u, v);
    std::vector<int> red = {u, v};   // ends at v
    std::vector<int> bluePath = {v}; // ends at v, zero edges
    UopExtractResult res;
    res.trace.push_back({make_edge(u, v), 1, 0});

    for (int round = n; round < n * n; ++round) {
        if (static_cast<int>(red.size()) - 1 >= n) {
            res.color = kRed;
            res.path = red;
            return res;
        }
        if (static_cast<int>(bluePath.size()) - 1 >= n) {
            res.color = kBlue;
            res.path = bluePath;
            return res;
        }
        auto it = s.child_of.find(make_edge(u, v));
        detail::require(it != s.child_of.end(), "uop_extract_path: construction too shallow");
        int w = it->second;
        if (blue.find(v) != blue.find(w)) {
            // vw is red: extend the red path.
            red.push_back(w);
            bluePath = {w};
            u = v;
            v = w;
        } else {
            // uw is red: reroute the red path, extend the blue one through
            // the region hanging outside vw.
            detail::require(blue.find(u) != blue.find(w), "uop_extract_path: invariant broken");
            red.pop_back();
            red.push_back(w);
            std::vector<char> allow(g.vertex_count(), 0);
            for (int x : detail::uop_outside_region(s, make_edge(v, w))) allow[x] = 1;
            std::vector<int> seg = blue_bfs_path(v, w, &allow);
            for (size_t i = 1; i < seg.size(); ++i) bluePath.push_back(seg[i]);
            // u stays; the new edge is uw with w on the new round
            v = w;
        }
        res.trace.push_back({make_edge(u, v), static_cast<int>(red.size()) - 1,
                             static_cast<int>(bluePath.size()) - 1});
        if (static_cast<int>(red.size()) - 1 >= n) {
            res.color = kRed;
            res.path = red;
            return res;
        }
        if (static_cast<int>(bluePath.size()) - 1 >= n) {
            res.color = kBlue;
            res.path = bluePath;
            return res;
        }
    }
    throw std::logic_error("uop_extract_path: sequence exhausted without a long path");
}

}  // namespace ramsey
