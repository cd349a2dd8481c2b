#pragma once

#include "planar_ramsey/detect.hpp"
#include "planar_ramsey/plane_graph.hpp"

namespace ramsey {

struct CrossingResult {
    int color = -1;            // kBlue for an arc(a,b)->arc(c,d) path, kRed otherwise
    std::vector<int> path;
};

namespace detail {

// Vertices of the outer-cycle arc from `from` to `to`, inclusive, walking in
// the direction of `cycle`.
inline std::vector<int> cycle_arc(const std::vector<int>& cycle, int from, int to) {
    auto pos = [&](int v) {
        for (size_t i = 0; i < cycle.size(); ++i)
            if (cycle[i] == v) return static_cast<int>(i);
        throw std::invalid_argument("corner vertex not on outer cycle");
    };
    std::vector<int> arc;
    int i = pos(from), j = pos(to), n = static_cast<int>(cycle.size());
    for (int k = i;; k = (k + 1) % n) {
        arc.push_back(cycle[k]);
        if (k == j) break;
    }
    return arc;
}

inline bool in_cyclic_order(const std::vector<int>& cycle, std::array<int, 4> corners) {
    std::vector<int> pos;
    for (int c : corners) {
        auto it = std::find(cycle.begin(), cycle.end(), c);
        if (it == cycle.end()) return false;
        pos.push_back(static_cast<int>(it - cycle.begin()));
    }
    // strictly increasing after rotating so pos[0] is first
    int n = static_cast<int>(cycle.size());
    for (int i = 1; i < 4; ++i) pos[i] = (pos[i] - pos[0] + n) % n;
    pos[0] = 0;
    return pos[1] > 0 && pos[2] > pos[1] && pos[3] > pos[2];
}

}  // namespace detail

// Crossing-path dichotomy on a 2-colored near-triangulation whose outer
// cycle carries four corners a,b,c,d in cyclic order: returns either a blue
// path joining arc(a,b) to arc(c,d), or a red path joining arc(b,c) to
// arc(d,a). The blue side is a plain multi-source BFS; the red side walks
// the cut between the blue-reachable region and the rest face by face (two
// cut edges per triangle), which traces the dual cycle through the outer
// face, then reads a red path off the collected cut edges.
// When both paths exist the blue one is returned.
inline CrossingResult crossing_path(const PlaneGraph& pg, int a, int b, int c, int d,
                                    const EdgeColoring& coloring) {
    const Graph& g = pg.graph;
    if (coloring.k != 2) throw std::invalid_argument("crossing_path: k must be 2");
    if (!is_near_triangulation(pg))
        throw std::invalid_argument("crossing_path: inner faces must be triangles");
    std::vector<int> outer = pg.outer_cycle();
    {
        std::set<int> cs = {a, b, c, d};
        if (cs.size() != 4) throw std::invalid_argument("crossing_path: corners not distinct");
        std::set<int> os(outer.begin(), outer.end());
        if (os.size() != outer.size())
            throw std::invalid_argument("crossing_path: outer face is not a simple cycle");
    }
    if (!detail::in_cyclic_order(outer, {a, b, c, d})) {
        std::reverse(outer.begin(), outer.end());
        if (!detail::in_cyclic_order(outer, {a, b, c, d}))
            throw std::invalid_argument("crossing_path: corners not in cyclic order on outer face");
    }
    ColorView cv(g, coloring);

    std::vector<int> arcAB = detail::cycle_arc(outer, a, b);
    std::vector<int> arcBC = detail::cycle_arc(outer, b, c);
    std::vector<int> arcCD = detail::cycle_arc(outer, c, d);
    std::vector<int> arcDA = detail::cycle_arc(outer, d, a);

    // Blue BFS from every vertex of arc(a,b).
    std::vector<int> parent(g.vertex_count(), -2);  // -2 unvisited, -1 source
    std::vector<int> queue;
    for (int v : arcAB)
        if (parent[v] == -2) {
            parent[v] = -1;
            queue.push_back(v);
        }
    std::set<int> targets(arcCD.begin(), arcCD.end());
    int hit = -1;
    for (size_t head = 0; head < queue.size() && hit < 0; ++head) {
        int v = queue[head];
        if (targets.count(v)) {
            hit = v;
            break;
        }
        for (int w : cv.adj[kBlue][v])
            if (parent[w] == -2) {
                parent[w] = v;
                queue.push_back(w);
            }
    }
    if (hit >= 0) {
        CrossingResult res;
        res.color = kBlue;
        for (int v = hit; v != -1; v = parent[v]) res.path.push_back(v);
        std::reverse(res.path.begin(), res.path.end());
        return res;
    }

    // No blue crossing: extract the red path from the cut around the
    // blue-reachable set X.
    std::vector<char> inX(g.vertex_count(), 0);
    for (size_t i = 0; i < parent.size(); ++i) inX[i] = (parent[i] != -2);
    auto isCut = [&](int u, int v) { return inX[u] != inX[v]; };

    auto inc = edge_face_incidence(pg);
    auto otherFace = [&](int edgeIdx, int face) {
        return inc[edgeIdx].first == face ? inc[edgeIdx].second : inc[edgeIdx].first;
    };

    // Transition edges along arc(b,c): consecutive arc vertices crossing the
    // X boundary. At least one exists and an odd number of them do; walks
    // from distinct transitions trace disjoint dual paths, and a parity
    // argument guarantees at least one ends on arc(d,a).
    std::vector<int> startEdges;
    for (size_t i = 0; i + 1 < arcBC.size(); ++i) {
        int ei = g.edge_index(arcBC[i], arcBC[i + 1]);
        detail::require(ei >= 0, "crossing_path: broken outer arc");
        if (isCut(arcBC[i], arcBC[i + 1])) startEdges.push_back(ei);
    }
    detail::require(!startEdges.empty(), "crossing_path: no cut edge on arc(b,c)");
    std::set<int> arcDAset(arcDA.begin(), arcDA.end());

    for (int startEdge : startEdges) {
        std::vector<int> cutEdges = {startEdge};
        int face = otherFace(startEdge, pg.outer_face);
        int viaEdge = startEdge;
        int guard = 4 * g.edge_count() + 8;
        while (guard-- > 0) {
            const auto& f = pg.faces[face];
            detail::require(f.size() == 3, "crossing_path: non-triangular inner face");
            int nextEdge = -1;
            for (int i = 0; i < 3; ++i) {
                int u = f[i], v = f[(i + 1) % 3];
                int ei = g.edge_index(u, v);
                if (ei != viaEdge && isCut(u, v)) {
                    detail::require(nextEdge < 0, "crossing_path: three cut edges in a face");
                    nextEdge = ei;
                }
            }
            detail::require(nextEdge >= 0, "crossing_path: cut walk dead end");
            cutEdges.push_back(nextEdge);
            int nf = otherFace(nextEdge, face);
            if (nf == pg.outer_face) break;
            face = nf;
            viaEdge = nextEdge;
        }
        detail::require(guard > 0, "crossing_path: cut walk did not terminate");

        auto [eu, ev] = g.edge_at(cutEdges.back());
        if (!arcDAset.count(eu) && !arcDAset.count(ev)) continue;  // stitched back to arc(b,c)

        // The collected cut edges are all red and consecutive ones share a
        // vertex; BFS inside them from the start edge to the end edge.
        std::map<int, std::vector<int>> redAdj;
        for (int ei : cutEdges) {
            auto [u, v] = g.edge_at(ei);
            detail::require(cv.color_by_edge[ei] == kRed, "crossing_path: cut edge not red");
            redAdj[u].push_back(v);
            redAdj[v].push_back(u);
        }
        auto [su, sv] = g.edge_at(startEdge);
        std::map<int, int> par;
        std::vector<int> q2 = {su, sv};
        par[su] = -1;
        par[sv] = -1;
        int goal = -1;
        for (size_t head = 0; head < q2.size() && goal < 0; ++head) {
            int v = q2[head];
            if (v == eu || v == ev) {
                goal = v;
                break;
            }
            for (int w : redAdj[v])
                if (!par.count(w)) {
                    par[w] = v;
                    q2.push_back(w);
                }
        }
        detail::require(goal >= 0, "crossing_path: cut chain disconnected");
        CrossingResult res;
        res.color = kRed;
        for (int v = goal; v != -1; v = par[v]) res.path.push_back(v);
        std::reverse(res.path.begin(), res.path.end());
        return res;
    }
    throw std::logic_error("crossing_path: no dual walk reached arc(d,a)");
}

// Independent validity check for crossing_path output: a simple
// monochromatic path whose first vertex lies on the color's source arc and
// last vertex on its target arc.
inline bool verify_crossing_path(const PlaneGraph& pg, int a, int b, int c, int d,
                                 const EdgeColoring& coloring, const CrossingResult& r) {
    std::vector<int> outer = pg.outer_cycle();
    if (!detail::in_cyclic_order(outer, {a, b, c, d})) std::reverse(outer.begin(), outer.end());
    if (!detail::in_cyclic_order(outer, {a, b, c, d})) return false;
    if (r.path.empty()) return false;
    if (!verify_mono_path(pg.graph, coloring, r.color, r.path, 1)) return false;
    auto onArc = [&](int v, int from, int to) {
        auto arc = detail::cycle_arc(outer, from, to);
        return std::find(arc.begin(), arc.end(), v) != arc.end();
    };
    if (r.color == kBlue)
        return onArc(r.path.front(), a, b) && onArc(r.path.back(), c, d);
    if (r.color == kRed) {
        bool fwd = onArc(r.path.front(), b, c) && onArc(r.path.back(), d, a);
        bool rev = onArc(r.path.back(), b, c) && onArc(r.path.front(), d, a);
        return fwd || rev;
    }
    return false;
}

}  // namespace ramsey
