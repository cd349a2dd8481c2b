#pragma once

#include "planar_ramsey/constructions.hpp"
#include "planar_ramsey/detect.hpp"
#include "planar_ramsey/plane_graph.hpp"

namespace ramsey {

class DensityViolation : public std::runtime_error {
public:
    DensityViolation(std::string what, std::vector<int> witness)
        : std::runtime_error(std::move(what)), violating_set(std::move(witness)) {}
    std::vector<int> violating_set;
};

// Total orientation with out-degree <= d at every vertex, by path reversal:
// while some vertex exceeds d, walk directed edges to any vertex with spare
// out-capacity and reverse the walk. If no such vertex is reachable, the
// reachable set R has |E(R)| > d|R|, which disproves the density
// precondition; R is reported in the exception.
inline Orientation bounded_outdegree_orientation(const Graph& g, int d) {
    if (d < 0) throw std::invalid_argument("orientation bound must be >= 0");
    Orientation o;
    o.bound = d;
    o.dir.resize(g.edge_count());
    std::vector<std::vector<std::pair<int, int>>> outAdj(g.vertex_count());  // (head, edge idx)
    std::vector<int> outDeg(g.vertex_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edge_at(i);
        o.dir[i] = {u, v};
        outAdj[u].push_back({v, i});
        ++outDeg[u];
    }
    auto reverse_edge = [&](int idx) {
        auto [t, h] = o.dir[idx];
        o.dir[idx] = {h, t};
        auto& lst = outAdj[t];
        lst.erase(std::find(lst.begin(), lst.end(), std::make_pair(h, idx)));
        outAdj[h].push_back({t, idx});
        --outDeg[t];
        ++outDeg[h];
    };
    while (true) {
        int s = -1;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (outDeg[v] > d) {
                s = v;
                break;
            }
        if (s < 0) break;
        // BFS over directed edges from s
        std::vector<int> parentEdge(g.vertex_count(), -1);
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> q = {s};
        seen[s] = 1;
        int t = -1;
        for (size_t head = 0; head < q.size() && t < 0; ++head) {
            int v = q[head];
            for (auto [w, ei] : outAdj[v]) {
                if (seen[w]) continue;
                seen[w] = 1;
                parentEdge[w] = ei;
                if (outDeg[w] < d) {
                    t = w;
                    break;
                }
                q.push_back(w);
            }
        }
        if (t < 0) {
            std::vector<int> witness;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (seen[v]) witness.push_back(v);
            throw DensityViolation(
                "no orientation with out-degree <= " + std::to_string(d) +
                    ": vertex set of size " + std::to_string(witness.size()) +
                    " induces too many edges",
                witness);
        }
        // reverse the path s -> t
        int cur = t;
        while (cur != s) {
            int ei = parentEdge[cur];
            int tail = o.dir[ei].first;
            reverse_edge(ei);
            cur = tail;
        }
    }
    return o;
}

namespace detail {

// ---------------------------------------------------------------------------
// Path 3-coloring of near-triangulations (the partition into three linear
// forests behind every planar avoidance coloring).
//
// Recursive scheme on regions bounded by two pre-colored induced paths A and
// B: a chord between them splits the region in two; otherwise a shortest
// path P3 through the interior (anchored at the third vertices of the two
// corner triangles) takes the third color, splitting the region into an
// A/P3 strip and a P3/B remainder. The two corner triangles fall outside
// both subregions, which is fine: their edges join differently colored
// paths. Shortest interior paths are induced, so the invariant "each
// boundary path is induced and ends up a full component of its color class"
// survives every split.
// ---------------------------------------------------------------------------

struct PohRegion {
    std::vector<int> faces;  // indices into the triangulation's face list
    std::vector<int> A, B;   // boundary paths; cycle order A then B
    int colorA = 0, colorB = 1;
};

struct PohContext {
    const Graph* g = nullptr;
    const std::vector<std::vector<int>>* faces = nullptr;
    std::vector<std::pair<int, int>> edgeFaces;  // per edge index
    std::vector<int> color;                      // output, -1 while unassigned
};

inline int poh_other_face(const PohContext& ctx, int edgeIdx, int face) {
    auto [f1, f2] = ctx.edgeFaces[edgeIdx];
    return f1 == face ? f2 : f1;
}

// Faces of the subregion bounded by `cycle` found from seed face, staying
// inside `allowed`.
inline std::vector<int> poh_region_faces(const PohContext& ctx, const std::vector<int>& cycle,
                                         int seedFace, const std::vector<int>& allowed) {
    std::set<int> blocked;
    for (size_t i = 0; i < cycle.size(); ++i) {
        int ei = ctx.g->edge_index(cycle[i], cycle[(i + 1) % cycle.size()]);
        require(ei >= 0, "poh: region cycle uses non-edge");
        blocked.insert(ei);
    }
    std::set<int> allow(allowed.begin(), allowed.end());
    require(allow.count(seedFace) != 0, "poh: seed face outside region");
    std::vector<int> out = {seedFace};
    std::set<int> seen = {seedFace};
    for (size_t head = 0; head < out.size(); ++head) {
        int f = out[head];
        const auto& fc = (*ctx.faces)[f];
        for (size_t i = 0; i < fc.size(); ++i) {
            int ei = ctx.g->edge_index(fc[i], fc[(i + 1) % fc.size()]);
            if (blocked.count(ei)) continue;
            int nf = poh_other_face(ctx, ei, f);
            if (nf < 0 || seen.count(nf) || !allow.count(nf)) continue;
            seen.insert(nf);
            out.push_back(nf);
        }
    }
    return out;
}

inline void poh_process(PohContext& ctx, std::vector<PohRegion>& work) {
    while (!work.empty()) {
        PohRegion r = std::move(work.back());
        work.pop_back();
        const Graph& g = *ctx.g;
        if (r.faces.empty()) continue;

        // boundary bookkeeping
        std::vector<int> cycle = r.A;
        cycle.insert(cycle.end(), r.B.begin(), r.B.end());
        std::map<int, int> cyclePos;
        for (size_t i = 0; i < cycle.size(); ++i) cyclePos[cycle[i]] = static_cast<int>(i);
        require(cyclePos.size() == cycle.size(), "poh: boundary not simple");

        // region edges and vertices
        std::set<int> regionEdges;
        std::set<int> regionVerts(cycle.begin(), cycle.end());
        for (int f : r.faces) {
            const auto& fc = (*ctx.faces)[f];
            for (size_t i = 0; i < fc.size(); ++i) {
                regionVerts.insert(fc[i]);
                int ei = g.edge_index(fc[i], fc[(i + 1) % fc.size()]);
                regionEdges.insert(ei);
            }
        }

        // chord of the boundary cycle?
        int chordEdge = -1;
        for (int ei : regionEdges) {
            auto [u, v] = g.edge_at(ei);
            auto iu = cyclePos.find(u), iv = cyclePos.find(v);
            if (iu == cyclePos.end() || iv == cyclePos.end()) continue;
            int diff = std::abs(iu->second - iv->second);
            if (diff != 1 && diff != static_cast<int>(cycle.size()) - 1) {
                chordEdge = ei;
                break;
            }
        }

        if (chordEdge >= 0) {
            auto [u, v] = g.edge_at(chordEdge);
            // orient the chord as (a_i, b_j)
            int ai = -1, bj = -1;
            auto inA = [&](int x) {
                return std::find(r.A.begin(), r.A.end(), x) != r.A.end();
            };
            if (inA(u) && !inA(v)) {
                ai = u;
                bj = v;
            } else if (inA(v) && !inA(u)) {
                ai = v;
                bj = u;
            } else {
                throw std::logic_error("poh: chord within one boundary path");
            }
            int posAi = static_cast<int>(std::find(r.A.begin(), r.A.end(), ai) - r.A.begin());
            int posBj = static_cast<int>(std::find(r.B.begin(), r.B.end(), bj) - r.B.begin());

            PohRegion r1, r2;
            r1.A.assign(r.A.begin() + posAi, r.A.end());
            r1.B.assign(r.B.begin(), r.B.begin() + posBj + 1);
            r2.A.assign(r.A.begin(), r.A.begin() + posAi + 1);
            r2.B.assign(r.B.begin() + posBj, r.B.end());
            r1.colorA = r2.colorA = r.colorA;
            r1.colorB = r2.colorB = r.colorB;

            std::vector<int> cyc1 = r1.A;
            cyc1.insert(cyc1.end(), r1.B.begin(), r1.B.end());
            // seed: the region face on edge (A.back, B.front) of the parent
            int joinEdge = g.edge_index(r.A.back(), r.B.front());
            require(joinEdge >= 0, "poh: missing join edge");
            int seed = -1;
            for (int f : r.faces) {
                const auto& fc = (*ctx.faces)[f];
                for (size_t i = 0; i < fc.size(); ++i)
                    if (g.edge_index(fc[i], fc[(i + 1) % fc.size()]) == joinEdge) seed = f;
            }
            require(seed >= 0, "poh: join edge face not in region");
            r1.faces = poh_region_faces(ctx, cyc1, seed, r.faces);
            std::set<int> taken(r1.faces.begin(), r1.faces.end());
            for (int f : r.faces)
                if (!taken.count(f)) r2.faces.push_back(f);
            work.push_back(std::move(r1));
            work.push_back(std::move(r2));
            continue;
        }

        // no chord: interior vertices?
        std::vector<int> interior;
        for (int v : regionVerts)
            if (!cyclePos.count(v)) interior.push_back(v);
        if (interior.empty()) continue;  // bare cycle region, boundary already colored

        int a0 = r.A.front(), as = r.A.back();
        int b0 = r.B.front(), bt = r.B.back();
        // corner triangles at the two boundary join edges
        auto third_vertex = [&](int x, int y) {
            int ei = g.edge_index(x, y);
            require(ei >= 0, "poh: join edge missing");
            for (int f : r.faces) {
                const auto& fc = (*ctx.faces)[f];
                bool has = false;
                for (size_t i = 0; i < fc.size(); ++i)
                    if (g.edge_index(fc[i], fc[(i + 1) % fc.size()]) == ei) has = true;
                if (!has) continue;
                for (int w : fc)
                    if (w != x && w != y) return std::make_pair(w, f);
            }
            throw std::logic_error("poh: corner triangle not found");
        };
        auto [z0, cornerF0] = third_vertex(bt, a0);
        auto [zr, cornerF1] = third_vertex(as, b0);
        require(!cyclePos.count(z0) && !cyclePos.count(zr), "poh: corner apex on boundary");

        // shortest interior path z0 -> zr (deterministic BFS)
        std::set<int> interiorSet(interior.begin(), interior.end());
        std::map<int, std::vector<int>> iAdj;
        for (int ei : regionEdges) {
            auto [u, v] = g.edge_at(ei);
            if (interiorSet.count(u) && interiorSet.count(v)) {
                iAdj[u].push_back(v);
                iAdj[v].push_back(u);
            }
        }
        for (auto& [v, lst] : iAdj) std::sort(lst.begin(), lst.end());
        std::map<int, int> par;
        std::vector<int> q = {z0};
        par[z0] = -1;
        for (size_t head = 0; head < q.size(); ++head) {
            int v = q[head];
            if (v == zr) break;
            for (int w : iAdj[v])
                if (!par.count(w)) {
                    par[w] = v;
                    q.push_back(w);
                }
        }
        require(par.count(zr) != 0, "poh: interior path not found");
        std::vector<int> p3;
        for (int v = zr; v != -1; v = par[v]) p3.push_back(v);
        std::reverse(p3.begin(), p3.end());  // z0 .. zr

        int color3 = 3 - r.colorA - r.colorB;
        for (int v : p3) {
            require(ctx.color[v] == -1, "poh: recoloring a vertex");
            ctx.color[v] = color3;
        }

        // strip region: A then reversed P3 (a0..as, zr..z0)
        {
            std::vector<int> revP3(p3.rbegin(), p3.rend());
            std::vector<int> cyc = r.A;
            cyc.insert(cyc.end(), revP3.begin(), revP3.end());
            if (cyc.size() >= 3) {
                int e = g.edge_index(z0, a0);
                require(e >= 0, "poh: strip join edge missing");
                int seed = poh_other_face(ctx, e, cornerF0);
                // seed must be a region face (the corner triangle sits between
                // strip and remainder, so the other side of z0a0 is in-strip)
                PohRegion strip;
                strip.A = r.A;
                strip.B = revP3;
                strip.colorA = r.colorA;
                strip.colorB = color3;
                strip.faces = poh_region_faces(ctx, cyc, seed, r.faces);
                work.push_back(std::move(strip));
            }
        }
        // remainder region: P3 then B (z0..zr, b0..bt)
        {
            std::vector<int> cyc = p3;
            cyc.insert(cyc.end(), r.B.begin(), r.B.end());
            if (cyc.size() >= 3) {
                int e = g.edge_index(bt, z0);
                require(e >= 0, "poh: remainder join edge missing");
                int seed = poh_other_face(ctx, e, cornerF0);
                PohRegion rem;
                rem.A = p3;
                rem.B = r.B;
                rem.colorA = color3;
                rem.colorB = r.colorB;
                rem.faces = poh_region_faces(ctx, cyc, seed, r.faces);
                work.push_back(std::move(rem));
            }
        }
    }
}

// Star-triangulates every non-triangle face with a fresh apex; for a
// non-triangle outer face the apex sits in the outer region and one of its
// corner triangles becomes the new outer face. Returns the triangulation
// plus the original vertex count.
inline std::pair<PlaneGraph, int> triangulate_for_poh(const PlaneGraph& pg) {
    const Graph& g = pg.graph;
    if (!pg.has_faces()) throw std::invalid_argument("poh: embedding metadata missing");
    int n0 = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    std::vector<std::vector<int>> faces;
    int next = n0;
    int outIdx = -1;
    for (int fi = 0; fi < static_cast<int>(pg.faces.size()); ++fi) {
        const auto& f = pg.faces[fi];
        bool outer = (fi == pg.outer_face);
        if (f.size() == 3) {
            if (outer) outIdx = static_cast<int>(faces.size());
            faces.push_back(f);
            continue;
        }
        int apex = next++;
        if (outer) outIdx = static_cast<int>(faces.size());  // first corner triangle
        for (size_t i = 0; i < f.size(); ++i) {
            edges.push_back(make_edge(f[i], apex));
            faces.push_back({f[i], f[(i + 1) % f.size()], apex});
        }
    }
    require(outIdx >= 0, "poh: lost outer face");
    PlaneGraph out;
    out.graph = Graph(next, std::move(edges));
    out.faces = std::move(faces);
    out.outer_face = outIdx;
    return {out, n0};
}

}  // namespace detail

// Partition of the vertices of a planar graph (with embedding) into three
// sets each inducing a linear forest. Non-triangular faces are triangulated
// internally with apex vertices that are discarded from the result. The
// output is re-checked with is_linear_forest before returning.
//
// Forests skip the embedding machinery: BFS-level parity already splits a
// forest into two independent sets. Everything else must come with faces
// that are simple cycles.
inline VertexPartition poh_linear_forest_partition(const PlaneGraph& pg) {
    const Graph& g0 = pg.graph;
    if (is_forest(g0)) {
        VertexPartition part;
        part.parts.assign(3, {});
        std::vector<int> depth(g0.vertex_count(), -1);
        for (int s = 0; s < g0.vertex_count(); ++s) {
            if (depth[s] >= 0) continue;
            depth[s] = 0;
            std::vector<int> q = {s};
            for (size_t h = 0; h < q.size(); ++h)
                for (int w : g0.neighbors(q[h]))
                    if (depth[w] < 0) {
                        depth[w] = depth[q[h]] + 1;
                        q.push_back(w);
                    }
        }
        for (int v = 0; v < g0.vertex_count(); ++v) part.parts[depth[v] % 2].push_back(v);
        return part;
    }
    if (!pg.has_faces()) throw std::invalid_argument("poh: embedding metadata missing");
    for (const auto& f : pg.faces) {
        std::set<int> fs(f.begin(), f.end());
        if (fs.size() != f.size())
            throw std::invalid_argument("poh: face walks must be simple cycles");
    }
    auto [tri, n0] = detail::triangulate_for_poh(pg);
    validate_plane_graph(tri);
    detail::require(is_near_triangulation(tri) && tri.outer_cycle().size() == 3,
                    "poh: triangulation step failed");

    detail::PohContext ctx;
    ctx.g = &tri.graph;
    ctx.faces = &tri.faces;
    ctx.edgeFaces = edge_face_incidence(tri);
    ctx.color.assign(tri.graph.vertex_count(), -1);

    const auto& outer = tri.outer_cycle();
    detail::PohRegion top;
    top.A = {outer[0], outer[1]};
    top.B = {outer[2]};
    top.colorA = 0;
    top.colorB = 1;
    ctx.color[outer[0]] = 0;
    ctx.color[outer[1]] = 0;
    ctx.color[outer[2]] = 1;
    for (int f = 0; f < static_cast<int>(tri.faces.size()); ++f)
        if (f != tri.outer_face) top.faces.push_back(f);
    std::vector<detail::PohRegion> work = {std::move(top)};
    detail::poh_process(ctx, work);

    VertexPartition part;
    part.parts.assign(3, {});
    for (int v = 0; v < n0; ++v) {
        detail::require(ctx.color[v] >= 0 && ctx.color[v] < 3, "poh: uncolored vertex");
        part.parts[ctx.color[v]].push_back(v);
    }
    for (const auto& p : part.parts)
        detail::require(is_linear_forest(pg.graph, p), "poh: part is not a linear forest");
    return part;
}

namespace detail {

// Stacking order of a maximal outerplanar block: reverse ear elimination.
// Returns vertices in insertion order; each vertex after the first three has
// exactly two earlier neighbors and they are adjacent. `protect` (if >= 0)
// is kept out of the eliminations so it ends up among the base vertices.
inline std::vector<int> mop_stacking_order(const std::vector<int>& verts,
                                           std::map<int, std::set<int>>& adj, int protect) {
    std::vector<int> removed;
    std::set<int> alive(verts.begin(), verts.end());
    while (alive.size() > 3) {
        int pick = -1;
        for (int v : alive) {
            if (v == protect) continue;
            if (adj[v].size() == 2) {
                auto it = adj[v].begin();
                int x = *it++;
                int y = *it;
                if (adj[x].count(y)) {
                    pick = v;
                    break;
                }
            }
        }
        if (pick < 0)
            throw std::invalid_argument("outerplanar partition: block is not maximal outerplanar");
        removed.push_back(pick);
        for (int w : adj[pick]) adj[w].erase(pick);
        adj.erase(pick);
        alive.erase(pick);
    }
    std::vector<int> order(alive.begin(), alive.end());
    if (protect >= 0) {
        auto it = std::find(order.begin(), order.end(), protect);
        require(it != order.end(), "outerplanar partition: lost protected vertex");
        std::iter_swap(order.begin(), it);
    }
    std::reverse(removed.begin(), removed.end());
    order.insert(order.end(), removed.begin(), removed.end());
    return order;
}

}  // namespace detail

// Partition of an outerplanar graph (embedding with every vertex on the
// outer face) into two sets each inducing a linear forest.
//
// Per 2-connected block: complete to a maximal outerplanar graph by
// ear-clipping the non-triangle inner faces (skipping diagonals already
// present elsewhere), take a stacking order, and 2-color greedily. A vertex
// stacked on a same-colored edge takes the other color; stacked on a
// bicolored edge it copies the younger endpoint. That keeps every class
// acyclic (no vertex ever has two same-colored earlier neighbors) and caps
// class degrees at 2: only the younger end of a bicolored boundary edge can
// gain class degree, and it does so at most twice before both its boundary
// edges are monochromatic. Cut vertices are protected into the base of each
// later block, where their class degree can no longer grow.
inline VertexPartition outerplanar_linear_forest_partition(const PlaneGraph& pg) {
    const Graph& g = pg.graph;
    if (!pg.has_faces()) throw std::invalid_argument("outerplanar partition: embedding missing");
    if (!all_vertices_on_outer_face(pg))
        throw std::invalid_argument("outerplanar partition: a vertex is off the outer face");

    std::vector<int> color(g.vertex_count(), -1);
    std::vector<int> classDeg(g.vertex_count(), 0);

    // Linear forests get the one-part shortcut.
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    if (is_linear_forest(g, all)) {
        VertexPartition p;
        p.parts = {all, {}};
        return p;
    }

    // block-cut decomposition (iterative Tarjan)
    std::vector<std::vector<Edge>> blocks;
    {
        std::vector<int> num(g.vertex_count(), -1), low(g.vertex_count(), 0);
        std::vector<Edge> stack;
        int counter = 0;
        for (int root = 0; root < g.vertex_count(); ++root) {
            if (num[root] >= 0) continue;
            std::vector<std::tuple<int, int, size_t>> frames = {{root, -1, 0}};
            num[root] = low[root] = counter++;
            while (!frames.empty()) {
                auto& [v, parent, idx] = frames.back();
                if (idx < g.neighbors(v).size()) {
                    int w = g.neighbors(v)[idx++];
                    if (w == parent) continue;
                    if (num[w] < 0) {
                        stack.push_back(make_edge(v, w));
                        num[w] = low[w] = counter++;
                        frames.push_back({w, v, 0});
                    } else if (num[w] < num[v]) {
                        stack.push_back(make_edge(v, w));
                        low[v] = std::min(low[v], num[w]);
                    }
                } else {
                    int vv = v, pp = parent;
                    frames.pop_back();
                    if (pp >= 0) {
                        auto& [pv, ppar, pidx] = frames.back();
                        (void)ppar;
                        (void)pidx;
                        low[pv] = std::min(low[pv], low[vv]);
                        if (low[vv] >= num[pv]) {
                            std::vector<Edge> blk;
                            Edge stop = make_edge(pv, vv);
                            while (true) {
                                Edge e = stack.back();
                                stack.pop_back();
                                blk.push_back(e);
                                if (e == stop) break;
                            }
                            blocks.push_back(std::move(blk));
                        }
                    }
                }
            }
        }
    }
    // order blocks so that each (after the first of its component) meets the
    // already-colored set in at most one vertex
    std::vector<char> done(blocks.size(), 0);

    auto color_block = [&](const std::vector<Edge>& blk) {
        std::set<int> vs;
        for (auto [u, v] : blk) {
            vs.insert(u);
            vs.insert(v);
        }
        if (blk.size() == 1) {  // bridge
            auto [u, v] = blk[0];
            if (color[u] < 0 && color[v] < 0) color[u] = 0;
            int anchored = color[u] >= 0 ? u : v;
            int fresh = anchored == u ? v : u;
            if (color[fresh] < 0) color[fresh] = 1 - color[anchored];
            return;
        }
        // adjacency within block, ear-clip non-triangle inner faces of the
        // block to make it maximal outerplanar
        std::map<int, std::set<int>> adj;
        std::set<Edge> present(blk.begin(), blk.end());
        for (auto [u, v] : blk) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        for (int fi = 0; fi < static_cast<int>(pg.faces.size()); ++fi) {
            if (fi == pg.outer_face) continue;
            const auto& face = pg.faces[fi];
            // block faces: all face edges inside this block
            bool mine = face.size() > 3;
            for (size_t i = 0; i < face.size() && mine; ++i)
                if (!present.count(make_edge(face[i], face[(i + 1) % face.size()]))) mine = false;
            if (!mine) continue;
            // ear-clip avoiding diagonals already in g
            std::vector<int> poly = face;
            int guard = static_cast<int>(face.size()) * static_cast<int>(face.size()) + 8;
            while (poly.size() > 3 && guard-- > 0) {
                bool clipped = false;
                for (size_t i = 0; i < poly.size(); ++i) {
                    int prev = poly[(i + poly.size() - 1) % poly.size()];
                    int nxt = poly[(i + 1) % poly.size()];
                    Edge diag = make_edge(prev, nxt);
                    if (present.count(diag) || g.has_edge(prev, nxt)) continue;
                    present.insert(diag);
                    adj[prev].insert(nxt);
                    adj[nxt].insert(prev);
                    poly.erase(poly.begin() + i);
                    clipped = true;
                    break;
                }
                if (!clipped)
                    throw std::invalid_argument("outerplanar partition: cannot triangulate face");
            }
        }
        // find the protected vertex (at most one already-colored)
        int protect = -1;
        for (int v : vs)
            if (color[v] >= 0) {
                detail::require(protect < 0 || protect == v,
                                "outerplanar partition: block meets colored set twice");
                protect = v;
            }
        std::vector<int> verts(vs.begin(), vs.end());
        auto order = detail::mop_stacking_order(verts, adj, protect);
        // re-derive adjacency (mop_stacking_order consumed it)
        std::map<int, std::set<int>> adj2;
        for (const auto& e : present) {
            adj2[e.first].insert(e.second);
            adj2[e.second].insert(e.first);
        }
        std::map<int, int> pos;
        for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
        auto younger = [&](int x, int y) { return pos[x] > pos[y] ? x : y; };
        // base triangle
        int v0 = order[0], v1 = order[1], v2 = order[2];
        if (color[v0] < 0) color[v0] = 0;
        if (color[v1] < 0) color[v1] = 1 - color[v0];
        if (color[v2] < 0) {
            color[v2] = 1 - color[v0];
            if (color[v1] == color[v2]) {
                ++classDeg[v1];
                ++classDeg[v2];
            }
        }
        for (size_t i = 3; i < order.size(); ++i) {
            int v = order[i];
            std::vector<int> par;
            for (int w : adj2[v])
                if (pos[w] < static_cast<int>(i)) par.push_back(w);
            detail::require(par.size() == 2, "outerplanar partition: bad stacking order");
            int x = par[0], y = par[1];
            detail::require(adj2[x].count(y) != 0, "outerplanar partition: parents not adjacent");
            if (color[x] == color[y]) {
                color[v] = 1 - color[x];
            } else {
                int yv = younger(x, y);
                color[v] = color[yv];
                ++classDeg[yv];
                ++classDeg[v];
                detail::require(classDeg[yv] <= 2, "outerplanar partition: degree overflow");
            }
        }
    };

    // Grow the colored region connectedly through each component's block
    // tree: the next block always shares exactly one (cut) vertex with what
    // is already colored, so its budget there is fixed.
    size_t remaining = blocks.size();
    while (remaining > 0) {
        int pick = -1;
        for (size_t bi = 0; bi < blocks.size() && pick < 0; ++bi) {
            if (done[bi]) continue;
            for (auto [u, v] : blocks[bi])
                if (color[u] >= 0 || color[v] >= 0) {
                    pick = static_cast<int>(bi);
                    break;
                }
        }
        if (pick < 0)  // fresh component
            for (size_t bi = 0; bi < blocks.size(); ++bi)
                if (!done[bi]) {
                    pick = static_cast<int>(bi);
                    break;
                }
        color_block(blocks[pick]);
        done[pick] = 1;
        --remaining;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (color[v] < 0) color[v] = 0;  // isolated vertices

    VertexPartition p;
    p.parts.assign(2, {});
    for (int v = 0; v < g.vertex_count(); ++v) p.parts[color[v]].push_back(v);
    for (const auto& part : p.parts)
        detail::require(is_linear_forest(g, part), "outerplanar partition: invalid part");
    return p;
}

// ---------------------------------------------------------------------------
// Avoidance colorings
// ---------------------------------------------------------------------------

enum class EdgeRule { IntraAlternating, IntraColor4, CrossDirected };

struct AvoidanceColoring {
    EdgeColoring coloring;
    VertexPartition partition;
    Orientation orientation;         // covers all edges for 2-color schemes,
                                     // cross edges for c3/c4 (intra arbitrary tail)
    std::vector<EdgeRule> rule;      // per edge index
    std::string scheme;              // avoidT1 | avoidT2 | c3 | c4
    int per_pair_bound = 0;          // c3/c4: out-degree bound within each cross subgraph
};

namespace detail {

// Decompose a linear forest part into maximal paths and color the edges
// alternately starting red at the lower-indexed endpoint.
inline void alternate_paths(const Graph& g, const std::vector<int>& part,
                            std::vector<int>& colorByEdge) {
    std::set<int> inPart(part.begin(), part.end());
    std::set<int> visited;
    for (int v : part) {
        if (visited.count(v)) continue;
        int deg = 0;
        for (int w : g.neighbors(v))
            if (inPart.count(w)) ++deg;
        if (deg > 1) continue;  // start only from endpoints / isolated
        // walk the path from v
        visited.insert(v);
        int prev = -1, cur = v, c = kRed;
        while (true) {
            int nxt = -1;
            for (int w : g.neighbors(cur))
                if (w != prev && inPart.count(w)) {
                    nxt = w;
                    break;
                }
            if (nxt < 0) break;
            colorByEdge[g.edge_index(cur, nxt)] = c;
            c = 1 - c;
            visited.insert(nxt);
            prev = cur;
            cur = nxt;
        }
    }
}

}  // namespace detail

// Two-color avoidance scheme for planar hosts: 3-part linear-forest
// partition, out-degree-3 orientation, alternation inside parts, and the
// part-index direction rule across parts (tail part < head part -> red).
inline AvoidanceColoring coloring_avoid_T1(const PlaneGraph& pg) {
    const Graph& g = pg.graph;
    AvoidanceColoring out;
    out.scheme = "avoidT1";
    out.partition = poh_linear_forest_partition(pg);
    out.orientation = bounded_outdegree_orientation(g, 3);
    auto partOf = out.partition.part_of(g.vertex_count());
    std::vector<int> colors(g.edge_count(), -1);
    out.rule.assign(g.edge_count(), EdgeRule::CrossDirected);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edge_at(i);
        if (partOf[u] == partOf[v]) out.rule[i] = EdgeRule::IntraAlternating;
    }
    for (const auto& part : out.partition.parts) detail::alternate_paths(g, part, colors);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (out.rule[i] != EdgeRule::CrossDirected) continue;
        auto [tail, head] = out.orientation.dir[i];
        colors[i] = partOf[tail] < partOf[head] ? kRed : kBlue;
    }
    out.coloring = coloring_from_dense(g, 2, colors);
    return out;
}

// Outerplanar variant: 2 parts, out-degree-2 orientation, same rules.
inline AvoidanceColoring coloring_avoid_T2(const PlaneGraph& pg) {
    const Graph& g = pg.graph;
    AvoidanceColoring out;
    out.scheme = "avoidT2";
    out.partition = outerplanar_linear_forest_partition(pg);
    out.orientation = bounded_outdegree_orientation(g, 2);
    auto partOf = out.partition.part_of(g.vertex_count());
    std::vector<int> colors(g.edge_count(), -1);
    out.rule.assign(g.edge_count(), EdgeRule::CrossDirected);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edge_at(i);
        if (partOf[u] == partOf[v]) out.rule[i] = EdgeRule::IntraAlternating;
    }
    for (const auto& part : out.partition.parts) detail::alternate_paths(g, part, colors);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (out.rule[i] != EdgeRule::CrossDirected) continue;
        auto [tail, head] = out.orientation.dir[i];
        colors[i] = partOf[tail] < partOf[head] ? kRed : kBlue;
    }
    out.coloring = coloring_from_dense(g, 2, colors);
    return out;
}

namespace detail {

// Shared machinery of the 3- and 4-color schemes: Poh partition, then each
// bipartite cross subgraph oriented with out-degree <= 2; a cross edge takes
// the color (part index) of its head.
inline AvoidanceColoring directed_scheme(const PlaneGraph& pg, bool intra_color4) {
    const Graph& g = pg.graph;
    AvoidanceColoring out;
    out.scheme = intra_color4 ? "c4" : "c3";
    out.per_pair_bound = 2;
    out.partition = poh_linear_forest_partition(pg);
    auto partOf = out.partition.part_of(g.vertex_count());
    out.rule.assign(g.edge_count(), EdgeRule::CrossDirected);
    std::vector<int> colors(g.edge_count(), -1);
    out.orientation.bound = 2;
    out.orientation.dir.assign(g.edge_count(), {-1, -1});

    // orient the three cross subgraphs separately
    for (int p = 0; p < 3; ++p)
        for (int q = p + 1; q < 3; ++q) {
            std::vector<Edge> sub;
            std::vector<int> subIdx;
            for (int i = 0; i < g.edge_count(); ++i) {
                auto [u, v] = g.edge_at(i);
                if ((partOf[u] == p && partOf[v] == q) || (partOf[u] == q && partOf[v] == p)) {
                    sub.push_back(g.edge_at(i));
                    subIdx.push_back(i);
                }
            }
            Graph bsub(g.vertex_count(), sub);
            Orientation osub = bounded_outdegree_orientation(bsub, 2);
            for (size_t j = 0; j < subIdx.size(); ++j) {
                int ei = g.edge_index(bsub.edge_at(static_cast<int>(j)).first,
                                      bsub.edge_at(static_cast<int>(j)).second);
                out.orientation.dir[ei] = osub.dir[j];
            }
        }
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edge_at(i);
        if (partOf[u] == partOf[v]) {
            out.rule[i] = intra_color4 ? EdgeRule::IntraColor4 : EdgeRule::IntraAlternating;
            out.orientation.dir[i] = {u, v};  // intra edges carry no direction rule
            if (intra_color4)
                colors[i] = 3;
            else
                colors[i] = partOf[u];
        } else {
            auto [tail, head] = out.orientation.dir[i];
            colors[i] = partOf[head];
        }
    }
    if (!intra_color4) {
        // c3 keeps intra edges at the part color; nothing to alternate
    }
    out.coloring = coloring_from_dense(g, intra_color4 ? 4 : 3, colors);
    return out;
}

}  // namespace detail

// 3-coloring: intra-part edges and cross edges oriented into part i all get
// color i.
inline AvoidanceColoring coloring_c3(const PlaneGraph& pg) {
    return detail::directed_scheme(pg, false);
}

// 4-coloring: cross edges as in c3; all intra-part edges get color 4, whose
// class is consequently a disjoint union of paths.
inline AvoidanceColoring coloring_c4(const PlaneGraph& pg) {
    return detail::directed_scheme(pg, true);
}

// Rule-conformance check, assertable edge by edge: partition parts are
// linear forests, the orientation satisfies its bound, intra alternation
// holds along part paths with the fixed phase, cross edges obey the
// direction rule of their scheme.
inline bool check_avoidance_invariants(const Graph& g, const AvoidanceColoring& ac,
                                       std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!validate_coloring(g, ac.coloring)) return fail("coloring does not cover E(g)");
    VertexPartition p = ac.partition;
    std::vector<int> partOf;
    try {
        partOf = p.part_of(g.vertex_count());
    } catch (const std::invalid_argument& e) {
        return fail(e.what());
    }
    for (const auto& part : p.parts)
        if (!is_linear_forest(g, part)) return fail("a part is not a linear forest");

    bool twoColor = ac.scheme == "avoidT1" || ac.scheme == "avoidT2";
    if (twoColor) {
        if (!validate_orientation(g, ac.orientation)) return fail("orientation exceeds bound");
    } else {
        // per cross-pair bound
        std::map<std::pair<int, int>, std::map<int, int>> outDeg;
        for (int i = 0; i < g.edge_count(); ++i) {
            auto [u, v] = g.edge_at(i);
            if (partOf[u] == partOf[v]) continue;
            auto [tail, head] = ac.orientation.dir[i];
            if (make_edge(tail, head) != g.edge_at(i)) return fail("orientation mismatch");
            auto key = std::minmax(partOf[u], partOf[v]);
            if (++outDeg[{key.first, key.second}][tail] > ac.per_pair_bound)
                return fail("cross subgraph out-degree exceeds bound");
        }
    }

    // intra alternation phase: recompute and compare
    std::vector<int> expect(g.edge_count(), -1);
    for (const auto& part : p.parts) detail::alternate_paths(g, part, expect);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edge_at(i);
        int c = ac.coloring.at(u, v);
        if (partOf[u] == partOf[v]) {
            if (ac.scheme == "c4") {
                if (c != 3) return fail("intra edge not color 4");
            } else if (ac.scheme == "c3") {
                if (c != partOf[u]) return fail("intra edge not part color");
            } else {
                if (c != expect[i]) return fail("intra alternation broken");
            }
        } else {
            auto [tail, head] = ac.orientation.dir[i];
            if (twoColor) {
                int want = partOf[tail] < partOf[head] ? kRed : kBlue;
                if (c != want) return fail("cross direction rule broken");
            } else {
                if (c != partOf[head]) return fail("cross edge not head-part color");
            }
        }
    }
    return true;
}

}  // namespace ramsey
