#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "planar_ramsey/graph.hpp"

namespace ramsey {

// Graph plus combinatorial embedding metadata: explicit face cycles (closed
// walks), the index of the outer face, and an optional per-vertex
// construction rank. Faces are stored as vertex cycles rather than a
// rotation system; every construction in this library emits faces directly.
struct PlaneGraph {
    Graph graph;
    std::vector<std::vector<int>> faces;  // each a closed walk, listed once
    int outer_face = -1;                  // index into faces
    std::vector<int> rank;                // empty when absent; else size n

    bool has_faces() const { return !faces.empty(); }
    bool has_rank() const { return !rank.empty(); }

    const std::vector<int>& outer_cycle() const {
        if (outer_face < 0 || outer_face >= static_cast<int>(faces.size()))
            throw std::invalid_argument("plane graph has no outer face");
        return faces[outer_face];
    }

    bool operator==(const PlaneGraph& o) const {
        return graph == o.graph && faces == o.faces && outer_face == o.outer_face &&
               rank == o.rank;
    }
};

// Validates the embedding invariants: face walks of length >= 3 over graph
// edges, every edge covered exactly twice across all face walks, and the
// Euler identity |V| - |E| + |F| = 2. Throws std::invalid_argument on
// violation. Rank, when present, must be monotone: every vertex of positive
// rank has at least one lower-ranked neighbor.
inline void validate_plane_graph(const PlaneGraph& pg) {
    const Graph& g = pg.graph;
    if (!pg.has_faces()) return;
    if (pg.outer_face < 0 || pg.outer_face >= static_cast<int>(pg.faces.size()))
        throw std::invalid_argument("outer face index out of range");
    std::vector<int> cover(g.edge_count(), 0);
    for (const auto& f : pg.faces) {
        if (f.size() < 3) throw std::invalid_argument("face of size < 3");
        for (size_t i = 0; i < f.size(); ++i) {
            int u = f[i], v = f[(i + 1) % f.size()];
            int idx = g.edge_index(u, v);
            if (idx < 0)
                throw std::invalid_argument("face walk uses non-edge " + std::to_string(u) +
                                            "-" + std::to_string(v));
            ++cover[idx];
        }
    }
    for (int i = 0; i < g.edge_count(); ++i)
        if (cover[i] != 2)
            throw std::invalid_argument("edge not covered exactly twice by faces: " +
                                        std::to_string(g.edge_at(i).first) + "-" +
                                        std::to_string(g.edge_at(i).second));
    long long euler = static_cast<long long>(g.vertex_count()) - g.edge_count() +
                      static_cast<long long>(pg.faces.size());
    if (euler != 2) throw std::invalid_argument("Euler identity violated");
    if (pg.has_rank()) {
        if (static_cast<int>(pg.rank.size()) != g.vertex_count())
            throw std::invalid_argument("rank vector size mismatch");
        int minRank = pg.rank.empty() ? 0 : *std::min_element(pg.rank.begin(), pg.rank.end());
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (pg.rank[v] < 0) throw std::invalid_argument("negative rank");
            if (pg.rank[v] == minRank) continue;
            bool ok = false;
            for (int w : g.neighbors(v))
                if (pg.rank[w] < pg.rank[v]) ok = true;
            if (!ok) throw std::invalid_argument("rank not monotone at vertex " + std::to_string(v));
        }
    }
}

// True iff every inner face is a triangle and |E| = 3|V| - 6.
inline bool check_triangulation(const PlaneGraph& pg) {
    if (!pg.has_faces()) throw std::invalid_argument("check_triangulation: faces absent");
    for (int i = 0; i < static_cast<int>(pg.faces.size()); ++i) {
        if (i == pg.outer_face) continue;
        if (pg.faces[i].size() != 3) return false;
    }
    return pg.graph.edge_count() == 3 * pg.graph.vertex_count() - 6;
}

// True iff every inner face is a triangle (outer boundary arbitrary).
inline bool is_near_triangulation(const PlaneGraph& pg) {
    if (!pg.has_faces()) return false;
    for (int i = 0; i < static_cast<int>(pg.faces.size()); ++i)
        if (i != pg.outer_face && pg.faces[i].size() != 3) return false;
    return true;
}

// True iff the outer face walk visits every vertex.
inline bool all_vertices_on_outer_face(const PlaneGraph& pg) {
    if (!pg.has_faces()) return false;
    std::vector<char> seen(pg.graph.vertex_count(), 0);
    for (int v : pg.outer_cycle()) seen.at(v) = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

// Map edge index -> the (at most two) face indices it borders.
inline std::vector<std::pair<int, int>> edge_face_incidence(const PlaneGraph& pg) {
    std::vector<std::pair<int, int>> inc(pg.graph.edge_count(), {-1, -1});
    for (int fi = 0; fi < static_cast<int>(pg.faces.size()); ++fi) {
        const auto& f = pg.faces[fi];
        for (size_t i = 0; i < f.size(); ++i) {
            int idx = pg.graph.edge_index(f[i], f[(i + 1) % f.size()]);
            detail::require(idx >= 0, "edge_face_incidence: face uses non-edge");
            if (inc[idx].first < 0)
                inc[idx].first = fi;
            else if (inc[idx].second < 0)
                inc[idx].second = fi;
            else
                throw std::invalid_argument("edge on more than two faces");
        }
    }
    return inc;
}

}  // namespace ramsey
