#pragma once

#include <map>
#include <optional>
#include <sstream>

#include "planar_ramsey/graph.hpp"

namespace ramsey {

// Color indices are 0-based. Two-color schemes use 0 = red, 1 = blue
// throughout the library.
constexpr int kRed = 0;
constexpr int kBlue = 1;

// Total map edge -> color in {0..k-1}, keyed by normalized edge. Kept as an
// explicit map (rather than a dense vector) so that validation can report
// missing and extra edges for colorings read from files.
struct EdgeColoring {
    int k = 0;
    std::map<Edge, int> color_of;

    int at(int u, int v) const {
        auto it = color_of.find(make_edge(u, v));
        if (it == color_of.end())
            throw std::invalid_argument("coloring missing edge " + std::to_string(u) + "-" +
                                        std::to_string(v));
        return it->second;
    }

    bool operator==(const EdgeColoring& o) const {
        return k == o.k && color_of == o.color_of;
    }
};

struct ColoringDiagnostic {
    bool ok = true;
    std::vector<Edge> missing;               // host edges absent from the map
    std::vector<Edge> extra;                 // map keys that are not host edges
    std::vector<std::pair<Edge, int>> bad;   // colors outside {0..k-1}

    std::string to_string() const {
        std::ostringstream os;
        auto dump = [&os](const char* tag, const std::vector<Edge>& es) {
            if (es.empty()) return;
            os << tag << ":";
            for (const auto& [u, v] : es) os << ' ' << u << '-' << v;
            os << "; ";
        };
        dump("missing", missing);
        dump("extra", extra);
        if (!bad.empty()) {
            os << "bad colors:";
            for (const auto& [e, c] : bad) os << ' ' << e.first << '-' << e.second << "=" << c;
        }
        return os.str();
    }
};

inline ColoringDiagnostic validate_coloring_report(const Graph& g, const EdgeColoring& c) {
    ColoringDiagnostic d;
    for (const auto& e : g.edges())
        if (!c.color_of.count(e)) d.missing.push_back(e);
    for (const auto& [e, col] : c.color_of) {
        if (!g.has_edge(e.first, e.second))
            d.extra.push_back(e);
        else if (col < 0 || col >= c.k)
            d.bad.emplace_back(e, col);
    }
    d.ok = d.missing.empty() && d.extra.empty() && d.bad.empty();
    return d;
}

// True iff c covers exactly E(g) with colors < k.
inline bool validate_coloring(const Graph& g, const EdgeColoring& c) {
    return validate_coloring_report(g, c).ok;
}

// Dense per-edge-index view of a validated coloring, plus per-color
// adjacency. This is what the detectors and the search engine work with.
struct ColorView {
    int k = 0;
    std::vector<int> color_by_edge;                 // by edge index
    std::vector<std::vector<std::vector<int>>> adj; // adj[c][v] = neighbors via color-c edges

    ColorView() = default;

    ColorView(const Graph& g, const EdgeColoring& c) {
        auto d = validate_coloring_report(g, c);
        if (!d.ok) throw std::invalid_argument("invalid coloring: " + d.to_string());
        k = c.k;
        color_by_edge.resize(g.edge_count());
        for (int i = 0; i < g.edge_count(); ++i) color_by_edge[i] = c.color_of.at(g.edge_at(i));
        build_adj(g);
    }

    // Dense construction; colors[i] must already be valid for edge i.
    ColorView(const Graph& g, int kk, std::vector<int> colors)
        : k(kk), color_by_edge(std::move(colors)) {
        detail::require(static_cast<int>(color_by_edge.size()) == g.edge_count(),
                        "ColorView: size mismatch");
        build_adj(g);
    }

    // In-place refill, keeping buffer capacity (hot path of the exhaustive
    // coloring enumeration).
    void rebuild(const Graph& g, const std::vector<int>& colors) {
        detail::require(static_cast<int>(colors.size()) == g.edge_count() && k > 0,
                        "ColorView::rebuild: size mismatch");
        color_by_edge = colors;
        for (auto& perColor : adj)
            for (auto& lst : perColor) lst.clear();
        fill_adj(g);
    }

    int color_degree(int v, int c) const { return static_cast<int>(adj[c][v].size()); }

private:
    void build_adj(const Graph& g) {
        adj.assign(k, std::vector<std::vector<int>>(g.vertex_count()));
        fill_adj(g);
    }

    void fill_adj(const Graph& g) {
        for (int i = 0; i < g.edge_count(); ++i) {
            auto [u, v] = g.edge_at(i);
            int c = color_by_edge[i];
            detail::require(c >= 0 && c < k, "ColorView: color out of range");
            adj[c][u].push_back(v);
            adj[c][v].push_back(u);
        }
    }
};

inline EdgeColoring coloring_from_dense(const Graph& g, int k, const std::vector<int>& colors) {
    detail::require(static_cast<int>(colors.size()) == g.edge_count(),
                    "coloring_from_dense: size mismatch");
    EdgeColoring c;
    c.k = k;
    for (int i = 0; i < g.edge_count(); ++i) c.color_of[g.edge_at(i)] = colors[i];
    return c;
}

// Total orientation: dir[i] = (tail, head) for edge i of the host, with a
// recorded out-degree bound.
struct Orientation {
    std::vector<std::pair<int, int>> dir;  // by edge index
    int bound = 0;

    bool operator==(const Orientation& o) const { return dir == o.dir && bound == o.bound; }
};

inline std::vector<int> out_degrees(const Graph& g, const Orientation& o) {
    detail::require(static_cast<int>(o.dir.size()) == g.edge_count(), "orientation size mismatch");
    std::vector<int> out(g.vertex_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [t, h] = o.dir[i];
        if (make_edge(t, h) != g.edge_at(i))
            throw std::invalid_argument("orientation does not match edge " + std::to_string(i));
        ++out[t];
    }
    return out;
}

inline bool validate_orientation(const Graph& g, const Orientation& o) {
    auto out = out_degrees(g, o);
    return std::all_of(out.begin(), out.end(), [&](int d) { return d <= o.bound; });
}

// Disjoint vertex sets covering V.
struct VertexPartition {
    std::vector<std::vector<int>> parts;

    // Part index per vertex; throws if not a partition of 0..n-1.
    std::vector<int> part_of(int n) const {
        std::vector<int> p(n, -1);
        for (int i = 0; i < static_cast<int>(parts.size()); ++i)
            for (int v : parts[i]) {
                if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range");
                if (p[v] >= 0) throw std::invalid_argument("partition overlap at " + std::to_string(v));
                p[v] = i;
            }
        for (int v = 0; v < n; ++v)
            if (p[v] < 0) throw std::invalid_argument("partition misses vertex " + std::to_string(v));
        return p;
    }
};

inline bool validate_partition(const Graph& g, const VertexPartition& p, bool linear_forest_parts) {
    try {
        p.part_of(g.vertex_count());
    } catch (const std::invalid_argument&) {
        return false;
    }
    if (linear_forest_parts)
        for (const auto& part : p.parts)
            if (!is_linear_forest(g, part)) return false;
    return true;
}

// Injective map pattern vertex -> host vertex.
struct Embedding {
    std::vector<int> map;  // indexed by pattern vertex

    bool operator==(const Embedding& o) const { return map == o.map; }
};

// Valid iff injective, every pattern edge lands on a host edge, and (when
// color >= 0) every image edge has that color.
inline bool validate_embedding(const Graph& host, const Graph& pattern, const Embedding& emb,
                               const EdgeColoring* coloring = nullptr, int color = -1) {
    if (static_cast<int>(emb.map.size()) != pattern.vertex_count()) return false;
    std::set<int> used;
    for (int v : emb.map) {
        if (v < 0 || v >= host.vertex_count()) return false;
        if (!used.insert(v).second) return false;
    }
    for (const auto& [u, v] : pattern.edges()) {
        int hu = emb.map[u], hv = emb.map[v];
        if (!host.has_edge(hu, hv)) return false;
        if (coloring && color >= 0 && coloring->at(hu, hv) != color) return false;
    }
    return true;
}

// Simple monochromatic path check: distinct vertices, consecutive adjacency,
// all edges of the stated color, at least min_edges edges. Used as the
// independent verifier for both extractors.
inline bool verify_mono_path(const Graph& g, const EdgeColoring& c, int color,
                             const std::vector<int>& path, int min_edges) {
    if (static_cast<int>(path.size()) < min_edges + 1) return false;
    std::set<int> seen;
    for (int v : path) {
        if (v < 0 || v >= g.vertex_count()) return false;
        if (!seen.insert(v).second) return false;
    }
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        if (!g.has_edge(path[i], path[i + 1])) return false;
        if (c.at(path[i], path[i + 1]) != color) return false;
    }
    return true;
}

}  // namespace ramsey
