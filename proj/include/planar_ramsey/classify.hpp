#pragma once

#include <functional>
#include <set>
#include <tuple>

#include "planar_ramsey/graph.hpp"

namespace ramsey {

enum class Verdict3 { Avoidable, Unavoidable, Unknown };

struct ClassificationReport {
    bool bipartite = false;
    int outerplanar = -1;  // 1 yes, 0 no, -1 unknown (size cap)
    bool forest = false;
    bool caterpillar_forest = false;
    bool star_forest = false;
    bool pred_deg4_core = false;   // deg->=4 vertices induce max degree >= 3
    bool pred_odd_path = false;    // odd path between two degree->=3 vertices
    // recognized 2-color host classes
    bool is_path = false;
    bool is_c4 = false;
    bool radius2_tree = false;
    bool gen_broom = false;

    Verdict3 verdict[6] = {Verdict3::Unknown, Verdict3::Unknown, Verdict3::Unknown,
                           Verdict3::Unknown, Verdict3::Unknown, Verdict3::Unknown};
    std::string reason[6];
};

namespace detail {

// Series-parallel test by multigraph reduction (suppress degree-2 vertices,
// merge parallel edges); a 2-connected graph reduces to a single edge iff it
// has no K4 minor.
inline bool block_is_series_parallel(const std::vector<Edge>& block) {
    if (block.size() <= 1) return true;
    std::map<int, std::multiset<int>> adj;
    for (auto [u, v] : block) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    auto drop_parallels = [&](int u) {
        auto& mu = adj[u];
        std::set<int> uniq(mu.begin(), mu.end());
        for (int w : uniq) {
            size_t cnt = mu.count(w);
            while (cnt > 1) {
                mu.erase(mu.find(w));
                adj[w].erase(adj[w].find(u));
                --cnt;
            }
        }
    };
    for (auto& [v, _] : adj) drop_parallels(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = adj.begin(); it != adj.end();) {
            int v = it->first;
            auto& mv = it->second;
            if (mv.size() == 2) {
                auto a = *mv.begin();
                auto b = *std::next(mv.begin());
                if (a != v && b != v) {
                    adj[a].erase(adj[a].find(v));
                    adj[b].erase(adj[b].find(v));
                    it = adj.erase(it);
                    if (a != b) {
                        adj[a].insert(b);
                        adj[b].insert(a);
                        drop_parallels(a);
                    }
                    changed = true;
                    continue;
                }
            }
            ++it;
        }
        // remove isolated
        for (auto it = adj.begin(); it != adj.end();)
            it = it->second.empty() ? adj.erase(it) : std::next(it);
    }
    size_t edges = 0;
    for (auto& [v, mv] : adj) edges += mv.size();
    edges /= 2;
    return edges <= 1;
}

inline std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
    std::vector<std::vector<Edge>> blocks;
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
                        Edge stopEdge = make_edge(pv, vv);
                        while (true) {
                            Edge e = stack.back();
                            stack.pop_back();
                            blk.push_back(e);
                            if (e == stopEdge) break;
                        }
                        blocks.push_back(std::move(blk));
                    }
                }
            }
        }
    }
    return blocks;
}

// K_{2,3} minor = two vertices joined by three internally disjoint paths of
// length >= 2 each. Tested exactly with vertex-capacity max flow on every
// pair, excluding the direct edge.
inline bool has_k23_minor(const Graph& g) {
    int n = g.vertex_count();
    // flow network: split each vertex v into in=2v, out=2v+1 with capacity 1;
    // edges both ways with capacity 1 (unit capacities, flow <= 3 needed)
    for (int s = 0; s < n; ++s) {
        if (g.degree(s) < 3) continue;
        for (int t = s + 1; t < n; ++t) {
            if (g.degree(t) < 3) continue;
            // max flow from s.out to t.in, vertex caps except s,t
            // adjacency with residual: small graphs, rebuild per pair
            struct Arc {
                int to, cap, rev;
            };
            std::vector<std::vector<Arc>> net(2 * n);
            auto add_arc = [&](int a, int b, int cap) {
                net[a].push_back({b, cap, static_cast<int>(net[b].size())});
                net[b].push_back({a, 0, static_cast<int>(net[a].size()) - 1});
            };
            for (int v = 0; v < n; ++v)
                add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? 4 : 1);
            for (const auto& [u, v] : g.edges()) {
                if (make_edge(u, v) == make_edge(s, t)) continue;  // exclude direct edge
                add_arc(2 * u + 1, 2 * v, 1);
                add_arc(2 * v + 1, 2 * u, 1);
            }
            int source = 2 * s + 1, sink = 2 * t;
            int flow = 0;
            while (flow < 3) {
                std::vector<std::pair<int, int>> par(2 * n, {-1, -1});  // (node, arc idx)
                std::vector<int> q = {source};
                par[source] = {source, -1};
                for (size_t head = 0; head < q.size() && par[sink].first < 0; ++head) {
                    int v = q[head];
                    for (size_t ai = 0; ai < net[v].size(); ++ai)
                        if (net[v][ai].cap > 0 && par[net[v][ai].to].first < 0) {
                            par[net[v][ai].to] = {v, static_cast<int>(ai)};
                            q.push_back(net[v][ai].to);
                        }
                }
                if (par[sink].first < 0) break;
                int cur = sink;
                while (cur != source) {
                    auto [pv, ai] = par[cur];
                    net[pv][ai].cap -= 1;
                    net[cur][net[pv][ai].rev].cap += 1;
                    cur = pv;
                }
                ++flow;
            }
            if (flow >= 3) return true;
        }
    }
    return false;
}

}  // namespace detail

// 1 outerplanar, 0 not, -1 unknown (beyond the 50-vertex minor-check cap).
// Outerplanar iff no K4 minor (every block series-parallel) and no K_{2,3}
// minor; forests and max-degree-2 graphs short-circuit.
inline int outerplanarity(const Graph& g) {
    if (is_forest(g)) return 1;
    if (g.max_degree() <= 2) return 1;  // paths and cycles
    // per-component edge bound: outerplanar components have |E| <= 2|V| - 3
    {
        auto [comp, ncomp] = connected_components(g);
        std::vector<long long> vcount(ncomp, 0), ecount(ncomp, 0);
        for (int v = 0; v < g.vertex_count(); ++v) ++vcount[comp[v]];
        for (const auto& [u, v] : g.edges()) ++ecount[comp[u]];
        for (int c = 0; c < ncomp; ++c)
            if (vcount[c] >= 2 && ecount[c] > 2 * vcount[c] - 3) return 0;
    }
    if (g.vertex_count() > 50) return -1;
    for (const auto& blk : detail::biconnected_blocks(g))
        if (!detail::block_is_series_parallel(blk)) return 0;  // K4 minor
    if (detail::has_k23_minor(g)) return 0;
    return 1;
}

inline bool is_caterpillar_forest(const Graph& g) {
    if (!is_forest(g)) return false;
    // per component: removing leaves must leave a path (or nothing)
    std::vector<int> core;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 2) core.push_back(v);
    std::set<int> coreSet(core.begin(), core.end());
    for (int v : core) {
        int coreDeg = 0;
        for (int w : g.neighbors(v))
            if (coreSet.count(w)) ++coreDeg;
        if (coreDeg > 2) return false;
    }
    return true;  // acyclicity inherited, so core components are paths
}

inline bool is_star_forest(const Graph& g) {
    if (!is_forest(g)) return false;
    // every edge must have at least one endpoint of degree 1... precisely:
    // no path on 4 vertices, i.e. no edge with both endpoints of degree >= 2
    for (const auto& [u, v] : g.edges())
        if (g.degree(u) >= 2 && g.degree(v) >= 2) return false;
    return true;
}

inline bool is_path_graph(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    if (!is_connected(g) || !is_forest(g)) return false;
    return g.max_degree() <= 2;
}

inline bool is_c4_graph(const Graph& g) {
    if (g.vertex_count() != 4 || g.edge_count() != 4) return false;
    for (int v = 0; v < 4; ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

inline bool is_radius2_tree(const Graph& g) {
    if (!is_connected(g) || !is_forest(g) || g.vertex_count() == 0) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_distances(g, v);
        int ecc = *std::max_element(dist.begin(), dist.end());
        if (ecc <= 2) return true;
    }
    return false;
}

// Tree that is the union of a path and a star sharing only the star's
// center: at most one vertex of degree >= 3, and at most two of its branches
// are longer than a single edge.
inline bool is_generalized_broom(const Graph& g) {
    if (!is_connected(g) || !is_forest(g) || g.vertex_count() == 0) return false;
    std::vector<int> big;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 3) big.push_back(v);
    if (big.empty()) return true;  // a path
    if (big.size() > 1) return false;
    int c = big[0];
    int longLegs = 0;
    for (int w : g.neighbors(c))
        if (g.degree(w) >= 2) ++longLegs;
    return longLegs <= 2;
}

// Is there a simple path of odd length whose endpoints both have degree >= 3?
// Exact on bipartite graphs via side parity; otherwise a bounded
// backtracking search (conservative false on exhaustion).
inline bool odd_path_between_deg3(const Graph& g, std::uint64_t budget = 2'000'000) {
    std::vector<int> deg3;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 3) deg3.push_back(v);
    if (deg3.size() < 2) return false;
    // adjacency shortcut: an edge between two degree-3 vertices is an odd path
    for (const auto& [u, v] : g.edges())
        if (g.degree(u) >= 3 && g.degree(v) >= 3) return true;
    if (is_bipartite(g)) {
        // parity of every u-v path is fixed by the bipartition
        std::vector<int> side(g.vertex_count(), -1);
        for (int s = 0; s < g.vertex_count(); ++s) {
            if (side[s] >= 0) continue;
            side[s] = 0;
            std::vector<int> q = {s};
            for (size_t h = 0; h < q.size(); ++h)
                for (int w : g.neighbors(q[h]))
                    if (side[w] < 0) {
                        side[w] = 1 - side[q[h]];
                        q.push_back(w);
                    }
        }
        auto [comp, nc] = connected_components(g);
        (void)nc;
        for (size_t i = 0; i < deg3.size(); ++i)
            for (size_t j = i + 1; j < deg3.size(); ++j)
                if (comp[deg3[i]] == comp[deg3[j]] && side[deg3[i]] != side[deg3[j]]) return true;
        return false;
    }
    // non-bipartite: search for an odd simple path between degree-3 vertices
    std::uint64_t nodes = 0;
    std::vector<char> used(g.vertex_count(), 0);
    std::set<int> targets(deg3.begin(), deg3.end());
    std::function<bool(int, int)> dfs = [&](int v, int parity) -> bool {
        if (++nodes > budget) return false;
        if (parity == 1 && targets.count(v)) return true;
        used[v] = 1;
        for (int w : g.neighbors(v))
            if (!used[w] && dfs(w, 1 - parity)) {
                used[v] = 0;
                return true;
            }
        used[v] = 0;
        return false;
    };
    for (int s : deg3) {
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        for (int w : g.neighbors(s))
            if (dfs(w, 1)) return true;
        used[s] = 0;
    }
    return false;
}

// Recognition predicates plus per-k verdicts derived from them. Positive
// "unavoidable" verdicts fire only for the syntactically recognized 2-color
// host classes (paths, C4, radius-<=2 trees, generalized brooms); avoidable
// verdicts come from violated necessary conditions and the two coloring
// predicates, and propagate upward in k. Everything else stays unknown.
inline ClassificationReport classify(const Graph& h) {
    if (h.edge_count() > 10'000) throw SizeCapExceeded("classify: > 10000 edges");
    ClassificationReport rep;
    rep.bipartite = is_bipartite(h);
    rep.outerplanar = outerplanarity(h);
    rep.forest = is_forest(h);
    rep.caterpillar_forest = is_caterpillar_forest(h);
    rep.star_forest = is_star_forest(h);
    rep.is_path = is_path_graph(h);
    rep.is_c4 = is_c4_graph(h);
    rep.radius2_tree = is_radius2_tree(h);
    rep.gen_broom = is_generalized_broom(h);
    {
        std::vector<int> s;
        for (int v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) >= 4) s.push_back(v);
        std::set<int> sset(s.begin(), s.end());
        for (int v : s) {
            int d = 0;
            for (int w : h.neighbors(v))
                if (sset.count(w)) ++d;
            if (d >= 3) rep.pred_deg4_core = true;
        }
    }
    rep.pred_odd_path = odd_path_between_deg3(h);

    auto set = [&](int k, Verdict3 v, const std::string& why) {
        rep.verdict[k] = v;
        rep.reason[k] = why;
    };
    // k = 2
    if (rep.is_path) set(2, Verdict3::Unavoidable, "path");
    else if (rep.is_c4) set(2, Verdict3::Unavoidable, "C4");
    else if (rep.radius2_tree) set(2, Verdict3::Unavoidable, "tree of radius <= 2");
    else if (rep.gen_broom) set(2, Verdict3::Unavoidable, "generalized broom");
    else if (!rep.bipartite) set(2, Verdict3::Avoidable, "not bipartite");
    else if (rep.outerplanar == 0) set(2, Verdict3::Avoidable, "not outerplanar");
    // k = 3
    if (rep.verdict[2] == Verdict3::Avoidable)
        set(3, Verdict3::Avoidable, "2-avoidable: " + rep.reason[2]);
    else if (!rep.forest) set(3, Verdict3::Avoidable, "not a forest");
    else if (rep.pred_deg4_core)
        set(3, Verdict3::Avoidable, "degree->=4 vertices induce max degree >= 3");
    // k = 4
    if (rep.verdict[3] == Verdict3::Avoidable)
        set(4, Verdict3::Avoidable, "3-avoidable: " + rep.reason[3]);
    else if (!rep.caterpillar_forest) set(4, Verdict3::Avoidable, "not a caterpillar forest");
    else if (rep.pred_odd_path)
        set(4, Verdict3::Avoidable, "odd path between two degree->=3 vertices");
    // k = 5
    if (rep.verdict[4] == Verdict3::Avoidable)
        set(5, Verdict3::Avoidable, "4-avoidable: " + rep.reason[4]);
    else if (!rep.star_forest) set(5, Verdict3::Avoidable, "not a star forest");

    // consistency: monotone facts, and unavoidability at k forbids
    // avoidability at any k' <= k
    detail::require(!rep.star_forest || rep.caterpillar_forest, "classify: star => caterpillar");
    detail::require(!rep.caterpillar_forest || rep.forest, "classify: caterpillar => forest");
    for (int k = 2; k <= 5; ++k)
        if (rep.verdict[k] == Verdict3::Unavoidable)
            for (int j = 2; j <= k; ++j)
                detail::require(rep.verdict[j] != Verdict3::Avoidable,
                                "classify: contradictory verdicts");
    return rep;
}

}  // namespace ramsey
