#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>

#include "planar_ramsey/coloring.hpp"

namespace ramsey {

constexpr std::uint64_t kNoBudget = std::numeric_limits<std::uint64_t>::max();

enum class DetectStatus { Found, NotFound, BudgetExceeded };

struct DetectResult {
    DetectStatus status = DetectStatus::NotFound;
    Embedding embedding;        // valid only when status == Found
    std::uint64_t nodes = 0;    // candidate assignments tried

    bool found() const { return status == DetectStatus::Found; }
    bool exact_not_found() const { return status == DetectStatus::NotFound; }
};

namespace detail {

// Pattern vertex order: root = max-degree vertex (smallest index wins ties),
// then BFS; forests are processed component by component in descending
// root-degree order. Every non-root vertex has some earlier neighbor, which
// the search uses for candidate generation.
struct PatternOrder {
    std::vector<int> order;            // pattern vertices in assignment order
    std::vector<int> anchor;           // index into `order` of one earlier neighbor (-1 for roots)
    std::vector<std::vector<int>> earlier;  // per order position: positions of all earlier pattern neighbors
};

inline PatternOrder pattern_order(const Graph& h) {
    int n = h.vertex_count();
    PatternOrder po;
    std::vector<int> posOf(n, -1);
    std::vector<char> visited(n, 0);
    std::vector<std::pair<int, int>> roots;  // (-degree, vertex)
    auto [comp, ncomp] = connected_components(h);
    std::vector<int> best(ncomp, -1);
    for (int v = 0; v < n; ++v) {
        int c = comp[v];
        if (best[c] < 0 || h.degree(v) > h.degree(best[c])) best[c] = v;
    }
    for (int c = 0; c < ncomp; ++c) roots.push_back({-h.degree(best[c]), best[c]});
    std::sort(roots.begin(), roots.end());
    for (auto [negdeg, r] : roots) {
        (void)negdeg;
        std::vector<int> queue = {r};
        visited[r] = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            posOf[v] = static_cast<int>(po.order.size());
            po.order.push_back(v);
            for (int w : h.neighbors(v))
                if (!visited[w]) {
                    visited[w] = 1;
                    queue.push_back(w);
                }
        }
    }
    int m = static_cast<int>(po.order.size());
    po.anchor.assign(m, -1);
    po.earlier.assign(m, {});
    for (int i = 0; i < m; ++i) {
        int v = po.order[i];
        for (int w : h.neighbors(v)) {
            int j = posOf[w];
            if (j < i) {
                po.earlier[i].push_back(j);
                if (po.anchor[i] < 0 || j < po.anchor[i]) po.anchor[i] = j;
            }
        }
    }
    return po;
}

// Sound bottom-up feasibility filter for forest patterns: feas[p][v] is true
// only if the subtree of p (rooted per the BFS order) could embed at v with
// one extra slot reserved for p's parent edge. Injectivity across branches
// is relaxed, so "false" is a proof of impossibility while "true" is merely
// permission to try. Matching of children into candidate neighbors is exact
// (augmenting paths), so star-like degrees prune tightly.
struct ForestFeasibility {
    std::vector<std::vector<char>> feas;  // [pattern vertex][host vertex]
    bool enabled = false;
};

// Kuhn's augmenting-path matching; returns true iff every left vertex can be
// matched. Left sides here are pattern children lists, so depths are tiny.
inline bool bipartite_match(const std::vector<std::vector<int>>& cand, int n_right,
                            std::vector<int>& right_owner) {
    right_owner.assign(n_right, -1);
    std::vector<char> used;
    std::function<bool(int)> kuhn = [&](int l) -> bool {
        for (int r : cand[l]) {
            if (used[r]) continue;
            used[r] = 1;
            if (right_owner[r] < 0 || kuhn(right_owner[r])) {
                right_owner[r] = l;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < static_cast<int>(cand.size()); ++l) {
        used.assign(n_right, 0);
        if (!kuhn(l)) return false;
    }
    return true;
}

inline ForestFeasibility forest_feasibility(const Graph& g, const ColorView& cv, int color,
                                            const Graph& h, const PatternOrder& po) {
    ForestFeasibility ff;
    // the matching DP pays off for large tree patterns; plain backtracking
    // beats it on small ones
    if (h.vertex_count() <= 8 || !is_forest(h)) return ff;
    ff.enabled = true;
    int n = g.vertex_count(), m = h.vertex_count();
    ff.feas.assign(m, std::vector<char>(n, 0));
    // children per BFS order
    std::vector<std::vector<int>> children(m);
    for (int i = 0; i < m; ++i) {
        if (po.anchor[i] >= 0) children[po.order[po.anchor[i]]].push_back(po.order[i]);
    }
    // process pattern vertices in reverse BFS order (leaves first)
    for (int i = m - 1; i >= 0; --i) {
        int p = po.order[i];
        int need = h.degree(p);
        const auto& kids = children[p];
        for (int v = 0; v < n; ++v) {
            if (cv.color_degree(v, color) < need) continue;
            if (kids.empty()) {
                ff.feas[p][v] = 1;
                continue;
            }
            // match kids into distinct feasible color-neighbors of v
            std::vector<std::vector<int>> cand(kids.size());
            const auto& nbrs = cv.adj[color][v];
            bool hopeless = false;
            for (size_t ki = 0; ki < kids.size(); ++ki) {
                for (size_t wi = 0; wi < nbrs.size(); ++wi)
                    if (ff.feas[kids[ki]][nbrs[wi]]) cand[ki].push_back(static_cast<int>(wi));
                if (cand[ki].empty()) {
                    hopeless = true;
                    break;
                }
            }
            if (hopeless) continue;
            std::vector<int> owner;
            if (bipartite_match(cand, static_cast<int>(nbrs.size()), owner)) ff.feas[p][v] = 1;
        }
    }
    return ff;
}

struct SearchState {
    const Graph* g = nullptr;
    const Graph* h = nullptr;
    const ColorView* cv = nullptr;
    int color = 0;
    const PatternOrder* po = nullptr;
    const ForestFeasibility* ff = nullptr;
    std::vector<int> image;      // pattern vertex -> host vertex or -1
    std::vector<char> used;      // host vertex used
    std::uint64_t nodes = 0;
    std::uint64_t budget = kNoBudget;
    bool out_of_budget = false;
};

// Forward feasibility at assignment time: the not-yet-assigned pattern
// children of p must match into distinct unused feasible color-neighbors of
// v. Sound (optimistic about later conflicts), so pruning preserves
// exactness of NotFound.
inline bool forward_children_ok(SearchState& st, int p, int v) {
    const Graph& h = *st.h;
    std::vector<int> kids;
    for (int w : h.neighbors(p))
        if (st.image[w] < 0) kids.push_back(w);
    if (kids.empty()) return true;
    const auto& nbrs = st.cv->adj[st.color][v];
    std::vector<std::vector<int>> cand(kids.size());
    for (size_t ki = 0; ki < kids.size(); ++ki) {
        for (size_t wi = 0; wi < nbrs.size(); ++wi) {
            int host = nbrs[wi];
            if (st.used[host]) continue;
            if (st.ff->enabled && !st.ff->feas[kids[ki]][host]) continue;
            cand[ki].push_back(static_cast<int>(wi));
        }
        if (cand[ki].empty()) return false;
    }
    std::vector<int> owner;
    return bipartite_match(cand, static_cast<int>(nbrs.size()), owner);
}

inline bool extend(SearchState& st, int pos) {
    const PatternOrder& po = *st.po;
    if (pos == static_cast<int>(po.order.size())) return true;
    int p = po.order[pos];
    int need = st.h->degree(p);

    auto try_candidate = [&](int v) -> int {
        // returns 1 found, 0 keep trying, -1 abort on budget
        if (st.used[v]) return 0;
        if (st.cv->color_degree(v, st.color) < need) return 0;
        if (st.ff->enabled && !st.ff->feas[p][v]) return 0;
        for (int j : po.earlier[pos]) {
            int hostEarlier = st.image[po.order[j]];
            // consistency: earlier pattern neighbors must be color-adjacent
            int ei = st.g->edge_index(hostEarlier, v);
            if (ei < 0 || st.cv->color_by_edge[ei] != st.color) return 0;
        }
        if (++st.nodes > st.budget) {
            st.out_of_budget = true;
            return -1;
        }
        if (st.ff->enabled && !forward_children_ok(st, p, v)) return 0;
        st.image[p] = v;
        st.used[v] = 1;
        if (extend(st, pos + 1)) return 1;
        st.image[p] = -1;
        st.used[v] = 0;
        return st.out_of_budget ? -1 : 0;
    };

    if (po.anchor[pos] >= 0) {
        int anchorHost = st.image[po.order[po.anchor[pos]]];
        for (int v : st.cv->adj[st.color][anchorHost]) {
            int r = try_candidate(v);
            if (r != 0) return r == 1;
        }
    } else {
        for (int v = 0; v < st.g->vertex_count(); ++v) {
            int r = try_candidate(v);
            if (r != 0) return r == 1;
        }
    }
    return false;
}

inline DetectResult find_mono_copy_impl(const Graph& g, const ColorView& cv, int color,
                                        const Graph& h, std::uint64_t budget) {
    DetectResult res;
    if (h.vertex_count() == 0) throw std::invalid_argument("find_mono_copy: empty pattern");
    if (color < 0 || color >= cv.k) throw std::invalid_argument("find_mono_copy: bad color");
    if (h.vertex_count() > g.vertex_count()) return res;  // NotFound

    // Fast path: single-vertex or star-shaped patterns reduce to a degree scan.
    if (h.edge_count() == 0) {
        if (h.vertex_count() <= g.vertex_count()) {
            res.status = DetectStatus::Found;
            for (int v = 0; v < h.vertex_count(); ++v) res.embedding.map.push_back(v);
        }
        return res;
    }
    bool isStar = false;
    int starCenter = -1;
    if (is_connected(h) && h.edge_count() == h.vertex_count() - 1) {
        for (int v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) == h.vertex_count() - 1) {
                isStar = true;
                starCenter = v;
                break;
            }
    }
    if (isStar) {
        int leaves = h.vertex_count() - 1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            ++res.nodes;
            if (cv.color_degree(v, color) >= leaves) {
                res.status = DetectStatus::Found;
                res.embedding.map.assign(h.vertex_count(), -1);
                res.embedding.map[starCenter] = v;
                int li = 0;
                for (int p = 0; p < h.vertex_count(); ++p)
                    if (p != starCenter) res.embedding.map[p] = cv.adj[color][v][li++];
                return res;
            }
        }
        return res;
    }

    PatternOrder po = pattern_order(h);
    ForestFeasibility ff = forest_feasibility(g, cv, color, h, po);
    SearchState st;
    st.g = &g;
    st.h = &h;
    st.cv = &cv;
    st.color = color;
    st.po = &po;
    st.ff = &ff;
    st.image.assign(h.vertex_count(), -1);
    st.used.assign(g.vertex_count(), 0);
    st.budget = budget;
    bool found = extend(st, 0);
    res.nodes = st.nodes;
    if (found) {
        res.status = DetectStatus::Found;
        res.embedding.map = st.image;
    } else if (st.out_of_budget) {
        res.status = DetectStatus::BudgetExceeded;
    }
    return res;
}

}  // namespace detail

// Searches the color class of `color` for an injective copy of pattern h.
// Backtracking over pattern vertices ordered max-degree-first then BFS, with
// degree, connectivity, and (for forests) matching-based feasibility
// pruning. NotFound is exact: the full search space was exhausted.
inline DetectResult find_mono_copy(const Graph& g, const EdgeColoring& c, int color,
                                   const Graph& h, std::uint64_t budget = kNoBudget) {
    ColorView cv(g, c);
    return detail::find_mono_copy_impl(g, cv, color, h, budget);
}

inline DetectResult find_mono_copy(const Graph& g, const ColorView& cv, int color, const Graph& h,
                                   std::uint64_t budget = kNoBudget) {
    return detail::find_mono_copy_impl(g, cv, color, h, budget);
}

// Every 4-cycle of g exactly once, as (a, b, c, d) with a the smallest
// vertex, c its opposite, and b < d the two in between.
inline std::vector<std::array<int, 4>> enumerate_c4s(const Graph& g) {
    std::vector<std::array<int, 4>> out;
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        for (int c = a + 1; c < n; ++c) {
            std::vector<int> common;
            const auto &na = g.neighbors(a), &nc = g.neighbors(c);
            std::set_intersection(na.begin(), na.end(), nc.begin(), nc.end(),
                                  std::back_inserter(common));
            // keep only candidates above a so each cycle appears once
            std::vector<int> cand;
            for (int w : common)
                if (w > a) cand.push_back(w);
            for (size_t i = 0; i < cand.size(); ++i)
                for (size_t j = i + 1; j < cand.size(); ++j)
                    out.push_back({a, cand[i], c, cand[j]});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Longest path found within budget in the color class, as a vertex list.
// Exhaustive DFS; `exact` reports whether the search completed.
struct LongestPathResult {
    std::vector<int> path;
    bool exact = true;
    std::uint64_t nodes = 0;
};

inline LongestPathResult longest_mono_path(const Graph& g, const EdgeColoring& c, int color,
                                           std::uint64_t budget = kNoBudget) {
    ColorView cv(g, c);
    LongestPathResult res;
    std::vector<int> cur;
    std::vector<char> used(g.vertex_count(), 0);
    std::function<void(int)> dfs = [&](int v) {
        if (res.nodes++ > budget) {
            res.exact = false;
            return;
        }
        cur.push_back(v);
        used[v] = 1;
        if (cur.size() > res.path.size()) res.path = cur;
        for (int w : cv.adj[color][v])
            if (!used[w]) dfs(w);
        used[v] = 0;
        cur.pop_back();
    };
    for (int v = 0; v < g.vertex_count(); ++v) dfs(v);
    return res;
}

}  // namespace ramsey
