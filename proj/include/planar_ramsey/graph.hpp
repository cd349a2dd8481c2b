#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

// Undirected edge, always normalized so that first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop edge " + std::to_string(u));
    return u < v ? Edge{u, v} : Edge{v, u};
}

class SizeCapExceeded : public std::runtime_error {
public:
    explicit SizeCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline void require(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}
}  // namespace detail

// Simple undirected graph on vertices 0..n-1. No self-loops, no parallel
// edges. Immutable after construction; colorings and orientations are
// separate overlay objects keyed by edge index.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges, std::map<int, std::string> labels = {})
        : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
        if (n_ < 0) throw std::invalid_argument("negative vertex count");
        for (auto& [u, v] : edges_) {
            if (u == v) throw std::invalid_argument("self-loop edge");
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n_)
                throw std::invalid_argument("edge endpoint out of range: " +
                                            std::to_string(u) + "-" + std::to_string(v));
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("parallel edge");
        for (auto& [v, s] : labels_)
            if (v < 0 || v >= n_) throw std::invalid_argument("label vertex out of range");
        adj_.assign(n_, {});
        for (const auto& [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::map<int, std::string>& labels() const { return labels_; }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    // Index of edge {u,v} in the sorted edge list, or -1.
    int edge_index(int u, int v) const {
        if (u == v) return -1;
        Edge e = u < v ? Edge{u, v} : Edge{v, u};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    const Edge& edge_at(int idx) const { return edges_.at(idx); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_ && labels_ == o.labels_;
    }

    // Vertices labeled with exactly `label`.
    std::vector<int> vertices_with_label(const std::string& label) const {
        std::vector<int> out;
        for (const auto& [v, s] : labels_)
            if (s == label) out.push_back(v);
        return out;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::map<int, std::string> labels_;
};

// Union-find over a fixed vertex range.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

// True iff the subgraph induced by `part` is acyclic with max degree <= 2,
// i.e. a disjoint union of paths.
inline bool is_linear_forest(const Graph& g, const std::vector<int>& part) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : part) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("is_linear_forest: vertex out of range");
        if (in[v]) throw std::invalid_argument("is_linear_forest: repeated vertex");
        in[v] = 1;
    }
    DisjointSets ds(g.vertex_count());
    std::vector<int> deg(g.vertex_count(), 0);
    for (int v : part) {
        for (int w : g.neighbors(v)) {
            if (w > v || !in[w]) continue;
            if (++deg[v] > 2 || ++deg[w] > 2) return false;
            if (!ds.unite(v, w)) return false;  // cycle
        }
    }
    // degrees counted once per induced edge above; recount properly
    std::fill(deg.begin(), deg.end(), 0);
    for (int v : part)
        for (int w : g.neighbors(v))
            if (in[w]) ++deg[v];
    for (int v : part)
        if (deg[v] > 2) return false;
    return true;
}

// Connected components; returns component id per vertex and the count.
inline std::pair<std::vector<int>, int> connected_components(const Graph& g) {
    std::vector<int> comp(g.vertex_count(), -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    return {comp, c};
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return connected_components(g).second == 1;
}

// True iff g is acyclic.
inline bool is_forest(const Graph& g) {
    DisjointSets ds(g.vertex_count());
    for (const auto& [u, v] : g.edges())
        if (!ds.unite(u, v)) return false;
    return true;
}

inline bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// BFS distances from a single source (-1 for unreachable).
inline std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> queue;
    dist[source] = 0;
    queue.push_back(source);
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

}  // namespace ramsey
