#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "ecci/errors.hpp"

namespace ecci {

struct Edge {
    int u = 0;
    int v = 0;
    long long w = 1;
};

// Sentinel distance for vertices not reachable from the source.
inline constexpr long long kUnreachable = -1;

// Immutable simple undirected graph. Vertices are dense ids 0..n-1, adjacency
// is stored CSR-style with neighbor lists sorted ascending. Edge weights are
// strictly positive integers; a graph built without explicit weights is
// "unweighted" and every edge counts as 1. All member functions are const, so
// a Graph may be shared freely between threads.
class Graph {
public:
    Graph() = default;

    Graph(int n, const std::vector<Edge>& edges) : n_(n) {
        if (n < 0) throw VertexOutOfRangeError("vertex count must be nonnegative");
        for (const Edge& e : edges) {
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
                throw VertexOutOfRangeError("edge endpoint " + std::to_string(e.u) + "-" +
                                            std::to_string(e.v) + " outside 0.." +
                                            std::to_string(n - 1));
            }
            if (e.u == e.v) throw SelfLoopError("self-loop at vertex " + std::to_string(e.u));
            if (e.w <= 0) {
                throw NonpositiveWeightError("edge " + std::to_string(e.u) + "-" +
                                             std::to_string(e.v) + " has nonpositive weight");
            }
            if (e.w != 1) weighted_ = true;
        }
        m_ = static_cast<long long>(edges.size());
        build_adjacency(edges);
    }

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }
    bool weighted() const { return weighted_; }

    int degree(int v) const { return offset_[v + 1] - offset_[v]; }

    std::span<const int> neighbors(int v) const {
        return {nbr_.data() + offset_[v], nbr_.data() + offset_[v + 1]};
    }

    // Weights aligned with neighbors(v). Only stored for weighted graphs;
    // unweighted graphs keep no weight array and every edge counts as 1.
    std::span<const long long> weights(int v) const {
        return {wt_.data() + offset_[v], wt_.data() + offset_[v + 1]};
    }

    bool has_edge(int u, int v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Edges as (u < v) pairs in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<size_t>(m_));
        for (int u = 0; u < n_; ++u) {
            auto nb = neighbors(u);
            for (size_t i = 0; i < nb.size(); ++i) {
                if (nb[i] > u) {
                    out.push_back({u, nb[i], weighted_ ? wt_[offset_[u] + static_cast<int>(i)] : 1});
                }
            }
        }
        return out;
    }

private:
    void build_adjacency(const std::vector<Edge>& edges) {
        offset_.assign(static_cast<size_t>(n_) + 1, 0);
        for (const Edge& e : edges) {
            ++offset_[e.u + 1];
            ++offset_[e.v + 1];
        }
        for (int v = 0; v < n_; ++v) offset_[v + 1] += offset_[v];
        nbr_.resize(static_cast<size_t>(2) * edges.size());
        if (weighted_) wt_.resize(nbr_.size(), 1);
        std::vector<int> fill(offset_.begin(), offset_.end() - 1);
        for (const Edge& e : edges) {
            if (weighted_) {
                wt_[fill[e.u]] = e.w;
                wt_[fill[e.v]] = e.w;
            }
            nbr_[fill[e.u]++] = e.v;
            nbr_[fill[e.v]++] = e.u;
        }
        std::vector<std::pair<int, long long>> row;
        for (int v = 0; v < n_; ++v) {
            row.clear();
            for (int i = offset_[v]; i < offset_[v + 1]; ++i) {
                row.emplace_back(nbr_[i], weighted_ ? wt_[i] : 1);
            }
            std::sort(row.begin(), row.end());
            for (size_t i = 1; i < row.size(); ++i) {
                if (row[i].first == row[i - 1].first) {
                    throw DuplicateEdgeError("duplicate edge " + std::to_string(v) + "-" +
                                             std::to_string(row[i].first));
                }
            }
            for (size_t i = 0; i < row.size(); ++i) {
                nbr_[offset_[v] + static_cast<int>(i)] = row[i].first;
                if (weighted_) wt_[offset_[v] + static_cast<int>(i)] = row[i].second;
            }
        }
    }

    int n_ = 0;
    long long m_ = 0;
    bool weighted_ = false;
    std::vector<int> offset_{0};
    std::vector<int> nbr_;
    std::vector<long long> wt_;
};

inline Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

// Single-source shortest path distances. Plain BFS on unweighted graphs,
// Dijkstra otherwise. Unreachable vertices get kUnreachable.
inline std::vector<long long> bfs_distances(const Graph& g, int source) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n) throw VertexOutOfRangeError("bfs source out of range");
    std::vector<long long> dist(static_cast<size_t>(n), kUnreachable);
    dist[source] = 0;
    if (!g.weighted()) {
        std::vector<int> queue;
        queue.reserve(static_cast<size_t>(n));
        queue.push_back(source);
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (dist[v] == kUnreachable) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        return dist;
    }
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0, source);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (dist[u] != d) continue;
        auto nb = g.neighbors(u);
        auto ws = g.weights(u);
        for (size_t i = 0; i < nb.size(); ++i) {
            long long nd = d + ws[i];
            if (dist[nb[i]] == kUnreachable || nd < dist[nb[i]]) {
                dist[nb[i]] = nd;
                heap.emplace(nd, nb[i]);
            }
        }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](long long x) { return x == kUnreachable; });
}

// Per-vertex degree, eccentricity and distance sum for a connected graph.
struct VertexMetrics {
    std::vector<int> degree;
    std::vector<long long> ecc;
    std::vector<long long> dist_sum;
};

inline VertexMetrics vertex_metrics(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw DisconnectedError("metrics of the empty graph");
    VertexMetrics vm;
    vm.degree.resize(static_cast<size_t>(n));
    vm.ecc.resize(static_cast<size_t>(n));
    vm.dist_sum.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        vm.degree[v] = g.degree(v);
        auto d = bfs_distances(g, v);
        long long e = 0, s = 0;
        for (long long x : d) {
            if (x == kUnreachable) throw DisconnectedError("eccentricity of a disconnected graph");
            e = std::max(e, x);
            s += x;
        }
        vm.ecc[v] = e;
        vm.dist_sum[v] = s;
    }
    return vm;
}

struct MetricProfile {
    long long radius = 0;
    long long diameter = 0;
    std::vector<int> center; // vertices whose eccentricity equals the radius
};

inline MetricProfile metric_profile(const VertexMetrics& vm) {
    MetricProfile p;
    p.radius = *std::min_element(vm.ecc.begin(), vm.ecc.end());
    p.diameter = *std::max_element(vm.ecc.begin(), vm.ecc.end());
    for (size_t v = 0; v < vm.ecc.size(); ++v) {
        if (vm.ecc[v] == p.radius) p.center.push_back(static_cast<int>(v));
    }
    return p;
}

inline MetricProfile metric_profile(const Graph& g) { return metric_profile(vertex_metrics(g)); }

enum class GraphClass { tree, unicyclic, bicyclic, general };

inline const char* graph_class_name(GraphClass c) {
    switch (c) {
        case GraphClass::tree: return "tree";
        case GraphClass::unicyclic: return "unicyclic";
        case GraphClass::bicyclic: return "bicyclic";
        case GraphClass::general: return "general";
    }
    return "?";
}

// Cycle-space classification of a connected graph by m - n + 1.
inline GraphClass classify(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError("classify requires a connected graph");
    long long excess = g.edge_count() - g.vertex_count();
    if (excess == -1) return GraphClass::tree;
    if (excess == 0) return GraphClass::unicyclic;
    if (excess == 1) return GraphClass::bicyclic;
    return GraphClass::general;
}

// Length of the unique cycle of a unicyclic graph, found by repeatedly
// deleting degree-1 vertices.
inline int girth_unicyclic(const Graph& g) {
    if (classify(g) != GraphClass::unicyclic) {
        throw NotUnicyclicError("girth_unicyclic requires a unicyclic graph");
    }
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) stack.push_back(v);
    }
    int alive = n;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        --alive;
        deg[v] = 0;
        for (int u : g.neighbors(v)) {
            if (deg[u] > 1 && --deg[u] == 1) stack.push_back(u);
        }
    }
    return alive;
}

// Vertices still standing after deleting degree-1 vertices to exhaustion;
// for a unicyclic graph this is exactly the cycle.
inline std::vector<int> cycle_vertices_unicyclic(const Graph& g) {
    if (classify(g) != GraphClass::unicyclic) {
        throw NotUnicyclicError("cycle extraction requires a unicyclic graph");
    }
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) stack.push_back(v);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        deg[v] = 0;
        for (int u : g.neighbors(v)) {
            if (deg[u] > 1 && --deg[u] == 1) stack.push_back(u);
        }
    }
    std::vector<int> cycle;
    for (int v = 0; v < n; ++v) {
        if (deg[v] >= 2) cycle.push_back(v);
    }
    return cycle;
}

} // namespace ecci
