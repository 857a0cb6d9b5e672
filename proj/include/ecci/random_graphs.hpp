#pragma once

#include <algorithm>
#include <queue>
#include <random>
#include <vector>

#include "ecci/graph.hpp"

namespace ecci {

// Uniform random labeled tree via Pruefer decoding.
inline Graph random_tree(int n, std::mt19937_64& rng) {
    if (n < 1) throw BadParamsError("random_tree requires n >= 1");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1, 1}});
    std::vector<int> seq(static_cast<size_t>(n - 2));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int& s : seq) s = pick(rng);
    std::vector<int> degree(static_cast<size_t>(n), 1);
    for (int s : seq) ++degree[s];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.push(v);
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n - 1));
    for (int s : seq) {
        int l = leaves.top();
        leaves.pop();
        edges.push_back({l, s, 1});
        if (--degree[s] == 1) leaves.push(s);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.push_back({a, b, 1});
    return Graph(n, edges);
}

inline Graph random_weighted_tree(int n, long long max_weight, std::mt19937_64& rng) {
    Graph t = random_tree(n, rng);
    std::uniform_int_distribution<long long> w(1, max_weight);
    std::vector<Edge> edges = t.edges();
    for (Edge& e : edges) e.w = w(rng);
    return Graph(n, edges);
}

// Random spanning tree plus `extra` edges drawn from the non-edges.
inline Graph random_connected_graph(int n, int extra, std::mt19937_64& rng) {
    Graph t = random_tree(n, rng);
    std::vector<Edge> edges = t.edges();
    std::vector<std::pair<int, int>> non_edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!t.has_edge(u, v)) non_edges.emplace_back(u, v);
        }
    }
    std::shuffle(non_edges.begin(), non_edges.end(), rng);
    for (int i = 0; i < extra && i < static_cast<int>(non_edges.size()); ++i) {
        edges.push_back({non_edges[i].first, non_edges[i].second, 1});
    }
    return Graph(n, edges);
}

} // namespace ecci
