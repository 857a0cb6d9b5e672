#pragma once

#include <vector>

#include "ecci/graph.hpp"
#include "ecci/rational.hpp"

namespace ecci {

// State of the linear eccentricity computation on a (weighted) tree.
// ddown[v] is the length of the longest path from v into its own subtree,
// dup[v] the length of the longest path from v whose first step is parent[v],
// and ecc[v] = max(ddown[v], dup[v]) the exact weighted eccentricity.
struct TreeEccState {
    int root = 0;
    std::vector<int> parent;      // -1 at the root
    std::vector<int> order;       // preorder of the iterative DFS
    std::vector<long long> ddown;
    std::vector<long long> dup;
    std::vector<long long> ecc;
};

// Downward pass: parent pointers, preorder, and ddown by processing the
// preorder in reverse. Entirely iterative, so million-vertex paths are fine.
inline TreeEccState compute_ddown(const Graph& t, int root) {
    if (classify(t) != GraphClass::tree) throw NotATreeError("compute_ddown requires a tree");
    const int n = t.vertex_count();
    if (root < 0 || root >= n) throw VertexOutOfRangeError("root out of range");
    TreeEccState st;
    st.root = root;
    st.parent.assign(static_cast<size_t>(n), -1);
    st.ddown.assign(static_cast<size_t>(n), 0);
    st.order.reserve(static_cast<size_t>(n));
    st.order.push_back(root);
    st.parent[root] = -1;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[root] = 1;
    for (size_t head = 0; head < st.order.size(); ++head) {
        int u = st.order[head];
        for (int v : t.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                st.parent[v] = u;
                st.order.push_back(v);
            }
        }
    }
    const bool weighted = t.weighted();
    for (size_t i = st.order.size(); i-- > 0;) {
        int v = st.order[i];
        auto nb = t.neighbors(v);
        for (size_t j = 0; j < nb.size(); ++j) {
            int c = nb[j];
            if (st.parent[c] == v) {
                long long w = weighted ? t.weights(v)[j] : 1;
                st.ddown[v] = std::max(st.ddown[v], w + st.ddown[c]);
            }
        }
    }
    return st;
}

// Upward pass in preorder. While visiting a vertex the best and second-best
// contributions of its children are found in one scan, so each child gets its
// "sibling maximum" in O(1); the whole pass is O(n) even on a star.
inline void compute_ecc_linear(const Graph& t, TreeEccState& st) {
    const int n = t.vertex_count();
    const bool weighted = t.weighted();
    st.dup.assign(static_cast<size_t>(n), 0);
    st.ecc.assign(static_cast<size_t>(n), 0);
    for (int u : st.order) {
        auto nb = t.neighbors(u);
        long long best1 = -1, best2 = -1;
        int best1_child = -1;
        for (size_t j = 0; j < nb.size(); ++j) {
            int c = nb[j];
            if (st.parent[c] != u) continue;
            long long val = (weighted ? t.weights(u)[j] : 1) + st.ddown[c];
            if (val > best1) {
                best2 = best1;
                best1 = val;
                best1_child = c;
            } else if (val > best2) {
                best2 = val;
            }
        }
        const long long up = st.dup[u];
        for (size_t j = 0; j < nb.size(); ++j) {
            int c = nb[j];
            if (st.parent[c] != u) continue;
            long long sibling = (c == best1_child) ? best2 : best1;
            if (sibling < 0) sibling = 0;
            st.dup[c] = (weighted ? t.weights(u)[j] : 1) + std::max(up, sibling);
        }
    }
    for (int v = 0; v < n; ++v) st.ecc[v] = std::max(st.ddown[v], st.dup[v]);
}

inline TreeEccState tree_ecc_state(const Graph& t, int root = 0) {
    TreeEccState st = compute_ddown(t, root);
    compute_ecc_linear(t, st);
    return st;
}

// Exact weighted eccentricity of every vertex in O(n).
inline std::vector<long long> tree_eccentricities(const Graph& t, int root = 0) {
    return tree_ecc_state(t, root).ecc;
}

// Eccentric connectivity index of a tree in O(n) time and memory.
inline long long eci_tree(const Graph& t) {
    TreeEccState st = tree_ecc_state(t, 0);
    int128 total = 0;
    for (int v = 0; v < t.vertex_count(); ++v) total += int128(t.degree(v)) * st.ecc[v];
    return narrow_to_i64(total);
}

} // namespace ecci
