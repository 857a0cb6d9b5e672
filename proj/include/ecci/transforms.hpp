#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "ecci/graph.hpp"
#include "ecci/indices.hpp"

namespace ecci {

// A pendant path hanging off vertex w: interior vertices have degree 2 and the
// far end is a leaf. `vertices` runs outward from w (w itself excluded).
struct PendantPath {
    int start = -1; // neighbor of w the path begins with
    std::vector<int> vertices;
    long long length() const { return static_cast<long long>(vertices.size()); }
};

struct NeighborSplit {
    std::vector<PendantPath> paths; // pendant paths at w, in neighbor order
    std::vector<int> other;         // neighbors that do not start a pendant path
};

// Classifies every neighbor of w as the start of a pendant path or not.
// Walking from w into u must stay on degree-2 vertices and end in a leaf
// without returning to w.
inline NeighborSplit split_neighbors(const Graph& g, int w) {
    NeighborSplit out;
    for (int u : g.neighbors(w)) {
        PendantPath path;
        path.start = u;
        int prev = w, cur = u;
        bool pendant = true;
        while (true) {
            path.vertices.push_back(cur);
            int next = -1;
            int fanout = 0;
            for (int x : g.neighbors(cur)) {
                if (x == prev) continue;
                ++fanout;
                next = x;
            }
            if (fanout == 0) break; // reached a leaf
            if (fanout > 1 || next == w) {
                pendant = false;
                break;
            }
            prev = cur;
            cur = next;
        }
        if (pendant) out.paths.push_back(std::move(path));
        else out.other.push_back(u);
    }
    return out;
}

// Base graph with two pendant paths of lengths p >= q >= 1 at vertex w.
struct PendantPathPair {
    Graph base;
    int w = 0;
    long long p = 1;
    long long q = 1;
};

// base plus two disjoint pendant paths of lengths p and q at w. New vertices
// are appended after the base ids, p-path first.
inline Graph attach_pendant_paths(const Graph& base, int w, long long p, long long q) {
    const int n = base.vertex_count();
    if (w < 0 || w >= n) throw VertexOutOfRangeError("attachment vertex out of range");
    if (p < 0 || q < 0) throw BadConfigError("path lengths must be nonnegative");
    std::vector<Edge> edges = base.edges();
    int next = n;
    for (long long lens : {p, q}) {
        int prev = w;
        for (long long s = 0; s < lens; ++s) {
            edges.push_back({prev, next, 1});
            prev = next++;
        }
    }
    return Graph(n + static_cast<int>(p + q), edges);
}

// One step of the path-shift: G(p, q) -> G(p+1, q-1). Strictly increases the
// eccentric connectivity index whenever the base is nontrivial and p >= q >= 1.
inline Graph pi_shift(const PendantPathPair& cfg) {
    if (cfg.base.vertex_count() < 2) throw BadConfigError("pi_shift needs a nontrivial base");
    if (!is_connected(cfg.base)) throw BadConfigError("pi_shift base must be connected");
    if (cfg.q < 1 || cfg.p < cfg.q) throw BadConfigError("pi_shift requires p >= q >= 1");
    return attach_pendant_paths(cfg.base, cfg.w, cfg.p + 1, cfg.q - 1);
}

namespace detail {

// Removes the given vertices and relabels the rest, preserving relative order.
inline Graph remove_vertices(const Graph& g, const std::vector<int>& victims) {
    std::vector<char> gone(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : victims) gone[v] = 1;
    std::vector<int> newid(static_cast<size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!gone[v]) newid[v] = next++;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (!gone[e.u] && !gone[e.v]) edges.push_back({newid[e.u], newid[e.v], e.w});
    }
    return Graph(next, edges);
}

} // namespace detail

// Structural form of the shift: finds the two pendant paths at w itself.
// With zero, one, or three or more pendant paths present this is ambiguous or
// undefined and throws BadConfig; use the explicit-selection overload then.
inline Graph pi_shift_at(const Graph& g, int w, int grow_start, int shrink_start) {
    NeighborSplit split = split_neighbors(g, w);
    const PendantPath* grow = nullptr;
    const PendantPath* shrink = nullptr;
    for (const PendantPath& p : split.paths) {
        if (p.start == grow_start) grow = &p;
        if (p.start == shrink_start) shrink = &p;
    }
    if (grow == nullptr || shrink == nullptr || grow_start == shrink_start) {
        throw BadConfigError("selected neighbors do not start distinct pendant paths");
    }
    if (grow->length() < shrink->length()) {
        throw BadConfigError("pi_shift must grow the longer path");
    }
    long long p = grow->length(), q = shrink->length();
    std::vector<int> victims = grow->vertices;
    victims.insert(victims.end(), shrink->vertices.begin(), shrink->vertices.end());
    std::sort(victims.begin(), victims.end());
    int base_w = w - static_cast<int>(std::count_if(victims.begin(), victims.end(),
                                                    [w](int v) { return v < w; }));
    Graph base = detail::remove_vertices(g, victims);
    return attach_pendant_paths(base, base_w, p + 1, q - 1);
}

inline Graph pi_shift_at(const Graph& g, int w) {
    NeighborSplit split = split_neighbors(g, w);
    if (split.paths.size() < 2) {
        throw BadConfigError("pi_shift needs two pendant paths at the chosen vertex");
    }
    if (split.paths.size() > 2) {
        throw BadConfigError("more than two pendant paths at vertex; select explicitly");
    }
    const PendantPath& a = split.paths[0];
    const PendantPath& b = split.paths[1];
    bool a_longer = a.length() >= b.length();
    return pi_shift_at(g, w, a_longer ? a.start : b.start, a_longer ? b.start : a.start);
}

struct DeltaResult {
    Graph tree;
    int w = -1;                  // vertex the paths were re-attached to
    int moved_paths = 0;         // m - 1
    long long moved_length_sum = 0; // n_1 + ... + n_{m-1}
};

// Re-attaches all but the longest pendant path at v to v's remaining
// neighbor. When v has only pendant-path neighbors, the start of the longest
// path plays the role of that neighbor. Ties keep the smallest-id path start.
inline DeltaResult delta_transform_info(const Graph& t, int v) {
    if (classify(t) != GraphClass::tree) throw NotATreeError("delta transform requires a tree");
    if (v < 0 || v >= t.vertex_count()) throw VertexOutOfRangeError("vertex out of range");
    if (t.degree(v) < 3) throw NotApplicableError("delta transform needs a branching vertex");
    NeighborSplit split = split_neighbors(t, v);
    if (split.other.size() > 1) {
        throw NotApplicableError("vertex has more than one non-path neighbor");
    }
    int w;
    std::vector<PendantPath> paths = split.paths;
    auto longest = [](const std::vector<PendantPath>& ps) {
        size_t best = 0;
        for (size_t i = 1; i < ps.size(); ++i) {
            if (ps[i].length() > ps[best].length() ||
                (ps[i].length() == ps[best].length() && ps[i].start < ps[best].start)) {
                best = i;
            }
        }
        return best;
    };
    if (split.other.size() == 1) {
        w = split.other[0];
    } else {
        size_t idx = longest(paths);
        w = paths[idx].start;
        paths.erase(paths.begin() + static_cast<ptrdiff_t>(idx));
    }
    if (paths.size() < 2) throw NotApplicableError("need at least two pendant paths to move");
    size_t keep = longest(paths);
    DeltaResult res{t, w, 0, 0};
    std::vector<Edge> edges = t.edges();
    for (size_t i = 0; i < paths.size(); ++i) {
        if (i == keep) continue;
        for (Edge& e : edges) {
            if ((e.u == v && e.v == paths[i].start) || (e.v == v && e.u == paths[i].start)) {
                e = {std::min(w, paths[i].start), std::max(w, paths[i].start), e.w};
                break;
            }
        }
        ++res.moved_paths;
        res.moved_length_sum += paths[i].length();
    }
    res.tree = Graph(t.vertex_count(), edges);
    return res;
}

inline Graph delta_transform(const Graph& t, int v) { return delta_transform_info(t, v).tree; }

namespace detail {

inline int min_center_vertex(const VertexMetrics& vm) {
    long long radius = *std::min_element(vm.ecc.begin(), vm.ecc.end());
    for (size_t v = 0; v < vm.ecc.size(); ++v) {
        if (vm.ecc[v] == radius) return static_cast<int>(v);
    }
    return 0;
}

} // namespace detail

// Vertices where the strict-decrease hypotheses of the delta transform hold:
// non-central branching vertices at maximum depth from the center (so only
// pendant paths hang below them). Sorted ascending.
inline std::vector<int> delta_theorem_vertices(const Graph& t) {
    if (classify(t) != GraphClass::tree) throw NotATreeError("requires a tree");
    VertexMetrics vm = vertex_metrics(t);
    long long radius = *std::min_element(vm.ecc.begin(), vm.ecc.end());
    std::vector<long long> depth = bfs_distances(t, detail::min_center_vertex(vm));
    long long deepest = -1;
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (vm.degree[v] >= 3) deepest = std::max(deepest, depth[v]);
    }
    std::vector<int> out;
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (vm.degree[v] >= 3 && depth[v] == deepest && vm.ecc[v] != radius) out.push_back(v);
    }
    return out;
}

struct RotateResult {
    Graph tree;
    int u = -1; // vertex that gained the leaf
    int v = -1; // former neighbor of the leaf
    int w = -1; // the rotated leaf
};

// Leaf rotation toward the root: with the tree rooted at a center vertex,
// u is the vertex nearest the root with degree < delta_cap and w a deepest
// pendant vertex whose neighbor v satisfies ecc(v) > ecc(u). The edge vw is
// replaced by uw, strictly decreasing the eccentric connectivity index.
// Ties are broken by smallest vertex id.
inline RotateResult rotate_deepest_info(const Graph& t, long long delta_cap) {
    if (classify(t) != GraphClass::tree) throw NotATreeError("rotate requires a tree");
    const int n = t.vertex_count();
    VertexMetrics vm = vertex_metrics(t);
    std::vector<long long> depth = bfs_distances(t, detail::min_center_vertex(vm));
    int u = -1;
    for (int v = 0; v < n; ++v) {
        if (vm.degree[v] < delta_cap && (u == -1 || depth[v] < depth[u])) u = v;
    }
    if (u == -1) throw NoEligiblePairError("every vertex already has degree >= cap");
    long long deepest = -1;
    for (int v = 0; v < n; ++v) {
        if (vm.degree[v] == 1) deepest = std::max(deepest, depth[v]);
    }
    int w = -1, v_of_w = -1;
    for (int x = 0; x < n; ++x) {
        if (vm.degree[x] != 1 || depth[x] != deepest || x == u) continue;
        int vx = t.neighbors(x)[0];
        if (vx == u) continue;
        if (vm.ecc[vx] > vm.ecc[u]) {
            w = x;
            v_of_w = vx;
            break; // ids ascend, so the first hit is the smallest
        }
    }
    if (w == -1) throw NoEligiblePairError("no deepest leaf has ecc(v) > ecc(u)");
    std::vector<Edge> edges;
    for (const Edge& e : t.edges()) {
        if ((e.u == v_of_w && e.v == w) || (e.u == w && e.v == v_of_w)) continue;
        edges.push_back(e);
    }
    edges.push_back({std::min(u, w), std::max(u, w), 1});
    return {Graph(n, edges), u, v_of_w, w};
}

inline Graph rotate_deepest(const Graph& t, long long delta_cap) {
    return rotate_deepest_info(t, delta_cap).tree;
}

} // namespace ecci
