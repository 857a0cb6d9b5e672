#pragma once

#include <vector>

#include "ecci/graph.hpp"
#include "ecci/rational.hpp"

namespace ecci {

// Eccentric connectivity index: sum of deg(v) * ecc(v) over all vertices.
inline long long eci(const Graph& /*g*/, const VertexMetrics& vm) {
    int128 total = 0;
    for (size_t v = 0; v < vm.ecc.size(); ++v) total += int128(vm.degree[v]) * vm.ecc[v];
    return narrow_to_i64(total);
}

inline long long eci(const Graph& g) { return eci(g, vertex_metrics(g)); }

// Total eccentricity: sum of ecc(v).
inline long long total_eccentricity(const VertexMetrics& vm) {
    int128 total = 0;
    for (long long e : vm.ecc) total += e;
    return narrow_to_i64(total);
}

inline long long total_eccentricity(const Graph& g) {
    return total_eccentricity(vertex_metrics(g));
}

// First Zagreb index: sum of squared degrees. Needs no connectivity.
inline long long zagreb_m1(const Graph& g) {
    int128 total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        total += int128(g.degree(v)) * g.degree(v);
    }
    return narrow_to_i64(total);
}

// Degree distance: sum of deg(v) * D(v) with D(v) the sum of distances from v.
inline long long degree_distance(const Graph& /*g*/, const VertexMetrics& vm) {
    int128 total = 0;
    for (size_t v = 0; v < vm.dist_sum.size(); ++v) {
        total += int128(vm.degree[v]) * vm.dist_sum[v];
    }
    return narrow_to_i64(total);
}

inline long long degree_distance(const Graph& g) { return degree_distance(g, vertex_metrics(g)); }

// The four derivative indices. eds is integral; the other three are exact
// rationals (per-vertex denominators are degrees or eccentricities).
struct DerivativeIndices {
    long long eds = 0; // sum ecc(v) * D(v)
    Rational aeds;     // sum ecc(v) * D(v) / deg(v)
    Rational ac;       // sum M(v) / ecc(v),   M(v) = product of neighbor degrees
    Rational sac;      // sum M(v) / ecc(v)^2
};

inline DerivativeIndices derivative_indices(const Graph& g, const VertexMetrics& vm) {
    const int n = g.vertex_count();
    if (n < 2) throw TooSmallError("derivative indices need n >= 2");
    DerivativeIndices out;
    int128 eds = 0;
    for (int v = 0; v < n; ++v) {
        eds += int128(vm.ecc[v]) * vm.dist_sum[v];
        out.aeds += Rational(checked_mul(vm.ecc[v], vm.dist_sum[v]), vm.degree[v]);
        long long mv = 1;
        for (int u : g.neighbors(v)) mv = checked_mul(mv, vm.degree[u]);
        out.ac += Rational(mv, vm.ecc[v]);
        out.sac += Rational(mv, checked_mul(vm.ecc[v], vm.ecc[v]));
    }
    out.eds = narrow_to_i64(eds);
    return out;
}

inline DerivativeIndices derivative_indices(const Graph& g) {
    return derivative_indices(g, vertex_metrics(g));
}

// Every invariant computed here for one graph.
struct IndexReport {
    long long eci = 0;
    long long zeta = 0;
    long long m1 = 0;
    long long dd = 0;
    long long eds = 0;
    Rational aeds;
    Rational ac;
    Rational sac;
};

inline IndexReport index_report(const Graph& g) {
    VertexMetrics vm = vertex_metrics(g);
    IndexReport r;
    r.eci = eci(g, vm);
    r.zeta = total_eccentricity(vm);
    r.m1 = zagreb_m1(g);
    r.dd = degree_distance(g, vm);
    DerivativeIndices di = derivative_indices(g, vm);
    r.eds = di.eds;
    r.aeds = di.aeds;
    r.ac = di.ac;
    r.sac = di.sac;
    return r;
}

} // namespace ecci
