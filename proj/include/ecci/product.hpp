#pragma once

#include <vector>

#include "ecci/graph.hpp"
#include "ecci/indices.hpp"

namespace ecci {

inline constexpr long long kMaxProductVertices = 1'000'000;

// Cartesian product G1 x G2. Vertex (i, j) gets the row-major id i*|G2| + j;
// two vertices are adjacent when they agree in one coordinate and differ by an
// edge of the other factor. Factors must be unweighted.
inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
    if (g1.weighted() || g2.weighted()) {
        throw BadParamsError("cartesian product is defined for unweighted factors");
    }
    const long long n1 = g1.vertex_count();
    const long long n2 = g2.vertex_count();
    if (n1 * n2 > kMaxProductVertices) {
        throw TooLargeError("product would exceed the vertex guard");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n1 * g2.edge_count() + n2 * g1.edge_count()));
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            int u = i * static_cast<int>(n2) + j;
            for (int jj : g2.neighbors(j)) {
                if (jj > j) edges.push_back({u, i * static_cast<int>(n2) + jj, 1});
            }
            for (int ii : g1.neighbors(i)) {
                if (ii > i) edges.push_back({u, ii * static_cast<int>(n2) + j, 1});
            }
        }
    }
    return Graph(static_cast<int>(n1 * n2), edges);
}

// Ingredients of the product formula
//   eci(G1 x G2) = |G2| eci(G1) + |G1| eci(G2) + 2 ||G2|| zeta(G1) + 2 ||G1|| zeta(G2),
// which follows from eccentricities and degrees both being coordinate sums.
struct ProductDecomposition {
    long long n1 = 0, n2 = 0;
    long long m1 = 0, m2 = 0;
    long long eci1 = 0, eci2 = 0;
    long long zeta1 = 0, zeta2 = 0;

    long long value() const {
        int128 v = int128(n2) * eci1 + int128(n1) * eci2 + int128(2) * m2 * zeta1 +
                   int128(2) * m1 * zeta2;
        return narrow_to_i64(v);
    }
};

inline ProductDecomposition decompose_product(const Graph& g1, const Graph& g2) {
    VertexMetrics vm1 = vertex_metrics(g1);
    VertexMetrics vm2 = vertex_metrics(g2);
    ProductDecomposition d;
    d.n1 = g1.vertex_count();
    d.n2 = g2.vertex_count();
    d.m1 = g1.edge_count();
    d.m2 = g2.edge_count();
    d.eci1 = eci(g1, vm1);
    d.eci2 = eci(g2, vm2);
    d.zeta1 = total_eccentricity(vm1);
    d.zeta2 = total_eccentricity(vm2);
    return d;
}

// eci of the product straight from factor invariants, no product graph built.
inline long long eci_by_decomposition(const Graph& g1, const Graph& g2) {
    return decompose_product(g1, g2).value();
}

} // namespace ecci
