#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ecci/enumerate.hpp"
#include "ecci/families.hpp"
#include "ecci/indices.hpp"
#include "ecci/random_graphs.hpp"
#include "ecci/transforms.hpp"

using namespace ecci;

namespace {

// G with the tree T glued on by identifying tree vertex `at` with u.
Graph attach_tree(const Graph& g, int u, const Graph& tree, int at) {
    int n = g.vertex_count();
    auto mapped = [&](int tv) {
        if (tv == at) return u;
        return n + tv - (tv > at ? 1 : 0);
    };
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : tree.edges()) edges.push_back({mapped(e.u), mapped(e.v), 1});
    return Graph(n + tree.vertex_count() - 1, edges);
}

} // namespace

TEST_CASE("pi shift on a P2 base strictly increases eci", "[transforms]") {
    Graph base = build_family({.family = Family::path, .n = 2});
    Graph g11 = attach_pendant_paths(base, 0, 1, 1);
    CHECK(eci(g11) == 9);
    Graph g20 = pi_shift({base, 0, 1, 1});
    CHECK(eci(g20) == 14);

    CHECK(eci(attach_pendant_paths(base, 0, 2, 2)) == 29);
    CHECK(eci(pi_shift({base, 0, 2, 2})) == 31);
}

TEST_CASE("pi shift rejects bad configurations", "[transforms]") {
    Graph base = build_family({.family = Family::path, .n = 2});
    CHECK_THROWS_AS(pi_shift({base, 0, 1, 0}), BadConfigError);        // q = 0
    CHECK_THROWS_AS(pi_shift({base, 0, 1, 2}), BadConfigError);        // p < q
    CHECK_THROWS_AS(pi_shift({build_graph(1, {}), 0, 1, 1}), BadConfigError); // trivial base
    // after shifting to (2, 0) only a single pendant path is left at w
    // (a cycle base, so no base vertex masquerades as a second pendant path)
    Graph c4 = build_family({.family = Family::cycle, .n = 4});
    Graph g20 = attach_pendant_paths(c4, 0, 2, 0);
    CHECK_THROWS_AS(pi_shift_at(g20, 0), BadConfigError);
}

TEST_CASE("structural pi shift infers the two paths", "[transforms]") {
    // C4 base keeps w's other neighbors from looking like pendant paths
    Graph base = build_family({.family = Family::cycle, .n = 4});
    Graph g = attach_pendant_paths(base, 0, 3, 2);
    Graph shifted = pi_shift_at(g, 0);
    Graph expected = attach_pendant_paths(base, 0, 4, 1);
    CHECK(shifted.vertex_count() == expected.vertex_count());
    CHECK(eci(shifted) == eci(expected));
    CHECK(eci(shifted) > eci(g));
    // three pendant paths at w: ambiguous without explicit selection
    Graph amb = attach_pendant_paths(attach_pendant_paths(base, 0, 1, 1), 0, 2, 0);
    CHECK_THROWS_AS(pi_shift_at(amb, 0), BadConfigError);
}

TEST_CASE("pi shift strictly increases eci on random configurations", "[transforms]") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 100; ++trial) {
        int nb = 2 + static_cast<int>(rng() % 13);
        Graph base = random_connected_graph(nb, static_cast<int>(rng() % 4), rng);
        int w = static_cast<int>(rng() % nb);
        long long p = 1 + static_cast<long long>(rng() % 6);
        long long q = 1 + static_cast<long long>(rng() % p);
        Graph before = attach_pendant_paths(base, w, p, q);
        Graph after = pi_shift({base, w, p, q});
        CHECK(eci(after) > eci(before));
    }
}

TEST_CASE("delta transform at a central spider vertex leaves eci unchanged", "[transforms]") {
    // T(2,1,1): the root is central, so the transform applies but the theorem
    // promises nothing; the result is in fact isomorphic.
    Graph spider = build_family({.family = Family::starlike, .lengths = {2, 1, 1}});
    CHECK(eci(spider) == 19);
    DeltaResult res = delta_transform_info(spider, 0);
    CHECK(res.moved_paths == 1);
    CHECK(res.moved_length_sum == 1);
    CHECK(eci(res.tree) == 19);
    CHECK(canonical_tree_code(res.tree) == canonical_tree_code(spider));
}

TEST_CASE("delta transform structural preconditions", "[transforms]") {
    Graph path = build_family({.family = Family::path, .n = 6});
    CHECK_THROWS_AS(delta_transform(path, 2), NotApplicableError); // degree 2
    // center joined to three little stars: every neighbor subtree branches
    Graph bouquet = build_graph(10, {{0, 1}, {1, 2}, {1, 3}, {0, 4}, {4, 5}, {4, 6},
                                     {0, 7}, {7, 8}, {7, 9}});
    CHECK_THROWS_AS(delta_transform(bouquet, 0), NotApplicableError);
    CHECK_THROWS_AS(delta_transform(build_family({.family = Family::cycle, .n = 6}), 0),
                    NotATreeError);
}

TEST_CASE("delta decrease equals twice the moved length under the theorem hypotheses",
          "[transforms]") {
    // exhaustive over all trees up to 9 vertices
    int checked = 0;
    for (int n = 4; n <= 9; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            for (int v : delta_theorem_vertices(t)) {
                DeltaResult res = delta_transform_info(t, v);
                long long drop = eci(t) - eci(res.tree);
                CHECK(drop == 2 * res.moved_length_sum);
                CHECK(drop > 0);
                ++checked;
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("caterpillar legs consolidate toward the center without increasing eci",
          "[transforms]") {
    // start with pendants spread along the spine and let the transform walk
    // them inward; each eligible step must drop eci by exactly 2 * moved
    Graph cat = build_family(
        {.family = Family::caterpillar, .n = 12, .d = 6, .lengths = {2, 1, 0, 1, 1}});
    long long before = eci(cat);
    int steps = 0;
    while (true) {
        auto vs = delta_theorem_vertices(cat);
        if (vs.empty()) break;
        DeltaResult res = delta_transform_info(cat, vs.front());
        long long after = eci(res.tree);
        CHECK(before - after == 2 * res.moved_length_sum);
        cat = res.tree;
        before = after;
        ++steps;
    }
    CHECK(steps > 0);
    MetricProfile p = metric_profile(cat);
    CHECK(p.diameter == 6); // consolidation preserves the diameter
}

TEST_CASE("rotation drives the broom toward the Volkmann shape", "[transforms]") {
    Graph cur = build_family({.family = Family::broom, .n = 8, .delta = 3});
    std::vector<long long> values{eci(cur)};
    while (true) {
        try {
            cur = rotate_deepest(cur, 3);
        } catch (const NoEligiblePairError&) {
            break;
        }
        values.push_back(eci(cur));
    }
    CHECK(values == std::vector<long long>{65, 54, 43});
    for (size_t i = 1; i < values.size(); ++i) CHECK(values[i] < values[i - 1]);
}

TEST_CASE("rotation fixed points", "[transforms]") {
    Graph star = build_family({.family = Family::star, .n = 8});
    CHECK_THROWS_AS(rotate_deepest(star, 7), NoEligiblePairError);
    // perfect Volkmann tree: 1 + 3 + 6 vertices, last level full
    Graph vt = build_family({.family = Family::volkmann, .n = 10, .delta = 3});
    CHECK_THROWS_AS(rotate_deepest(vt, 3), NoEligiblePairError);
}

TEST_CASE("rotation strictly decreases eci on random trees", "[transforms]") {
    std::mt19937_64 rng(77);
    int applied = 0;
    while (applied < 60) {
        int n = 5 + static_cast<int>(rng() % 12);
        Graph t = random_tree(n, rng);
        int maxdeg = 0;
        for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, t.degree(v));
        long long cap = 3 + static_cast<long long>(rng() % std::max(1, maxdeg - 2));
        try {
            RotateResult res = rotate_deepest_info(t, cap);
            CHECK(eci(res.tree) < eci(t));
            ++applied;
        } catch (const NoEligiblePairError&) {
        }
    }
}

TEST_CASE("attaching a star, a tree, a path: strictly increasing eci", "[transforms]") {
    // for any tree T that is neither the path nor the star on k vertices:
    //   eci(G + S_k at center) < eci(G + T) < eci(G + P_k at end)
    std::mt19937_64 rng(2024);
    int trials = 0;
    while (trials < 30) {
        int ng = 2 + static_cast<int>(rng() % 7);
        Graph g = random_connected_graph(ng, static_cast<int>(rng() % 3), rng);
        int k = 5 + static_cast<int>(rng() % 4);
        std::vector<Graph> candidates;
        for (const Graph& t : enumerate_trees(k)) {
            MetricProfile p = metric_profile(t);
            int maxdeg = 0;
            for (int v = 0; v < k; ++v) maxdeg = std::max(maxdeg, t.degree(v));
            if (maxdeg < k - 1 && p.diameter < k - 1) candidates.push_back(t);
        }
        const Graph& t = candidates[rng() % candidates.size()];
        int u = static_cast<int>(rng() % ng);
        int at = static_cast<int>(rng() % k);
        long long with_tree = eci(attach_tree(g, u, t, at));
        long long with_path =
            eci(attach_tree(g, u, build_family({.family = Family::path, .n = k}), 0));
        long long with_star =
            eci(attach_tree(g, u, build_family({.family = Family::star, .n = k}), 0));
        CHECK(with_star < with_tree);
        CHECK(with_tree < with_path);
        ++trials;
    }
}
