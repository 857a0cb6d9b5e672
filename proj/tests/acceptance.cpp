// Acceptance suite: runs every top-level requirement end to end and prints
// one PASS/FAIL line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ecci/ecci.hpp"

using namespace ecci;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Checker {
    bool ok = true;
    std::ostringstream detail;
    long long checks = 0;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond) {
            ok = false;
            detail << " FAILED{" << what << "}";
        }
    }
};

double time_best_of(int reps, const std::function<void()>& fn) {
    double best = 0;
    for (int r = 0; r < reps; ++r) {
        auto t0 = Clock::now();
        fn();
        double s = seconds_since(t0);
        if (r == 0 || s < best) best = s;
    }
    return best;
}

// ---------------------------------------------------------------- criterion 1
Checker closed_form_agreement() {
    Checker c;
    auto agree = [&](const FamilySpec& spec, const std::string& label) {
        FormulaCheck fc = oracle_vs_closed_form(spec);
        c.expect(fc.agree, label + " oracle " + std::to_string(fc.oracle) + " != formula " +
                               std::to_string(fc.formula));
    };
    for (int n = 1; n <= 12; ++n) agree({.family = Family::complete, .n = n}, "K_" + std::to_string(n));
    for (int a = 2; a <= 8; ++a) {
        for (int b = 2; b <= 8; ++b) {
            agree({.family = Family::complete_bipartite, .a = a, .b = b}, "K_{a,b}");
        }
    }
    for (int n = 1; n <= 60; ++n) agree({.family = Family::path, .n = n}, "P_n");
    for (int n = 3; n <= 60; ++n) agree({.family = Family::star, .n = n}, "S_n");
    for (int n = 3; n <= 60; ++n) agree({.family = Family::cycle, .n = n}, "C_n");
    for (int n = 0; n <= 10; ++n) agree({.family = Family::hypercube, .n = n}, "Q_n");
    for (int n = 5; n <= 30; ++n) {
        for (int d = 3; d <= n - 2; ++d) agree({.family = Family::broom, .n = n, .delta = d}, "broom");
    }
    for (int n = 3; n <= 30; ++n) {
        for (int m = (n - 1) / 2 + 1; m <= n - 1; ++m) {
            if (2 * m > n - 1) agree({.family = Family::spur, .n = n, .m = m}, "spur");
        }
    }
    for (int n = 4; n <= 30; ++n) {
        for (int d = 2; d <= n - 2; ++d) {
            agree({.family = Family::caterpillar_cndi, .n = n, .d = d, .i = d / 2}, "caterpillar");
        }
    }
    for (int n = 4; n <= 20; ++n) {
        for (int k = 3; k <= n - 1; ++k) agree({.family = Family::unicyclic_hnk, .n = n, .k = k}, "H_{n,k}");
    }
    for (int n = 2; n <= 12; ++n) {
        for (int k = 0; k <= n / 2; ++k) {
            if (n == 2 && k == 1) continue;
            agree({.family = Family::complete_minus_matching, .n = n, .k = k}, "K_n-ke");
        }
    }
    for (int a = 2; a <= 9; ++a) {
        for (int b = 2; b <= 9; ++b) {
            agree({.family = Family::grid, .a = a, .b = b}, "grid");
            if (a >= 3 && b >= 3) agree({.family = Family::nanotorus, .a = a, .b = b}, "nanotorus");
            if (b >= 3) agree({.family = Family::nanotube, .a = a, .b = b}, "nanotube");
        }
    }
    return c;
}

// ---------------------------------------------------------------- criterion 2
Checker lollipop_discrepancy() {
    Checker c;
    FormulaCheck fc = oracle_vs_closed_form({.family = Family::lollipop, .n = 12, .d = 4});
    c.expect(fc.oracle == 302, "LP_{12,4} construction must give 302");
    c.expect(fc.formula == 297, "printed formula must give 297");
    c.expect(!fc.agree, "the mismatch itself is the expected outcome");
    c.detail << " construction=302, printed formula=297 (formula flagged, construction is ground truth)";
    return c;
}

// ---------------------------------------------------------------- criterion 3
Checker linear_algorithm() {
    Checker c;
    std::mt19937_64 rng(20260809);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 200);
        Graph t = random_weighted_tree(n, 10, rng);
        VertexMetrics vm = vertex_metrics(t);
        long long oracle = eci(t, vm);
        if (eci_tree(t) != oracle) {
            c.expect(false, "eci_tree mismatch at n=" + std::to_string(n));
            break;
        }
        ++c.checks;
        if (trial % 97 == 0) {
            int root = static_cast<int>(rng() % n);
            c.expect(tree_eccentricities(t, root) == vm.ecc, "ecc vector mismatch");
        }
    }

    Graph path5 = build_family({.family = Family::path, .n = 100000});
    Graph path6 = build_family({.family = Family::path, .n = 1000000});
    Graph star5 = build_family({.family = Family::star, .n = 100000});
    Graph star6 = build_family({.family = Family::star, .n = 1000000});
    volatile long long sink = 0;
    double tp5 = time_best_of(5, [&] { sink = eci_tree(path5); });
    double tp6 = time_best_of(5, [&] { sink = eci_tree(path6); });
    double ts5 = time_best_of(5, [&] { sink = eci_tree(star5); });
    double ts6 = time_best_of(5, [&] { sink = eci_tree(star6); });
    (void)sink;
    c.expect(tp6 < 5.0, "path 1e6 took " + std::to_string(tp6) + "s");
    c.expect(ts6 < 5.0, "star 1e6 took " + std::to_string(ts6) + "s");
    c.expect(tp6 / tp5 <= 20.0, "path ratio " + std::to_string(tp6 / tp5));
    c.expect(ts6 / ts5 <= 20.0, "star ratio " + std::to_string(ts6 / ts5));
    char buf[160];
    std::snprintf(buf, sizeof(buf), " path 1e6: %.3fs (x%.1f), star 1e6: %.3fs (x%.1f)",
                  tp6, tp6 / tp5, ts6, ts6 / ts5);
    c.detail << buf;
    return c;
}

// ---------------------------------------------------------------- criterion 4
Checker bounds_universal() {
    Checker c;
    for (int n = 2; n <= 10; ++n) {
        enumerate_trees(n, [&](const Graph& t) {
            c.expect(all_bounds_hold(bounds_report(t)), "tree bounds at n=" + std::to_string(n));
        });
    }
    for (int n = 3; n <= 9; ++n) {
        enumerate_unicyclic(n, [&](const Graph& g) {
            c.expect(all_bounds_hold(bounds_report(g)),
                     "unicyclic bounds at n=" + std::to_string(n));
        });
    }
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng() % 29);
        Graph g = random_connected_graph(n, static_cast<int>(rng() % 12), rng);
        c.expect(all_bounds_hold(bounds_report(g)), "random graph bounds");
    }
    // equality witnesses
    for (int n = 4; n <= 10; ++n) {
        BoundsReport r = bounds_report(build_family({.family = Family::star, .n = n}));
        c.expect(r.star_flag.equality, "star equality");
    }
    for (int n = 3; n <= 12; ++n) {
        BoundsReport r = bounds_report(build_family({.family = Family::cycle, .n = n}));
        c.expect(r.sandwich_lo_flag.equality && r.sandwich_hi_flag.equality,
                 "cycle self-centered equality");
    }
    c.expect(bounds_report(build_family({.family = Family::path, .n = 4})).zagreb_flag.equality,
             "P4 Zagreb equality");
    for (int n = 5; n <= 10; ++n) {
        for (int k = 0; k <= n / 2; ++k) {
            BoundsReport r = bounds_report(
                build_family({.family = Family::complete_minus_matching, .n = n, .k = k}));
            c.expect(r.zagreb_flag.equality, "K_n-ke Zagreb equality");
        }
    }
    for (int n = 2; n <= 10; ++n) {
        BoundsReport r = bounds_report(build_family({.family = Family::complete, .n = n}));
        c.expect(r.dd_flag.equality, "K_n degree-distance equality");
    }
    for (int n = 4; n <= 12; ++n) {
        std::vector<Edge> e = build_family({.family = Family::star, .n = n}).edges();
        e.push_back({1, 2, 1});
        BoundsReport r = bounds_report(Graph(n, e));
        c.expect(r.general_flag.equality && r.eci_value == 3 * n + 1,
                 "star+edge attains 3n+1");
    }
    for (int n = 5; n <= 12; ++n) {
        std::vector<Edge> e = build_family({.family = Family::star, .n = n}).edges();
        e.push_back({1, 2, 1});
        e.push_back({3, 4, 1});
        BoundsReport r = bounds_report(Graph(n, e));
        c.expect(r.general_flag.equality && r.eci_value == 3 * n + 5,
                 "star+two-edges attains 3n+5");
    }
    return c;
}

// ---------------------------------------------------------------- criterion 5
Checker extremal_suites() {
    Checker c;
    for (int n = 4; n <= 10; ++n) {
        std::vector<Suite> suites{Suite::global, Suite::pendent, Suite::matching,
                                  Suite::independence, Suite::diameter, Suite::radius};
        if (n >= 5) suites.push_back(Suite::max_degree);
        for (Suite s : suites) {
            for (const ExtremalReport& r : verify_extremal(s, n)) {
                std::string label = r.suite + " n=" + std::to_string(n) +
                                    " param=" + std::to_string(r.param);
                for (const std::string& note : r.notes) label += " | " + note;
                c.expect(r.match, label);
            }
        }
    }
    for (int n = 3; n <= 9; ++n) {
        for (const ExtremalReport& r : verify_extremal(Suite::girth, n)) {
            std::string label = "girth n=" + std::to_string(n) + " k=" + std::to_string(r.param);
            for (const std::string& note : r.notes) label += " | " + note;
            c.expect(r.match, label);
        }
    }
    return c;
}

// ---------------------------------------------------------------- criterion 6
Checker transformation_monotonicity() {
    Checker c;
    std::mt19937_64 rng(606);

    for (int trial = 0; trial < 500; ++trial) {
        int nb = 2 + static_cast<int>(rng() % 13);
        Graph base = random_connected_graph(nb, static_cast<int>(rng() % 4), rng);
        int w = static_cast<int>(rng() % nb);
        long long p = 1 + static_cast<long long>(rng() % 6);
        long long q = 1 + static_cast<long long>(rng() % p);
        long long before = eci(attach_pendant_paths(base, w, p, q));
        long long after = eci(pi_shift({base, w, p, q}));
        c.expect(after > before, "pi shift must strictly increase");
    }

    int applied = 0, attempts = 0;
    while (applied < 500 && attempts < 100000) {
        ++attempts;
        int n = 5 + static_cast<int>(rng() % 36);
        Graph t = random_tree(n, rng);
        std::vector<int> vs = delta_theorem_vertices(t);
        if (vs.empty()) continue;
        DeltaResult res = delta_transform_info(t, vs.front());
        long long drop = eci(t) - eci(res.tree);
        c.expect(drop == 2 * res.moved_length_sum && drop > 0,
                 "delta drop != 2 * moved length");
        ++applied;
    }
    c.expect(applied == 500, "could not find 500 eligible delta configurations");

    // attach star < attach tree < attach path, 200 random triples
    std::vector<std::vector<Graph>> pool(9);
    for (int k = 5; k <= 8; ++k) {
        for (const Graph& t : enumerate_trees(k)) {
            MetricProfile p = metric_profile(t);
            int maxdeg = 0;
            for (int v = 0; v < k; ++v) maxdeg = std::max(maxdeg, t.degree(v));
            if (maxdeg < k - 1 && p.diameter < k - 1) pool[k].push_back(t);
        }
    }
    auto attach_tree = [](const Graph& g, int u, const Graph& tree, int at) {
        int n = g.vertex_count();
        auto mapped = [&](int tv) { return tv == at ? u : n + tv - (tv > at ? 1 : 0); };
        std::vector<Edge> edges = g.edges();
        for (const Edge& e : tree.edges()) edges.push_back({mapped(e.u), mapped(e.v), 1});
        return Graph(n + tree.vertex_count() - 1, edges);
    };
    for (int trial = 0; trial < 200; ++trial) {
        int ng = 2 + static_cast<int>(rng() % 7);
        Graph g = random_connected_graph(ng, static_cast<int>(rng() % 3), rng);
        int k = 5 + static_cast<int>(rng() % 4);
        const Graph& t = pool[k][rng() % pool[k].size()];
        int u = static_cast<int>(rng() % ng);
        int at = static_cast<int>(rng() % k);
        long long with_tree = eci(attach_tree(g, u, t, at));
        long long with_path = eci(attach_tree(g, u, build_family({.family = Family::path, .n = k}), 0));
        long long with_star = eci(attach_tree(g, u, build_family({.family = Family::star, .n = k}), 0));
        c.expect(with_star < with_tree && with_tree < with_path,
                 "attachment ordering star < tree < path");
    }

    for (int n : {10, 20, 30}) {
        long long prev = eci_tree(build_family({.family = Family::path, .n = n}));
        for (int p = 3; p <= n - 1; ++p) {
            long long cur = eci_tree(build_family({.family = Family::balanced_starlike, .n = n, .p = p}));
            c.expect(cur < prev, "balanced starlike chain at n=" + std::to_string(n));
            prev = cur;
        }
        c.expect(prev == eci_tree(build_family({.family = Family::star, .n = n})),
                 "balanced starlike chain must end at the star");

        prev = eci_tree(build_family({.family = Family::star, .n = n}));
        for (int delta = n - 2; delta >= 3; --delta) {
            long long cur = eci_tree(build_family({.family = Family::broom, .n = n, .delta = delta}));
            c.expect(cur > prev, "broom chain at n=" + std::to_string(n));
            prev = cur;
        }
        c.expect(prev < eci_tree(build_family({.family = Family::path, .n = n})),
                 "broom chain must stay below the path");

        prev = eci_tree(build_family({.family = Family::star, .n = n}));
        for (int d = 3; d <= n - 2; ++d) {
            long long cur = eci_tree(
                build_family({.family = Family::caterpillar_cndi, .n = n, .d = d, .i = d / 2}));
            c.expect(cur > prev, "caterpillar chain at n=" + std::to_string(n));
            prev = cur;
        }
        c.expect(prev < eci_tree(build_family({.family = Family::path, .n = n})),
                 "caterpillar chain must stay below the path");
    }
    return c;
}

// ---------------------------------------------------------------- criterion 7
Checker product_formula() {
    Checker c;
    std::mt19937_64 rng(707);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g1 = random_connected_graph(1 + static_cast<int>(rng() % 12),
                                          static_cast<int>(rng() % 4), rng);
        Graph g2 = random_connected_graph(1 + static_cast<int>(rng() % 12),
                                          static_cast<int>(rng() % 4), rng);
        c.expect(eci_by_decomposition(g1, g2) == eci(cartesian_product(g1, g2)),
                 "decomposition != oracle");
    }
    for (int a = 3; a <= 9; ++a) {
        for (int b = 3; b <= 9; ++b) {
            Graph torus = cartesian_product(build_family({.family = Family::cycle, .n = a}),
                                            build_family({.family = Family::cycle, .n = b}));
            VertexMetrics vm = vertex_metrics(torus);
            c.expect(eci(torus, vm) == 4 * total_eccentricity(vm),
                     "4-regular identity eci = 4 zeta");
        }
    }
    return c;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Checker()> fn;
        double budget_seconds;
    };
    const std::vector<Criterion> criteria{
        {1, "closed-form agreement across all family grids", closed_form_agreement, 60.0},
        {2, "lollipop formula discrepancy documented", lollipop_discrepancy, 60.0},
        {3, "linear tree algorithm: equivalence and linearity", linear_algorithm, 0.0},
        {4, "bounds hold universally with equality witnesses", bounds_universal, 0.0},
        {5, "extremal suites match by exhaustive enumeration", extremal_suites, 600.0},
        {6, "transformation monotonicity and ordering chains", transformation_monotonicity, 0.0},
        {7, "Cartesian product formula", product_formula, 0.0},
    };
    int failures = 0;
    for (const Criterion& cr : criteria) {
        auto t0 = Clock::now();
        Checker c;
        try {
            c = cr.fn();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail << " exception{" << e.what() << "}";
        }
        double elapsed = seconds_since(t0);
        if (cr.budget_seconds > 0 && elapsed > cr.budget_seconds) {
            c.ok = false;
            c.detail << " over time budget " << cr.budget_seconds << "s";
        }
        if (!c.ok) ++failures;
        std::printf("[%s] criterion %d: %s (%lld checks, %.2fs)%s\n", c.ok ? "PASS" : "FAIL",
                    cr.id, cr.name, c.checks, elapsed, c.detail.str().c_str());
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("acceptance: %d criteria FAILED\n", failures);
    }
    return failures;
}
