#pragma once

#include <set>
#include <string>
#include <vector>

#include "ecci/graph.hpp"
#include "ecci/indices.hpp"

namespace ecci {

// Floor of the square root, by binary search. No floating point anywhere in
// the bound computations, so equality detection is exact.
inline long long isqrt_floor(long long x) {
    if (x < 0) throw OutOfRangeError("isqrt of a negative number");
    long long lo = 0, hi = 3037000499LL; // floor(sqrt(2^63 - 1))
    while (lo < hi) {
        long long mid = lo + (hi - lo + 1) / 2;
        if (mid * mid <= x) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

// Largest integer a with a^2 - (2n-1)a + 2m >= 0 on the low branch, i.e.
// floor((2n-1 - sqrt((2n-1)^2 - 8m)) / 2). Defined for n-1 <= m < n(n-1)/2.
inline long long a_nm(long long n, long long m) {
    if (n < 2 || m < n - 1 || m >= n * (n - 1) / 2) {
        throw OutOfRangeError("a_nm requires n-1 <= m < n(n-1)/2");
    }
    const long long t = 2 * n - 1;
    long long disc = t * t - 8 * m;
    long long a = (t - isqrt_floor(disc)) / 2;
    auto f = [&](long long x) { return x * x - t * x + 2 * m; };
    while (2 * (a + 1) <= t && f(a + 1) >= 0) ++a;
    while (a >= 1 && f(a) < 0) --a;
    return a;
}

struct BoundFlag {
    bool applicable = false;
    bool holds = true; // vacuously true when not applicable
    bool equality = false;
};

// Every bound on the eccentric connectivity index this library knows, with
// exact equality detection. `holds` must come out true on every connected
// graph; a false flag indicates a bug, not a data state.
struct BoundsReport {
    long long n = 0;
    long long m = 0;
    long long eci_value = 0;
    long long radius = 0;
    long long diameter = 0;

    long long sandwich_lo = 0; // 2 m r(G)
    long long sandwich_hi = 0; // 2 m d(G)
    BoundFlag sandwich_lo_flag, sandwich_hi_flag;

    long long k_degree_count = 0; // vertices of degree n-1
    long long k_bound = 0;        // 4m - k(n-1), radius-one graphs
    BoundFlag k_flag;

    long long a_value = 0;      // a_{n,m}
    long long general_lower = 0; // 4m - a(n-1)
    BoundFlag general_flag;

    long long zagreb_upper = 0; // 2nm - M1
    BoundFlag zagreb_flag;

    Rational dd_lower; // D'(G) / (n-1)
    BoundFlag dd_flag;

    long long star_min = 0; // 3(n-1), n >= 4
    BoundFlag star_flag;

    long long diameter_upper = 0; // d(3n-d+1) + (n-d+1)^2 d
    BoundFlag diameter_flag;
};

inline BoundsReport bounds_report(const Graph& g) {
    const long long n = g.vertex_count();
    if (n < 2) throw TooSmallError("bounds need n >= 2");
    VertexMetrics vm = vertex_metrics(g); // throws on disconnected input
    BoundsReport r;
    r.n = n;
    r.m = g.edge_count();
    r.eci_value = eci(g, vm);
    MetricProfile prof = metric_profile(vm);
    r.radius = prof.radius;
    r.diameter = prof.diameter;

    r.sandwich_lo = narrow_to_i64(int128(2) * r.m * r.radius);
    r.sandwich_hi = narrow_to_i64(int128(2) * r.m * r.diameter);
    r.sandwich_lo_flag = {true, r.eci_value >= r.sandwich_lo, r.eci_value == r.sandwich_lo};
    r.sandwich_hi_flag = {true, r.eci_value <= r.sandwich_hi, r.eci_value == r.sandwich_hi};

    for (int v = 0; v < n; ++v) {
        if (vm.degree[v] == n - 1) ++r.k_degree_count;
    }
    if (r.radius == 1) {
        r.k_bound = 4 * r.m - r.k_degree_count * (n - 1);
        r.k_flag = {true, r.eci_value >= r.k_bound, r.eci_value == r.k_bound};
    }

    if (r.m < n * (n - 1) / 2) {
        r.a_value = a_nm(n, r.m);
        r.general_lower = 4 * r.m - r.a_value * (n - 1);
        r.general_flag = {true, r.eci_value >= r.general_lower, r.eci_value == r.general_lower};
    }

    r.zagreb_upper = narrow_to_i64(int128(2) * n * r.m - zagreb_m1(g));
    r.zagreb_flag = {true, r.eci_value <= r.zagreb_upper, r.eci_value == r.zagreb_upper};

    long long dd = degree_distance(g, vm);
    r.dd_lower = Rational(dd, n - 1);
    // compare eci >= dd/(n-1) by cross multiplication
    int128 lhs = int128(r.eci_value) * (n - 1);
    r.dd_flag = {true, lhs >= int128(dd), lhs == int128(dd)};

    r.star_min = 3 * (n - 1);
    if (n >= 4) {
        r.star_flag = {true, r.eci_value >= r.star_min, r.eci_value == r.star_min};
    }

    const long long d = r.diameter;
    r.diameter_upper =
        narrow_to_i64(int128(d) * (3 * n - d + 1) + int128(n - d + 1) * (n - d + 1) * d);
    r.diameter_flag = {true, r.eci_value <= r.diameter_upper, r.eci_value == r.diameter_upper};
    return r;
}

inline bool all_bounds_hold(const BoundsReport& r) {
    return r.sandwich_lo_flag.holds && r.sandwich_hi_flag.holds && r.k_flag.holds &&
           r.general_flag.holds && r.zagreb_flag.holds && r.dd_flag.holds && r.star_flag.holds &&
           r.diameter_flag.holds;
}

enum class EqualityTag {
    self_centered,       // radius == diameter, both sandwich bounds tight
    g_nm_class,          // general lower bound tight (K_a join H structure)
    kn_minus_ke_or_p4,   // Zagreb upper bound tight
    star,                // 3(n-1) tight, n >= 4
    complete,            // degree-distance bound tight
};

inline const char* equality_tag_name(EqualityTag t) {
    switch (t) {
        case EqualityTag::self_centered: return "self_centered";
        case EqualityTag::g_nm_class: return "G_nm_class";
        case EqualityTag::kn_minus_ke_or_p4: return "Kn_minus_ke_or_P4";
        case EqualityTag::star: return "star";
        case EqualityTag::complete: return "complete";
    }
    return "?";
}

// Which bounds are tight for this graph.
inline std::set<EqualityTag> check_equality_class(const Graph& g) {
    BoundsReport r = bounds_report(g);
    std::set<EqualityTag> tags;
    if (r.radius == r.diameter) tags.insert(EqualityTag::self_centered);
    if (r.general_flag.applicable && r.general_flag.equality) tags.insert(EqualityTag::g_nm_class);
    if (r.zagreb_flag.equality) tags.insert(EqualityTag::kn_minus_ke_or_p4);
    if (r.star_flag.applicable && r.star_flag.equality) tags.insert(EqualityTag::star);
    if (r.dd_flag.equality) tags.insert(EqualityTag::complete);
    return tags;
}

} // namespace ecci
