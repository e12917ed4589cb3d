#include "pancyc/bounds.hpp"

#include <cmath>

#include "pancyc/analysis.hpp"
#include "pancyc/constructions.hpp"
#include "pancyc/graph.hpp"

namespace pancyc {

int h_iterated_log(std::int64_t n) {
    if (n < 2) {
        throw PreconditionError("H(n) needs n >= 2");
    }
    // Tower thresholds 4, 16, 65536, 2^65536; only the first three fit.
    if (n < 4) return 1;
    if (n < 16) return 2;
    if (n < 65536) return 3;
    return 4;
}

int bondy_min_chords(int n) {
    if (n < 3) {
        throw PreconditionError("bounds need n >= 3");
    }
    int k = 0;
    while ((std::int64_t{1} << (k + 1)) - 1 < n - 2) ++k;
    return k;
}

double rs_cycle_bound(int k) {
    if (k < 0) {
        throw PreconditionError("rs_cycle_bound needs k >= 0");
    }
    if (k == 0) return 1.0;
    const double kd = k;
    const double lg = std::log2(kd);
    return std::exp2(kd + 1) - 1 - kd * ((std::sqrt(kd) - 2) / (lg + 2) - 0.25 * lg);
}

double effective_cycle_bound(int k) {
    return std::min(std::exp2(k + 1) - 1, rs_cycle_bound(k));
}

namespace {

int rs_chord_count(int n) {
    if (n < 3) {
        throw PreconditionError("bounds need n >= 3");
    }
    int k = 0;
    while (effective_cycle_bound(k) < n - 2) ++k;
    return k - 1; // largest k still below n - 2, or -1 if none
}

} // namespace

int rs_lower(int n) { return n + std::max(0, rs_chord_count(n)); }

int rs_lower_strict(int n) { return n + rs_chord_count(n) + 1; }

bool degree_capacity_admits(int n, int k, int at_vertex) {
    if (at_vertex < 0 || at_vertex > k || k > 60) {
        throw PreconditionError("degree capacity needs 0 <= c <= k <= 60");
    }
    // n - 2 <= 2^(k-c-1) (c^2+3c+4) - 1  <=>  2 (n-1) <= 2^(k-c) (c^2+3c+4)
    const std::int64_t c = at_vertex;
    const std::int64_t poly = c * c + 3 * c + 4;
    return 2 * static_cast<std::int64_t>(n - 1) <= (std::int64_t{1} << (k - at_vertex)) * poly;
}

bool prop1_degree_check(int n, int k, int delta) {
    if (delta <= 4) {
        throw PreconditionError("max-degree inequality needs delta > 4");
    }
    if (k < delta) {
        throw PreconditionError("max-degree inequality needs k >= delta");
    }
    return degree_capacity_admits(n, k, delta);
}

BoundsReport bounds_report(int n) {
    BoundsReport r;
    r.n = n;
    r.bondy_lower = bondy_lower(n);
    r.rs_lower = rs_lower(n);
    r.rs_lower_strict = rs_lower_strict(n);
    r.h_of_n = h_iterated_log(n);
    if (n >= 22) {
        const auto g = figure1(n - 21);
        if (is_pancyclic(g)) r.construction_upper = g.edge_count();
    }
    r.upper_bound_note = "m(n) <= n + log2(n) + H(n) + O(1); constant unspecified";
    return r;
}

} // namespace pancyc
