#pragma once

// Closed-form bounds on m(n), the minimum edge count of a pancyclic graph
// on n vertices.

#include <cstdint>
#include <optional>
#include <string>

namespace pancyc {

/// Smallest h >= 1 such that log2 applied h times to n is below 2.
/// Evaluated exactly: log2^h(n) < 2 iff n < T_h with T_1 = 4, T_{h+1} = 2^T_h.
int h_iterated_log(std::int64_t n);

/// Smallest k >= 0 with 2^(k+1) - 1 >= n - 2: fewer chords cannot give the
/// n - 2 distinct cycle lengths a pancyclic graph needs.
int bondy_min_chords(int n);
inline int bondy_lower(int n) { return n + bondy_min_chords(n); }

/// Refined upper bound on the number of cycles of a Hamiltonian
/// graph with k chords. k = 0 returns 1.
double rs_cycle_bound(int k);

/// min(2^(k+1) - 1, rs_cycle_bound(k)): the bound actually usable at k.
double effective_cycle_bound(int k);

/// n + C, C the largest k whose effective cycle bound is below n - 2
/// (clamped at 0). Implemented as stated; see rs_lower_strict.
int rs_lower(int n);
/// n + C + 1: C chords give fewer than n - 2 cycles, so one more is needed.
int rs_lower_strict(int n);

/// When a vertex carries c of the k chords, chord subsets with three or more
/// of them close no cycle and subsets with exactly two close at most one, so
/// there are at most 2^(k-c-1) (c^2 + 3c + 4) - 1 cycles. Returns whether
/// that capacity reaches the n - 2 cycles a pancyclic graph needs, compared
/// in exact integers. Requires 0 <= c <= k.
bool degree_capacity_admits(int n, int k, int at_vertex);

/// Necessary condition n - 2 <= 2^(k-delta-1) (delta^2 + 3 delta + 4) - 1
/// for a pancyclic graph with k chords, delta of them at one vertex.
/// Requires delta > 4 and k >= delta.
bool prop1_degree_check(int n, int k, int delta);

struct BoundsReport {
    int n = 0;
    int bondy_lower = 0;
    int rs_lower = 0;
    int rs_lower_strict = 0;
    int h_of_n = 0;
    std::optional<int> construction_upper; // n + 5 when the 5-chord construction is verified pancyclic
    std::string upper_bound_note;
};

BoundsReport bounds_report(int n);

} // namespace pancyc
