#pragma once

// Exhaustive search for the fewest chords that make an n-cycle pancyclic.
//
// Chord sets are enumerated once per dihedral orbit: a set is kept only if
// its sorted chord list is lexicographically least among its 2n images.
// Such a representative always contains a chord at vertex 1, so the sorted
// list starts with (1, v). The stream is cut into shards by its first two
// chords; shards are processed in parallel with OpenMP and merged by shard
// order, so results do not depend on the thread count.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pancyc/graph.hpp"

namespace pancyc {

/// Raised when a search hits its k ceiling or time budget.
class SearchFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxSearchChords = 6;
inline constexpr int kMaxSearchVertices = 63;

struct SearchConfig {
    int max_k = kMaxSearchChords;
    int jobs = 0; // 0: OpenMP default
    bool degree_prune = false;
    bool lower_bound_skip = true;
    bool validate = false; // spectrum-check every pruned candidate
    std::optional<double> time_budget_seconds;
    std::optional<std::filesystem::path> journal_dir;
};

struct SearchResult {
    int n = 0;
    int k_min = 0;
    int m = 0;
    ChordedCycle witness{3, {}};
    /// Canonical chord sets examined, over every k tried. At k_min only sets
    /// up to and including the witness (in lexicographic order) count.
    std::uint64_t explored = 0;
    std::uint64_t pruned = 0;
    double wall_seconds = 0.0;
};

struct ExhaustionCertificate {
    int n = 0;
    int k = 0;
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;
    std::uint64_t validation_violations = 0;
    std::size_t shards = 0;
    std::size_t resumed_shards = 0;
    bool complete = false;
    std::optional<ChordedCycle> counterexample; // lexicographically least pancyclic set
    double wall_seconds = 0.0;
};

SearchResult find_min_chords(int n, const SearchConfig& config = {});

/// Scans every canonical k-chord set on n vertices. A counterexample stops
/// the scan (only shards after it are skipped, so it is the least one).
ExhaustionCertificate prove_no_pancyclic(int n, int k, const SearchConfig& config = {});

struct TableEntry {
    int n = 0;
    std::optional<SearchResult> result;
    std::string error;
};

std::vector<TableEntry> build_table(int from, int to, const SearchConfig& config = {});

/// Calls visit once per dihedral orbit of k-chord sets, in increasing
/// lexicographic order of the representative.
void enumerate_canonical_chord_sets(int n, int k, const std::function<void(const ChordedCycle&)>& visit);
std::vector<ChordedCycle> canonical_chord_sets(int n, int k);

/// Journal path for a (n, k) scan inside dir.
std::filesystem::path journal_path(const std::filesystem::path& dir, int n, int k);

namespace reference {

/// Serial, unsharded search over every k-subset of chords with brute-force
/// canonical forms and full spectra. Kept as a test oracle for the
/// parallel kernel; only practical for small n.
SearchResult find_min_chords(int n, int max_k = kMaxSearchChords);
ExhaustionCertificate prove_no_pancyclic(int n, int k);

} // namespace reference

} // namespace pancyc
